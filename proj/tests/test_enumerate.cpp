#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "xxxr/enumerate.hpp"
#include "xxxr/forbidden.hpp"
#include "xxxr/transduce.hpp"

using namespace xxxr;

TEST_CASE("counts match the brute force up to length 12") {
    std::vector<std::uint64_t> counts = count_avoiders_up_to(12);
    for (int n = 0; n <= 12; ++n) {
        std::uint64_t brute = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
            Bits w;
            for (int i = 0; i < n; ++i) w += ((code >> i) & 1) ? '1' : '0';
            if (avoids_xxxr(w)) ++brute;
        }
        CHECK(counts[n] == brute);
    }
    CHECK(counts[1] == 2);
    CHECK(counts[5] == 16);
    CHECK(counts[10] == 80);
}

TEST_CASE("length-3 avoiders in order") {
    std::vector<Bits> words = enumerate_avoiders(3);
    REQUIRE(words.size() == 6);
    CHECK(words == std::vector<Bits>{"001", "010", "011", "100", "101", "110"});
}

TEST_CASE("K enumeration agrees with the definition") {
    for (int n = 0; n <= 10; ++n) {
        std::vector<Bits> k_words = enumerate_k_words(n);
        std::set<Bits> from_k(k_words.begin(), k_words.end());
        std::set<Bits> filtered;
        for (const Bits& w : enumerate_avoiders(n)) {
            if (is_in_K(w)) filtered.insert(w);
        }
        CHECK(from_k == filtered);
    }
    CHECK(count_k_words_up_to(10)[10] == enumerate_k_words(10).size());
}

TEST_CASE("preimage words have avoiding images and are factor closed") {
    for (int n = 0; n <= 8; ++n) {
        for (const SLWord& u : enumerate_m_words(n)) {
            CHECK(avoids_xxxr(h_map(u)));
            for (std::size_t i = 0; i < u.size(); ++i) {
                for (std::size_t m = 1; i + m <= u.size(); ++m) {
                    CHECK(avoids_xxxr(h_map(u.substr(i, m))));
                }
            }
        }
    }
    CHECK(count_m_words_up_to(8)[8] == enumerate_m_words(8).size());
}

TEST_CASE("nested language generation") {
    auto words = generate_lower_language(12);
    std::set<SLWord> seen;
    for (const auto& w : words) seen.insert(w.word);
    CHECK(seen.size() == words.size());
    CHECK(seen.count("L") == 1);
    CHECK(seen.count("LS") == 1);
    CHECK(seen.count("LSSS") == 1);
    CHECK(seen.count("LSLSLL") == 1);  // psi(L)·L, the shortest two-level word
    CHECK(seen.count("SL") == 0);

    for (const auto& w : words) {
        // Rebuild the word from its exponent list, innermost level first.
        SLWord rebuilt = "L" + SLWord(w.exponents.back(), 'S');
        for (std::size_t i = w.exponents.size() - 1; i-- > 0;) {
            rebuilt = psi(rebuilt) + "L" + SLWord(w.exponents[i], 'S');
        }
        CHECK(rebuilt == w.word);
    }
}

TEST_CASE("nested language counting formula") {
    CHECK(count_lower_language(1) == 1);
    CHECK(count_lower_language(4) == 1);
    CHECK(count_lower_language(6) == 2);

    auto words = generate_lower_language(24);
    std::vector<std::uint64_t> generated(25, 0);
    for (const auto& w : words) ++generated[w.word.size()];
    for (int n = 1; n <= 24; ++n) CHECK(generated[n] == count_lower_language(n));
}

TEST_CASE("nested language factor list: five hold, the sixth does not") {
    auto factors = lower_language_forbidden_factors();
    REQUIRE(factors.size() == 6);
    // The first five entries never occur in generated words. The sixth,
    // psi(SLSLS), does occur: psi(S) = LSL is a prefix of psi(L) = LSLSL, so
    // the image of a factor SLSLL straddles it. Shortest violating word is
    // psi(psi(L)L)L at length 27.
    std::size_t shortest_sixth = 0;
    for (const auto& w : generate_lower_language(30)) {
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            CHECK(w.word.find(factors[i]) == std::string::npos);
        if (shortest_sixth == 0 && w.word.find(factors.back()) != std::string::npos)
            shortest_sixth = w.word.size();
    }
    CHECK(factors.back() == psi("SLSLS"));
    CHECK(shortest_sixth == 27);
    CHECK(lower_language_images_avoid(20));
}

TEST_CASE("partition counting") {
    CHECK(partition_count(0, {3}) == 1);
    CHECK(partition_count(7, {1}) == 1);
    CHECK(partition_count(4, {1, 2, 4}) == 4);
    for (int n = 0; n <= 40; ++n) CHECK(partition_count(n, {1, 2}) == n / 2 + 1);
    // order of parts and duplicates must not matter
    CHECK(partition_count(9, {2, 1, 2}) == partition_count(9, {1, 2}));
}

TEST_CASE("slot counting with powers of two stays below the nested count") {
    CHECK(p2_form_count(2) == 1);
    for (int n = 1; n <= 30; ++n) {
        CHECK(count_lower_language(n) >= p2_form_count(n));
    }
}

TEST_CASE("growth report rows") {
    auto rows = growth_report(16);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].a_n == 2);
    CHECK(rows[0].lg_ratio == 0.0);
    CHECK(rows[15].n == 16);
    CHECK(rows[15].a_n == 244);
    CHECK(rows[15].lg_ratio > 0.49);
    CHECK(rows[15].lg_ratio < 0.50);

    std::ostringstream os;
    write_growth_csv(os, rows);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,a_n,lower_count,p2_partitions,fib_partitions,lg_ratio");
    std::getline(is, line);
    CHECK(line == "1,2,1,1,1,0.000000");
}

TEST_CASE("crosscheck against the bundled table") {
    std::ifstream in(std::string(XXXR_SOURCE_DIR) + "/data/b241903.txt");
    REQUIRE(in.good());
    CrosscheckResult res = oeis_crosscheck(in, 24);
    CHECK_FALSE(res.parse_error);
    CHECK(res.rows == 24);
    CHECK(res.mismatches.empty());
}

TEST_CASE("crosscheck flags a corrupted row") {
    std::istringstream in("1 2\n2 4\n3 6\n4 10\n5 17\n");
    CrosscheckResult res = oeis_crosscheck(in);
    REQUIRE(res.mismatches.size() == 1);
    CHECK(res.mismatches[0].n == 5);
    CHECK(res.mismatches[0].computed == 16);
    CHECK(res.mismatches[0].file_value == 17);
}

TEST_CASE("crosscheck warns on an empty file") {
    std::istringstream in("");
    CrosscheckResult res = oeis_crosscheck(in);
    CHECK(res.rows == 0);
    CHECK(res.mismatches.empty());
    CHECK_FALSE(res.message.empty());
}

TEST_CASE("crosscheck rejects malformed rows") {
    std::istringstream in("1 2\nnot a row\n");
    CrosscheckResult res = oeis_crosscheck(in);
    CHECK(res.parse_error);
}
