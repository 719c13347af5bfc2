#include "xxxr/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "xxxr/transduce.hpp"

namespace xxxr {

namespace {

void walk_binary(Bits& w, int max_n, bool k_only, std::vector<std::uint64_t>* counts,
                 std::vector<Bits>* exact, int exact_n) {
    if (counts) {
        if (!k_only || (!w.empty() && w.back() == '1')) ++(*counts)[w.size()];
    }
    if (exact && static_cast<int>(w.size()) == exact_n) {
        if (!k_only || (!w.empty() && w.back() == '1')) exact->push_back(w);
    }
    if (static_cast<int>(w.size()) >= max_n) return;
    for (char b : {'0', '1'}) {
        if (k_only && w.empty() && b != '0') continue;
        if (!extend_ok(w, b)) continue;
        w.push_back(b);
        walk_binary(w, max_n, k_only, counts, exact, exact_n);
        w.pop_back();
    }
}

const Bits& m_letter_image(char letter, std::size_t position) {
    static const Bits imgs[2][2] = {{"00100", "11011"}, {"00100100", "11011011"}};
    return imgs[letter == 'L' ? 1 : 0][position % 2];
}

void walk_m(SLWord& u, Bits& image, int max_n, std::vector<std::uint64_t>* counts,
            std::vector<SLWord>* exact, int exact_n) {
    if (counts) ++(*counts)[u.size()];
    if (exact && static_cast<int>(u.size()) == exact_n) exact->push_back(u);
    if (static_cast<int>(u.size()) >= max_n) return;
    for (char letter : {'L', 'S'}) {
        const Bits& img = m_letter_image(letter, u.size());
        std::size_t base = image.size();
        bool grows = true;
        for (char b : img) {
            if (!extend_ok(image, b)) {
                grows = false;
                break;
            }
            image.push_back(b);
        }
        if (grows) {
            u.push_back(letter);
            walk_m(u, image, max_n, counts, exact, exact_n);
            u.pop_back();
        }
        image.resize(base);
    }
}

void check_max_n(int max_n) {
    if (max_n < 0) throw std::invalid_argument("enumeration bound must be non-negative");
}

}  // namespace

std::vector<std::uint64_t> count_avoiders_up_to(int max_n) {
    check_max_n(max_n);
    std::vector<std::uint64_t> counts(max_n + 1, 0);
    Bits w;
    walk_binary(w, max_n, false, &counts, nullptr, -1);
    return counts;
}

std::uint64_t count_avoiders(int n) {
    check_max_n(n);
    return count_avoiders_up_to(n)[n];
}

std::vector<std::uint64_t> count_k_words_up_to(int max_n) {
    check_max_n(max_n);
    std::vector<std::uint64_t> counts(max_n + 1, 0);
    Bits w;
    walk_binary(w, max_n, true, &counts, nullptr, -1);
    return counts;
}

std::vector<std::uint64_t> count_m_words_up_to(int max_n) {
    check_max_n(max_n);
    std::vector<std::uint64_t> counts(max_n + 1, 0);
    SLWord u;
    Bits image;
    walk_m(u, image, max_n, &counts, nullptr, -1);
    return counts;
}

std::vector<Bits> enumerate_avoiders(int n) {
    check_max_n(n);
    std::vector<Bits> out;
    Bits w;
    walk_binary(w, n, false, nullptr, &out, n);
    return out;
}

std::vector<Bits> enumerate_k_words(int n) {
    check_max_n(n);
    std::vector<Bits> out;
    Bits w;
    walk_binary(w, n, true, nullptr, &out, n);
    return out;
}

std::vector<SLWord> enumerate_m_words(int n) {
    check_max_n(n);
    std::vector<SLWord> out;
    SLWord u;
    Bits image;
    walk_m(u, image, n, nullptr, &out, n);
    return out;
}

std::vector<LowerWord> generate_lower_language(int max_len) {
    check_max_n(max_len);
    std::vector<LowerWord> accepted;
    std::vector<LowerWord> level;
    // Innermost level first: L·S^k.
    for (int k = 0; 1 + k <= max_len; ++k) {
        LowerWord w;
        w.word = "L" + SLWord(k, 'S');
        w.exponents = {k};
        level.push_back(std::move(w));
    }
    while (!level.empty()) {
        accepted.insert(accepted.end(), level.begin(), level.end());
        std::vector<LowerWord> next;
        for (const LowerWord& w : level) {
            SLWord base = psi(w.word) + "L";
            if (static_cast<int>(base.size()) > max_len) continue;
            for (int k = 0; static_cast<int>(base.size()) + k <= max_len; ++k) {
                LowerWord nw;
                nw.word = base + SLWord(k, 'S');
                nw.exponents.reserve(w.exponents.size() + 1);
                nw.exponents.push_back(k);
                nw.exponents.insert(nw.exponents.end(), w.exponents.begin(), w.exponents.end());
                next.push_back(std::move(nw));
            }
        }
        level = std::move(next);
    }
    std::sort(accepted.begin(), accepted.end(), [](const LowerWord& a, const LowerWord& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    accepted.erase(std::unique(accepted.begin(), accepted.end(),
                               [](const LowerWord& a, const LowerWord& b) {
                                   return a.word == b.word;
                               }),
                   accepted.end());
    return accepted;
}

std::uint64_t count_lower_language(int n) {
    if (n < 0) return 0;
    std::uint64_t total = 0;
    std::uint64_t base = 0;
    std::vector<std::int64_t> coins;
    for (int m = 0;; ++m) {
        base += fib(3 * m + 1);
        if (base > static_cast<std::uint64_t>(n)) break;
        coins.push_back(static_cast<std::int64_t>(fib(3 * m)));
        total += partition_count(static_cast<std::int64_t>(n - base), coins);
    }
    return total;
}

namespace {

bool lower_images_avoid(int max_len, Parity parity) {
    for (const LowerWord& w : generate_lower_language(max_len)) {
        if (!avoids_xxxr(h_map(w.word, parity))) return false;
    }
    return true;
}

}  // namespace

bool lower_language_images_avoid(int max_len) {
    return lower_images_avoid(max_len, Parity::even);
}

bool lower_language_images_avoid_odd(int max_len) {
    return lower_images_avoid(max_len, Parity::odd);
}

std::uint64_t partition_count(std::int64_t n, std::vector<std::int64_t> parts) {
    if (n < 0) return 0;
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (std::int64_t p : parts) {
        if (p <= 0) throw std::invalid_argument("partition_count: parts must be positive");
    }
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (std::int64_t p : parts) {
        for (std::int64_t v = p; v <= n; ++v) {
            ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - p)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

std::uint64_t p2_form_count(int n) {
    if (n < 0) return 0;
    std::uint64_t total = 0;
    std::uint64_t base = 0;
    std::vector<std::int64_t> coins;
    for (int m = 0; 3 * m + 1 < 63; ++m) {
        base += std::uint64_t{1} << (3 * m + 1);
        if (base > static_cast<std::uint64_t>(n)) break;
        coins.push_back(std::int64_t{1} << (3 * m));
        total += partition_count(static_cast<std::int64_t>(n - base), coins);
    }
    return total;
}

std::vector<GrowthRow> growth_report(int max_n) {
    if (max_n < 1 || max_n > 64) throw std::invalid_argument("growth_report: max_n must be in [1, 64]");
    std::vector<std::uint64_t> a = count_avoiders_up_to(max_n);
    std::vector<GrowthRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        GrowthRow r;
        r.n = n;
        r.a_n = a[n];
        r.lower_count = count_lower_language(n);
        std::vector<std::int64_t> p2;
        for (std::int64_t p = 1; p <= n; p *= 2) p2.push_back(p);
        r.p2_partitions = partition_count(n, p2);
        std::vector<std::int64_t> fib3;
        for (int i = 0; fib(3 * i) <= static_cast<std::uint64_t>(n); ++i) {
            fib3.push_back(static_cast<std::int64_t>(fib(3 * i)));
        }
        r.fib_partitions = partition_count(n, fib3);
        r.lg_ratio = n >= 2 ? std::log2(static_cast<double>(r.a_n)) /
                                  (std::log2(static_cast<double>(n)) * std::log2(static_cast<double>(n)))
                            : 0.0;
        rows.push_back(r);
    }
    return rows;
}

void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows) {
    os << "n,a_n,lower_count,p2_partitions,fib_partitions,lg_ratio\n";
    for (const GrowthRow& r : rows) {
        std::ostringstream ratio;
        ratio.setf(std::ios::fixed);
        ratio.precision(6);
        ratio << r.lg_ratio;
        os << r.n << ',' << r.a_n << ',' << r.lower_count << ',' << r.p2_partitions << ','
           << r.fib_partitions << ',' << ratio.str() << '\n';
    }
}

CrosscheckResult oeis_crosscheck(std::istream& in, int max_n) {
    CrosscheckResult res;
    std::vector<std::pair<int, long long>> entries;
    std::string line;
    int line_no = 0;
    int skipped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        std::size_t first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        std::istringstream row(trimmed);
        long long n = 0, value = 0;
        std::string extra;
        if (!(row >> n >> value) || (row >> extra)) {
            res.parse_error = true;
            res.message = "malformed row at line " + std::to_string(line_no) + ": " + line;
            return res;
        }
        if (n < 1 || n > max_n) {
            ++skipped;
            continue;
        }
        entries.push_back({static_cast<int>(n), value});
        ++res.rows;
    }
    if (entries.empty()) {
        res.message = skipped > 0 ? "no rows in range; all entries skipped"
                                  : "no data rows found; nothing was checked";
        return res;
    }
    int top = 0;
    for (const auto& [n, value] : entries) top = std::max(top, n);
    std::vector<std::uint64_t> a = count_avoiders_up_to(top);
    for (const auto& [n, value] : entries) {
        if (value < 0 || a[n] != static_cast<std::uint64_t>(value)) {
            res.mismatches.push_back({n, a[n], value});
        }
    }
    if (skipped > 0) {
        res.message = std::to_string(skipped) + " rows outside [1, " + std::to_string(max_n) +
                      "] skipped";
    }
    return res;
}

}  // namespace xxxr
