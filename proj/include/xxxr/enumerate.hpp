#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "xxxr/words.hpp"

namespace xxxr {

// counts[n] = number of binary words of length n avoiding x·x·x^R, for
// 0 <= n <= max_n, from one prefix-tree walk (the set is closed under
// taking prefixes).
std::vector<std::uint64_t> count_avoiders_up_to(int max_n);
std::uint64_t count_avoiders(int n);

// Same, restricted to words starting with 0 and ending with 1.
std::vector<std::uint64_t> count_k_words_up_to(int max_n);

// counts[n] = number of SL words u with ||u|| = n whose image h(u, even)
// avoids x·x·x^R.
std::vector<std::uint64_t> count_m_words_up_to(int max_n);

// Words of exactly length n, in lexicographic order ('0' < '1'; 'L' < 'S').
std::vector<Bits> enumerate_avoiders(int n);
std::vector<Bits> enumerate_k_words(int n);
std::vector<SLWord> enumerate_m_words(int n);

// One word of the nested language L_0 = L·S^*, L_{i+1} = psi(L_i)·L·S^*.
// exponents[i] = k_i in word = psi(psi(...psi(L·S^{k_m})...L·S^{k_1})·L·S^{k_0},
// outermost exponent first.
struct LowerWord {
    SLWord word;
    std::vector<int> exponents;
};

// Every word of the language with |word| <= max_len, sorted by (length, word),
// deduplicated by word.
std::vector<LowerWord> generate_lower_language(int max_len);

// Number of words of length exactly n, counted through the representations
// n = sum over i = 0..m of (F(3i+1) + k_i·F(3i)).
std::uint64_t count_lower_language(int n);

// h images of every generated word avoid x·x·x^R, at even start.
bool lower_language_images_avoid(int max_len);
// The same at odd start (diagnostic, not part of the headline claim).
bool lower_language_images_avoid_odd(int max_len);

// Multisets of parts drawn (with repetition) from `parts` summing to n.
std::uint64_t partition_count(std::int64_t n, std::vector<std::int64_t> parts);

// Number of representations n = sum over i = 0..m of (2^(3i+1) + k_i·2^(3i)).
std::uint64_t p2_form_count(int n);

struct GrowthRow {
    int n = 0;
    std::uint64_t a_n = 0;
    std::uint64_t lower_count = 0;
    std::uint64_t p2_partitions = 0;   // partitions of n into powers of two
    std::uint64_t fib_partitions = 0;  // partitions of n into parts F(0), F(3), F(6), ...
    double lg_ratio = 0.0;             // lg(a_n) / lg(n)^2, 0 when n < 2
};

std::vector<GrowthRow> growth_report(int max_n);

// Columns: n,a_n,lower_count,p2_partitions,fib_partitions,lg_ratio
void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows);

struct BfileMismatch {
    int n = 0;
    std::uint64_t computed = 0;
    long long file_value = 0;
};

struct CrosscheckResult {
    std::vector<BfileMismatch> mismatches;
    int rows = 0;            // data rows read
    bool parse_error = false;
    std::string message;     // parse error or warning text, empty otherwise
};

// Reads rows "n value" (1-based n, # comments and blank lines ignored) and
// compares value against the computed count of length-n avoiders. Rows with
// n outside [1, max_n] are skipped with a warning.
CrosscheckResult oeis_crosscheck(std::istream& in, int max_n = 64);

}  // namespace xxxr
