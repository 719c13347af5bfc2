#pragma once

#include <string>
#include <vector>

#include "xxxr/transduce.hpp"

namespace xxxr {

// A pair of odd-length SL words with binary witnesses ell, mu, p certifying
//   h(l_word) = ell·ell^R
//   h(s_word) = ell·mu = mu^R·ell^R
//   h(l_word) = ell·mu·complement(mu^R)·p
// Letters of lifted pairs are stored fully flattened over the base alphabet,
// so h of a pattern over the pair is h of the flattened pattern.
struct SuitablePair {
    SLWord s_word;
    SLWord l_word;
    Bits ell, mu, p;
    int level = 0;
};

struct ConditionCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<ConditionCheck>& checks);

// <S, L> with ell = 0010, mu = 0, p = 00.
SuitablePair base_pair();

// The defining conditions: odd letter lengths, non-empty witnesses, and the
// three image equations above.
std::vector<ConditionCheck> verify_suitable(const SuitablePair& pair);

// |h(s_word)| odd and |h(l_word)| even.
bool parity_check(const SuitablePair& pair);

// Substitutes the pair's letters into a pattern over 'S'/'L'.
SLWord flatten(const SuitablePair& pair, const SLWord& pattern);

// h of the flattened pattern at even start. Letter lengths are odd, so the
// boundary parities agree with the pattern positions.
Bits pair_h(const SuitablePair& pair, const SLWord& pattern);

// The next level of the hierarchy:
//   Sigma  = (SLSL)^{-1}·phi^3(S)·SLSL
//   Lambda = (SLSL)^{-1}·phi^3(L)·SLSL
// over the pair's letters, with witnesses
//   ell' = pair_h(LSLSLLSLLS)·ell
//   mu'  = ell^R·complement(pair_h(SL))
//   p'   = complement(ell^R)·pair_h(LSLSL)
SuitablePair lift(const SuitablePair& pair);

// i applications of lift to the base pair.
SuitablePair pair_at_level(int i, int depth_cap = 4);

// Witness interlocks:
//   h(l_word) with p removed from the right is a prefix of h(s_word s_word);
//   h(s_word) is a prefix and a suffix of h(l_word).
std::vector<ConditionCheck> check_witness_overlaps(const SuitablePair& pair);

// Image interlocks through phi and phi^2, quantified over every pattern beta
// with ||beta|| <= max_beta:
//   h(phi(beta·S))  is a prefix of h(phi(beta·L));
//   h(phi^2(beta·S)) is a prefix of h(phi^2(beta·L));
//   complement(h(phi(S·beta)))  is a suffix of h(phi(L·beta));
//   complement(h(phi^2(S·beta))) is a suffix of h(phi^2(L·beta));
//   h(phi(L)) with p removed is a prefix of h(phi(SS));
//   h(phi^2(L)) with complement(p) removed is a prefix of h(phi^2(SS)).
std::vector<ConditionCheck> check_phi_overlaps(const SuitablePair& pair, int max_beta = 4);

}  // namespace xxxr
