#pragma once

#include <optional>
#include <vector>

#include "xxxr/pairs.hpp"

namespace xxxr {

// One pattern of the finite excluded family over a pair's letters. Terms 1-9
// name the union component it came from; terms 5 and 6 are phi-images and
// terms 7-9 are phi^2-images of short kernels.
struct ForbiddenMember {
    int term = 0;
    SLWord pattern;    // over the pair's letters
    SLWord flattened;  // over the base alphabet
};

// All 37 members:
//   1: (S+L)·SSSL·(L+SS+SL)      2: LSSL·(L+SS+SL)
//   3: (S+L)·LLLLL·(S+L)         4: (S+L)·LSLLL·(S+L)
//   5: phi((S+L)·SS·(S+L))       6: phi((S+L)·LLLSL·(L+SS+SL))
//   7: phi^2(LLL·(S+L))          8: phi^2((S+L)·LSS·(S+L))
//   9: phi^2((S+L)·SSSSS·(S+L))
std::vector<ForbiddenMember> build_forbidden(const SuitablePair& pair);

// find_xxxr on the h-image of each member's flattened word, at both parities.
struct MemberDiagnostic {
    ForbiddenMember member;
    std::optional<XxxrWitness> even_witness;
    std::optional<XxxrWitness> odd_witness;
};

std::vector<MemberDiagnostic> check_forbidden_images(const SuitablePair& pair);

// Per-term representative with its predicted witness x, assembled from the
// pair's ell/mu/p. `trim` is the suffix removed from the raw image before
// the check; when `expected` is non-empty the adjusted image must equal it,
// and in every case it must contain x·x·x^R as a factor.
struct FamilyWitnessCheck {
    int term = 0;
    SLWord representative;
    Bits trim;
    Bits x;
    Bits expected;  // full predicted adjusted image, empty if only containment is predicted
    bool contains_witness = false;
    bool matches_expected = false;  // trivially true when expected is empty
    bool pass = false;
};

std::vector<FamilyWitnessCheck> check_family_witnesses(const SuitablePair& pair);

// Enumerates every pattern u over the pair's letters, ||u|| <= max_len, whose
// image avoids x·x·x^R, and reports whether none of them contains a member of
// the excluded family as a factor.
bool sl_avoiders_exclude_forbidden(const SuitablePair& pair, int max_len);

// Factors that never occur in the words of the lower-bound language:
// LLL, SSL, SLSLS, psi(LLL), LLSLLSLLSLSL, psi(SLSLS).
std::vector<SLWord> lower_language_forbidden_factors();

}  // namespace xxxr
