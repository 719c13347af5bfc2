#pragma once

#include <optional>
#include <vector>

#include "xxxr/transduce.hpp"

namespace xxxr {

// z = p · h(u, even) · s · t with |p|, |s| <= 31 and t in (e+1)(01)*(e+1).
// Canonical over all valid splits: lexicographically least (|p|, |s|, |t|).
struct StructureDecomposition {
    Bits p;
    SLWord u;
    Bits s;
    Bits t;
};

enum class DecomposeStatus { ok, not_in_k, no_decomposition };

struct StructureResult {
    DecomposeStatus status = DecomposeStatus::no_decomposition;
    StructureDecomposition parts;  // meaningful only when status == ok
};

// Membership in (e+1)(01)*(e+1).
bool tail01_member(const Bits& t);

StructureResult structure_decompose(const Bits& z);

Bits recompose(const StructureDecomposition& d);

// One peeling stage: y = prefix · phi(core) · suffix · tail, canonical by
// lexicographically least (|prefix|, |suffix|, |tail|).
//   stage 1: |prefix|, |suffix| <= 9, tail in (e+S+SS+SSS)L·S* + S*(e+L+LS)
//   stage 2: |prefix|, |suffix| <= 4,
//            tail in ((e+L+LL+LLL)S·L* + L*(e+S+SL))(e+S+L)
//   stage 3: |prefix|, |suffix| <= 6, tail empty
struct PhiPeel {
    int stage = 0;
    SLWord prefix, core, suffix, tail;
};

bool stage_tail_member(const SLWord& t, int stage);

std::optional<PhiPeel> phi_peel(const SLWord& y, int stage);

SLWord recompose(const PhiPeel& d);

// One phi^3 layer of the full parse:
//   y = prefix · phi^3(core) · sigma1 · phi(L)^j · sigma2 · S^k · sigma3
struct TowerLevel {
    SLWord prefix;
    SLWord sigma1, sigma2, sigma3;
    long j = 0;
    long k = 0;
};

struct TowerParse {
    std::vector<TowerLevel> levels;
    SLWord core;  // remaining word after the last peeled layer
    bool complete = false;
    int failed_level = -1;  // level index at which peeling stopped, -1 if complete
    int failed_stage = 0;   // peel stage that failed there, 0 if not a stage failure
};

// Peels layers until the core is empty. The image of each new core is
// re-checked for avoidance before the next layer; a core whose image stops
// avoiding is reported as a failure, not silently parsed.
TowerParse tower_parse(const SLWord& y);

SLWord recompose(const TowerParse& t);

// n >= sum over levels i (1-based) of j_i·F(6i-3) + k_i·F(6i-6), and the
// number of levels is at most ceil(lg n / 3) + 1.
bool tower_invariants_hold(const SLWord& y, const TowerParse& t);

}  // namespace xxxr
