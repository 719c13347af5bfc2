// Acceptance battery: one line per criterion, non-zero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xxxr/enumerate.hpp"
#include "xxxr/forbidden.hpp"
#include "xxxr/pairs.hpp"
#include "xxxr/structure.hpp"
#include "xxxr/words.hpp"

using namespace xxxr;

namespace {

constexpr double kCountBudgetSeconds = 10.0;
constexpr double kRatioLow = 0.40;
constexpr double kRatioHigh = 0.50;

const std::uint64_t kReferenceCounts[64] = {
    2,     4,     6,     10,    16,    24,    34,    48,    62,    80,    100,   124,   148,
    178,   210,   244,   282,   324,   372,   426,   488,   556,   630,   712,   804,   908,
    1024,  1152,  1296,  1454,  1626,  1814,  2018,  2244,  2490,  2756,  3044,  3354,  3690,
    4050,  4438,  4856,  5300,  5772,  6272,  6800,  7370,  7966,  8598,  9266,  9964,  10708,
    11484, 12300, 13166, 14062, 15000, 15974, 16994, 18076, 19206, 20388, 21632, 22924};

bool criterion1(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> counts = count_avoiders_up_to(64);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (int n = 1; n <= 64; ++n) {
        if (counts[n] != kReferenceCounts[n - 1]) {
            note = "count mismatch at n=" + std::to_string(n) + ": got " +
                   std::to_string(counts[n]) + ", expected " +
                   std::to_string(kReferenceCounts[n - 1]);
            return false;
        }
    }
    std::ostringstream os;
    os << "all 64 counts match in " << seconds << "s";
    note = os.str();
    return seconds < kCountBudgetSeconds;
}

bool criterion2(std::string& note) {
    for (int n = 1; n <= 18; ++n) {
        std::vector<Bits> brute;
        Bits w(n, '0');
        // odometer over all 2^n words in lexicographic order
        while (true) {
            if (avoids_xxxr(w)) brute.push_back(w);
            int i = n - 1;
            while (i >= 0 && w[i] == '1') w[i--] = '0';
            if (i < 0) break;
            w[i] = '1';
        }
        if (enumerate_avoiders(n) != brute) {
            note = "listing differs from brute force at n=" + std::to_string(n);
            return false;
        }
    }
    note = "filtered search equals brute force for n <= 18";
    return true;
}

bool criterion3(std::string& note) {
    for (int level = 0; level <= 3; ++level) {
        SuitablePair pair = pair_at_level(level);
        if (level == 0 &&
            (pair.ell != "0010" || pair.mu != "0" || pair.p != "00")) {
            note = "level 0 witnesses drifted";
            return false;
        }
        struct Named {
            const char* what;
            std::vector<ConditionCheck> checks;
        };
        Named batteries[] = {{"pair conditions", verify_suitable(pair)},
                             {"witness overlaps", check_witness_overlaps(pair)},
                             {"image interlocks", check_phi_overlaps(pair, 4)}};
        for (const Named& battery : batteries) {
            for (const ConditionCheck& c : battery.checks) {
                if (!c.pass) {
                    note = std::string(battery.what) + " at level " + std::to_string(level) +
                           ": " + c.name;
                    return false;
                }
            }
        }
        if (!parity_check(pair)) {
            note = "image length parity wrong at level " + std::to_string(level);
            return false;
        }
    }
    note = "pair batteries pass at levels 0..3";
    return true;
}

bool criterion4(std::string& note) {
    for (int level = 0; level <= 1; ++level) {
        SuitablePair pair = pair_at_level(level);
        std::vector<ForbiddenMember> members = build_forbidden(pair);
        if (members.size() != 37) {
            note = "expected 37 members, got " + std::to_string(members.size());
            return false;
        }
        int per_term[10] = {0};
        for (const ForbiddenMember& m : members) ++per_term[m.term];
        const int expected[10] = {0, 6, 3, 4, 4, 4, 6, 2, 4, 4};
        for (int t = 1; t <= 9; ++t) {
            if (per_term[t] != expected[t]) {
                note = "member spread wrong for term " + std::to_string(t);
                return false;
            }
        }
        for (const MemberDiagnostic& d : check_forbidden_images(pair)) {
            if (!d.even_witness || !d.odd_witness) {
                note = "no hit in the image of " + d.member.pattern + " at level " +
                       std::to_string(level);
                return false;
            }
        }
        for (const FamilyWitnessCheck& f : check_family_witnesses(pair)) {
            if (!f.pass) {
                note = "family " + std::to_string(f.term) + " witness failed at level " +
                       std::to_string(level);
                return false;
            }
        }
        if (!sl_avoiders_exclude_forbidden(pair, 7)) {
            note = "an avoiding pattern contains a member at level " + std::to_string(level);
            return false;
        }
    }
    note = "37/37 member diagnostics and exclusion pass at levels 0..1";
    return true;
}

bool criterion5(std::string& note) {
    std::size_t k_words = 0;
    for (int n = 2; n <= 40; ++n) {
        for (const Bits& z : enumerate_k_words(n)) {
            ++k_words;
            StructureResult res = structure_decompose(z);
            if (res.status != DecomposeStatus::ok) {
                note = "no split for " + z;
                return false;
            }
            const StructureDecomposition& d = res.parts;
            if (recompose(d) != z || d.p.size() > 31 || d.s.size() > 31 || !tail01_member(d.t)) {
                note = "bad split for " + z;
                return false;
            }
        }
    }
    std::size_t m_words = 0;
    for (int n = 0; n <= 12; ++n) {
        for (const SLWord& y : enumerate_m_words(n)) {
            ++m_words;
            TowerParse t = tower_parse(y);
            if (!t.complete || recompose(t) != y) {
                note = "layer parse failed for " + y;
                return false;
            }
            if (!tower_invariants_hold(y, t)) {
                note = "layer invariants violated for " + y;
                return false;
            }
            if (!y.empty() && t.levels.size() != 1) {
                note = "short word parsed with depth " + std::to_string(t.levels.size());
                return false;
            }
        }
    }
    std::ostringstream os;
    os << k_words << " splits and " << m_words << " layer parses round trip";
    note = os.str();
    return true;
}

bool criterion6(std::string& note) {
    bool images_ok = lower_language_images_avoid(30);

    std::vector<SLWord> factors = lower_language_forbidden_factors();
    std::vector<LowerWord> words = generate_lower_language(40);
    std::vector<std::uint64_t> generated(41, 0);
    std::uint64_t factor_hits = 0;
    std::string first_hit;
    for (const LowerWord& w : words) {
        ++generated[w.word.size()];
        for (const SLWord& f : factors) {
            if (w.word.find(f) != std::string::npos) {
                ++factor_hits;
                if (first_hit.empty()) first_hit = w.word + " contains excluded factor " + f;
            }
        }
    }

    bool counts_ok = true;
    for (int n = 1; n <= 40; ++n) {
        if (generated[n] != count_lower_language(n)) {
            counts_ok = false;
            note = "generation and counting disagree at n=" + std::to_string(n);
            break;
        }
    }

    if (images_ok && factor_hits == 0 && counts_ok) {
        note = "nested language checks pass up to length 40 (images to 30)";
        return true;
    }
    std::ostringstream why;
    why << "images avoid: " << (images_ok ? "yes (to 30)" : "NO") << "; counts agree: "
        << (counts_ok ? "yes (to 40)" : "NO") << "; factor exclusion: ";
    if (factor_hits == 0) {
        why << "yes";
    } else {
        why << factor_hits << " violation(s), first: " << first_hit;
    }
    note = why.str();
    return false;
}

std::uint64_t partition_oracle(std::int64_t n, const std::vector<std::int64_t>& parts,
                               std::size_t from) {
    if (n == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = from; i < parts.size(); ++i) {
        if (parts[i] <= n) total += partition_oracle(n - parts[i], parts, i);
    }
    return total;
}

bool criterion7(std::string& note) {
    std::vector<std::vector<std::int64_t>> part_sets = {
        {1, 2, 4, 8, 16}, {1, 3, 13}, {1, 2, 3, 5, 7}, {2, 5, 9}};
    for (const auto& parts : part_sets) {
        for (std::int64_t n = 0; n <= 30; ++n) {
            if (partition_count(n, parts) != partition_oracle(n, parts, 0)) {
                note = "partition count disagrees with enumeration at n=" + std::to_string(n);
                return false;
            }
        }
    }
    for (int n = 1; n <= 60; ++n) {
        if (count_lower_language(n) < p2_form_count(n)) {
            note = "nested count falls below the power-of-two form count at n=" +
                   std::to_string(n);
            return false;
        }
    }
    note = "partition counts verified to n=30, chain holds to n=60";
    return true;
}

bool criterion8(std::string& note) {
    std::vector<GrowthRow> rows = growth_report(64);
    double lo = 1e9, hi = -1e9;
    for (const GrowthRow& r : rows) {
        if (r.n < 16) continue;
        lo = std::min(lo, r.lg_ratio);
        hi = std::max(hi, r.lg_ratio);
        if (r.lg_ratio < kRatioLow || r.lg_ratio > kRatioHigh) {
            std::ostringstream os;
            os << "lg ratio " << r.lg_ratio << " out of [" << kRatioLow << ", " << kRatioHigh
               << "] at n=" << r.n;
            note = os.str();
            return false;
        }
    }
    std::ostringstream os;
    os << "lg ratios stay in [" << lo << ", " << hi << "] for 16 <= n <= 64";
    note = os.str();
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)(std::string&);
    };
    const Criterion criteria[] = {
        {"reference counts reproduced (n <= 64, under 10s)", criterion1},
        {"search equals brute force (n <= 18)", criterion2},
        {"letter pairs verified (levels 0..3)", criterion3},
        {"excluded family verified (levels 0..1)", criterion4},
        {"splits and layer parses round trip", criterion5},
        {"nested language sound and counted", criterion6},
        {"partition counts and chain verified", criterion7},
        {"growth ratio stays in the pinned band", criterion8},
    };
    bool all_ok = true;
    for (std::size_t i = 0; i < 8; ++i) {
        std::string note;
        bool ok = criteria[i].run(note);
        all_ok = all_ok && ok;
        std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " - "
                  << criteria[i].name;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << std::endl;
    }
    std::cout << (all_ok ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return all_ok ? 0 : 1;
}
