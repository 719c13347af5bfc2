#include "xxxr/structure.hpp"

#include <cmath>
#include <stdexcept>

namespace xxxr {

bool tail01_member(const Bits& t) {
    std::size_t i = 0, n = t.size();
    if (i < n && t[i] == '1') ++i;
    while (i + 1 < n && t[i] == '0' && t[i + 1] == '1') i += 2;
    if (i == n) return true;
    return i + 1 == n && t[i] == '1';
}

namespace {

constexpr std::size_t kEdgeBound = 31;

// End positions e such that z[start, e) is a full image h(u, even) for some u.
// Decoding is greedy longest match; the only optional stop is the short image
// when the long one also matches, which cannot be continued past.
std::vector<char> decodable_ends(const Bits& z, std::size_t start) {
    static const char* s_img[2] = {"00100", "11011"};
    static const char* l_img[2] = {"00100100", "11011011"};
    std::size_t n = z.size();
    std::vector<char> ok(n + 1, 0);
    ok[start] = 1;
    std::size_t q = start;
    int par = 0;
    auto match = [&](const char* img, std::size_t len) {
        if (q + len > n) return false;
        for (std::size_t i = 0; i < len; ++i) {
            if (z[q + i] != img[i]) return false;
        }
        return true;
    };
    while (true) {
        bool can_l = match(l_img[par], 8);
        bool can_s = match(s_img[par], 5);
        if (can_l) {
            if (can_s) ok[q + 5] = 1;
            q += 8;
        } else if (can_s) {
            q += 5;
        } else {
            break;
        }
        ok[q] = 1;
        par ^= 1;
    }
    return ok;
}

}  // namespace

StructureResult structure_decompose(const Bits& z) {
    StructureResult res;
    if (!is_in_K(z)) {
        res.status = DecomposeStatus::not_in_k;
        return res;
    }
    std::size_t n = z.size();
    std::vector<char> is_tail(n + 1, 0);
    for (std::size_t t_len = 0; t_len <= n; ++t_len) {
        is_tail[t_len] = tail01_member(z.substr(n - t_len));
    }
    for (std::size_t p_len = 0; p_len <= kEdgeBound && p_len <= n; ++p_len) {
        std::vector<char> ok_end = decodable_ends(z, p_len);
        for (std::size_t s_len = 0; s_len <= kEdgeBound && p_len + s_len <= n; ++s_len) {
            for (std::size_t t_len = 0; p_len + s_len + t_len <= n; ++t_len) {
                if (!is_tail[t_len]) continue;
                std::size_t end = n - s_len - t_len;
                if (!ok_end[end]) continue;
                std::optional<SLWord> u = h_decode(z.substr(p_len, end - p_len));
                if (!u) throw std::logic_error("structure_decompose: end table disagrees with decoder");
                res.status = DecomposeStatus::ok;
                res.parts = {z.substr(0, p_len), *u, z.substr(end, s_len), z.substr(n - t_len)};
                return res;
            }
        }
    }
    res.status = DecomposeStatus::no_decomposition;
    return res;
}

Bits recompose(const StructureDecomposition& d) {
    return d.p + h_map(d.u, Parity::even) + d.s + d.t;
}

namespace {

std::size_t run_length(const SLWord& w, std::size_t from, char c) {
    std::size_t k = 0;
    while (from + k < w.size() && w[from + k] == c) ++k;
    return k;
}

std::size_t trailing_run(const SLWord& w, char c) {
    std::size_t k = 0;
    while (k < w.size() && w[w.size() - 1 - k] == c) ++k;
    return k;
}

// (e+S+SS+SSS)L S^*
bool tail1_branch_a(const SLWord& t) {
    std::size_t a = run_length(t, 0, 'S');
    if (a > 3 || a >= t.size() || t[a] != 'L') return false;
    return run_length(t, a + 1, 'S') == t.size() - a - 1;
}

// S^*(e+L+LS)
bool tail1_branch_b(const SLWord& t) {
    std::size_t c = run_length(t, 0, 'S');
    SLWord rest = t.substr(c);
    return rest.empty() || rest == "L" || rest == "LS";
}

// (e+L+LL+LLL)S L^*
bool tail2_branch_a(const SLWord& t) {
    std::size_t a = run_length(t, 0, 'L');
    if (a > 3 || a >= t.size() || t[a] != 'S') return false;
    return run_length(t, a + 1, 'L') == t.size() - a - 1;
}

// L^*(e+S+SL)
bool tail2_branch_b(const SLWord& t) {
    std::size_t c = run_length(t, 0, 'L');
    SLWord rest = t.substr(c);
    return rest.empty() || rest == "S" || rest == "SL";
}

}  // namespace

bool stage_tail_member(const SLWord& t, int stage) {
    switch (stage) {
        case 1:
            return tail1_branch_a(t) || tail1_branch_b(t);
        case 2:
            for (const SLWord& e : {SLWord{}, SLWord{"S"}, SLWord{"L"}}) {
                if (t.size() < e.size() || !t.ends_with(e)) continue;
                SLWord u = t.substr(0, t.size() - e.size());
                if (tail2_branch_a(u) || tail2_branch_b(u)) return true;
            }
            return false;
        case 3:
            return t.empty();
        default:
            throw std::invalid_argument("stage_tail_member: stage must be 1, 2 or 3");
    }
}

std::optional<PhiPeel> phi_peel(const SLWord& y, int stage) {
    static const std::size_t bounds[4] = {0, 9, 4, 6};
    if (stage < 1 || stage > 3) throw std::invalid_argument("phi_peel: stage must be 1, 2 or 3");
    std::size_t bound = bounds[stage];
    std::size_t n = y.size();
    for (std::size_t pre = 0; pre <= bound && pre <= n; ++pre) {
        for (std::size_t suf = 0; suf <= bound && pre + suf <= n; ++suf) {
            std::size_t rest = n - pre - suf;
            for (std::size_t tl = 0; tl <= rest; ++tl) {
                if (stage == 3 && tl > 0) break;
                if (!stage_tail_member(y.substr(n - tl, tl), stage)) continue;
                std::optional<SLWord> core = phi_decode(y.substr(pre, rest - tl));
                if (!core) continue;
                return PhiPeel{stage, y.substr(0, pre), *core, y.substr(n - tl - suf, suf),
                               y.substr(n - tl, tl)};
            }
        }
    }
    return std::nullopt;
}

SLWord recompose(const PhiPeel& d) {
    return d.prefix + phi(d.core) + d.suffix + d.tail;
}

namespace {

// Layout inside phi_peel results: y = prefix · phi(core) · suffix · tail.
// The tail grammars admit a canonical pivot split used to assemble layers:
//   stage-1 tail  t = C · S^k · D, maximizing k, preferring C empty on ties
//   stage-2 tail  t = A · L^j · B, maximizing j, preferring A empty on ties
struct PivotSplit {
    SLWord left;
    long count = -1;
    SLWord right;
};

void consider(PivotSplit& best, const SLWord& left, long count, const SLWord& right) {
    if (count > best.count) {
        best = {left, count, right};
        return;
    }
    if (count == best.count) {
        bool better = (left.empty() && !best.left.empty()) ||
                      (left.empty() == best.left.empty() && right.size() < best.right.size());
        if (better) best = {left, count, right};
    }
}

PivotSplit split_stage1_tail(const SLWord& t) {
    PivotSplit best;
    if (tail1_branch_a(t)) {
        std::size_t a = run_length(t, 0, 'S');
        consider(best, t.substr(0, a + 1), static_cast<long>(t.size() - a - 1), "");
    }
    if (tail1_branch_b(t)) {
        std::size_t c = run_length(t, 0, 'S');
        consider(best, "", static_cast<long>(c), t.substr(c));
    }
    if (best.count < 0) throw std::logic_error("split_stage1_tail: not a stage-1 tail");
    return best;
}

PivotSplit split_stage2_tail(const SLWord& t) {
    PivotSplit best;
    for (const SLWord& e : {SLWord{}, SLWord{"S"}, SLWord{"L"}}) {
        if (t.size() < e.size() || !t.ends_with(e)) continue;
        SLWord u = t.substr(0, t.size() - e.size());
        if (tail2_branch_a(u)) {
            std::size_t j = trailing_run(u, 'L');
            consider(best, u.substr(0, u.size() - j), static_cast<long>(j), e);
        }
        if (tail2_branch_b(u)) {
            std::size_t j = run_length(u, 0, 'L');
            consider(best, "", static_cast<long>(j), u.substr(j) + e);
        }
    }
    if (best.count < 0) throw std::logic_error("split_stage2_tail: not a stage-2 tail");
    return best;
}

SLWord repeat(const SLWord& block, long times) {
    SLWord out;
    for (long i = 0; i < times; ++i) out += block;
    return out;
}

}  // namespace

TowerParse tower_parse(const SLWord& y) {
    if (!is_sl_word(y)) throw std::invalid_argument("tower_parse: word must be over S, L");
    TowerParse out;
    SLWord cur = y;
    int level = 0;
    while (!cur.empty()) {
        if (level > 64) throw std::logic_error("tower_parse: depth cap exceeded");
        if (!avoids_xxxr(h_map(cur, Parity::even))) {
            out.failed_level = level;
            out.failed_stage = 0;
            out.core = cur;
            return out;
        }
        std::optional<PhiPeel> d1 = phi_peel(cur, 1);
        std::optional<PhiPeel> d2 = d1 ? phi_peel(d1->core, 2) : std::nullopt;
        std::optional<PhiPeel> d3 = d2 ? phi_peel(d2->core, 3) : std::nullopt;
        if (!d3) {
            out.failed_level = level;
            out.failed_stage = !d1 ? 1 : (!d2 ? 2 : 3);
            out.core = cur;
            return out;
        }
        PivotSplit t1 = split_stage1_tail(d1->tail);
        PivotSplit t2 = split_stage2_tail(d2->tail);
        TowerLevel lvl;
        lvl.prefix = d1->prefix + phi(d2->prefix) + phi_pow(d3->prefix, 2);
        lvl.sigma1 = phi_pow(d3->suffix, 2) + phi(d2->suffix) + phi(t2.left);
        lvl.sigma2 = phi(t2.right) + d1->suffix + t1.left;
        lvl.sigma3 = t1.right;
        lvl.j = t2.count;
        lvl.k = t1.count;
        out.levels.push_back(std::move(lvl));
        cur = d3->core;
        ++level;
    }
    out.complete = true;
    out.core.clear();
    return out;
}

SLWord recompose(const TowerParse& t) {
    SLWord cur = t.core;
    for (auto it = t.levels.rbegin(); it != t.levels.rend(); ++it) {
        cur = it->prefix + phi_pow(cur, 3) + it->sigma1 + repeat("SLL", it->j) + it->sigma2 +
              repeat("S", it->k) + it->sigma3;
    }
    return cur;
}

bool tower_invariants_hold(const SLWord& y, const TowerParse& t) {
    if (!t.complete) return false;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        int level = static_cast<int>(i) + 1;
        total += static_cast<std::uint64_t>(t.levels[i].j) * fib(6 * level - 3);
        total += static_cast<std::uint64_t>(t.levels[i].k) * fib(6 * level - 6);
    }
    std::size_t n = y.size();
    if (total > n) return false;
    if (n == 0) return t.levels.empty();
    std::size_t depth_cap = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)) / 3.0)) + 1;
    return t.levels.size() <= depth_cap;
}

}  // namespace xxxr
