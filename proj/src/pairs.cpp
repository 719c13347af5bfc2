#include "xxxr/pairs.hpp"

#include <stdexcept>

namespace xxxr {

namespace {

std::string show(const std::string& s) {
    if (s.size() <= 48) return s;
    return s.substr(0, 24) + "..(len " + std::to_string(s.size()) + ")";
}

ConditionCheck eq_check(std::string name, const Bits& lhs, const Bits& rhs) {
    ConditionCheck c;
    c.name = std::move(name);
    c.pass = (lhs == rhs);
    if (!c.pass) c.detail = show(lhs) + " != " + show(rhs);
    return c;
}

std::vector<SLWord> all_patterns_up_to(int max_len) {
    std::vector<SLWord> out{SLWord{}};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            out.push_back(out[i] + 'S');
            out.push_back(out[i] + 'L');
        }
        begin = end;
    }
    return out;
}

}  // namespace

bool all_pass(const std::vector<ConditionCheck>& checks) {
    for (const ConditionCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

SuitablePair base_pair() {
    SuitablePair pair;
    pair.s_word = "S";
    pair.l_word = "L";
    pair.ell = "0010";
    pair.mu = "0";
    pair.p = "00";
    pair.level = 0;
    return pair;
}

SLWord flatten(const SuitablePair& pair, const SLWord& pattern) {
    SLWord out;
    for (char c : pattern) {
        if (c == 'S') {
            out += pair.s_word;
        } else if (c == 'L') {
            out += pair.l_word;
        } else {
            throw std::invalid_argument("flatten: pattern letter must be S or L");
        }
    }
    return out;
}

Bits pair_h(const SuitablePair& pair, const SLWord& pattern) {
    return h_map(flatten(pair, pattern), Parity::even);
}

std::vector<ConditionCheck> verify_suitable(const SuitablePair& pair) {
    std::vector<ConditionCheck> out;
    out.push_back({"s_word length odd", pair.s_word.size() % 2 == 1, ""});
    out.push_back({"l_word length odd", pair.l_word.size() % 2 == 1, ""});
    out.push_back({"witnesses non-empty",
                   !pair.ell.empty() && !pair.mu.empty() && !pair.p.empty(), ""});
    Bits hs = pair_h(pair, "S");
    Bits hl = pair_h(pair, "L");
    out.push_back(eq_check("h(L) = ell ell^R", hl, pair.ell + reverse_word(pair.ell)));
    out.push_back(eq_check("h(S) = ell mu", hs, pair.ell + pair.mu));
    out.push_back(eq_check("h(S) = mu^R ell^R", hs,
                           reverse_word(pair.mu) + reverse_word(pair.ell)));
    out.push_back(eq_check("h(L) = ell mu c(mu^R) p", hl,
                           pair.ell + pair.mu + complement_word(reverse_word(pair.mu)) + pair.p));
    return out;
}

bool parity_check(const SuitablePair& pair) {
    return pair_h(pair, "S").size() % 2 == 1 && pair_h(pair, "L").size() % 2 == 0;
}

SuitablePair lift(const SuitablePair& pair) {
    SLWord phi3_s = phi_pow("S", 3);
    SLWord phi3_l = phi_pow("L", 3);
    // Both phi^3 images begin with SLSL; the conjugated letters move that
    // block to the right end.
    if (phi3_s.substr(0, 4) != "SLSL" || phi3_l.substr(0, 4) != "SLSL")
        throw std::logic_error("lift: phi^3 images lost their SLSL prefix");
    SLWord sigma_pattern = phi3_s.substr(4) + "SLSL";
    SLWord lambda_pattern = phi3_l.substr(4) + "SLSL";

    SuitablePair next;
    next.s_word = flatten(pair, sigma_pattern);
    next.l_word = flatten(pair, lambda_pattern);
    next.ell = pair_h(pair, "LSLSLLSLLS") + pair.ell;
    next.mu = reverse_word(pair.ell) + complement_word(pair_h(pair, "SL"));
    next.p = complement_word(reverse_word(pair.ell)) + pair_h(pair, "LSLSL");
    next.level = pair.level + 1;
    return next;
}

SuitablePair pair_at_level(int i, int depth_cap) {
    if (i < 0 || i > depth_cap) throw std::invalid_argument("pair_at_level: level out of range");
    SuitablePair pair = base_pair();
    for (int k = 0; k < i; ++k) pair = lift(pair);
    return pair;
}

std::vector<ConditionCheck> check_witness_overlaps(const SuitablePair& pair) {
    std::vector<ConditionCheck> out;
    Bits hs = pair_h(pair, "S");
    Bits hl = pair_h(pair, "L");
    Bits hss = pair_h(pair, "SS");

    ConditionCheck c1;
    c1.name = "h(L) p^-1 prefix of h(SS)";
    if (hl.size() >= pair.p.size() && hl.ends_with(pair.p)) {
        Bits head = hl.substr(0, hl.size() - pair.p.size());
        c1.pass = hss.starts_with(head);
        if (!c1.pass) c1.detail = show(head) + " not a prefix of " + show(hss);
    } else {
        c1.detail = "h(L) does not end with p";
    }
    out.push_back(c1);

    ConditionCheck c2{"h(S) prefix of h(L)", hl.starts_with(hs), ""};
    if (!c2.pass) c2.detail = show(hs) + " not a prefix of " + show(hl);
    out.push_back(c2);

    ConditionCheck c3{"h(S) suffix of h(L)", hl.ends_with(hs), ""};
    if (!c3.pass) c3.detail = show(hs) + " not a suffix of " + show(hl);
    out.push_back(c3);
    return out;
}

std::vector<ConditionCheck> check_phi_overlaps(const SuitablePair& pair, int max_beta) {
    std::vector<ConditionCheck> out;
    std::vector<SLWord> betas = all_patterns_up_to(max_beta);

    struct Quantified {
        std::string name;
        bool (*prop)(const SuitablePair&, const SLWord&);
    };
    const Quantified props[] = {
        {"h(phi(b S)) prefix of h(phi(b L))",
         [](const SuitablePair& q, const SLWord& b) {
             return pair_h(q, phi(b + "L")).starts_with(pair_h(q, phi(b + "S")));
         }},
        {"h(phi^2(b S)) prefix of h(phi^2(b L))",
         [](const SuitablePair& q, const SLWord& b) {
             return pair_h(q, phi_pow(b + "L", 2)).starts_with(pair_h(q, phi_pow(b + "S", 2)));
         }},
        {"c(h(phi(S b))) suffix of h(phi(L b))",
         [](const SuitablePair& q, const SLWord& b) {
             return pair_h(q, phi("L" + b)).ends_with(complement_word(pair_h(q, phi("S" + b))));
         }},
        {"c(h(phi^2(S b))) suffix of h(phi^2(L b))",
         [](const SuitablePair& q, const SLWord& b) {
             return pair_h(q, phi_pow("L" + b, 2))
                 .ends_with(complement_word(pair_h(q, phi_pow("S" + b, 2))));
         }},
    };
    for (const Quantified& prop : props) {
        ConditionCheck c{prop.name, true, ""};
        for (const SLWord& b : betas) {
            if (!prop.prop(pair, b)) {
                c.pass = false;
                c.detail = "fails at b = " + (b.empty() ? std::string("(empty)") : b);
                break;
            }
        }
        out.push_back(c);
    }

    ConditionCheck c5;
    c5.name = "h(phi(L)) p^-1 prefix of h(phi(SS))";
    Bits hpl = pair_h(pair, phi("L"));
    if (hpl.ends_with(pair.p)) {
        Bits head = hpl.substr(0, hpl.size() - pair.p.size());
        c5.pass = pair_h(pair, phi("SS")).starts_with(head);
    } else {
        c5.detail = "h(phi(L)) does not end with p";
    }
    out.push_back(c5);

    ConditionCheck c6;
    c6.name = "h(phi^2(L)) c(p)^-1 prefix of h(phi^2(SS))";
    Bits hppl = pair_h(pair, phi_pow("L", 2));
    Bits cp = complement_word(pair.p);
    if (hppl.ends_with(cp)) {
        Bits head = hppl.substr(0, hppl.size() - cp.size());
        c6.pass = pair_h(pair, phi_pow("SS", 2)).starts_with(head);
    } else {
        c6.detail = "h(phi^2(L)) does not end with c(p)";
    }
    out.push_back(c6);
    return out;
}

}  // namespace xxxr
