#include "xxxr/forbidden.hpp"

#include <stdexcept>

namespace xxxr {

namespace {

void expand_term(std::vector<ForbiddenMember>& out, const SuitablePair& pair, int term,
                 const std::vector<SLWord>& prefixes, const SLWord& core,
                 const std::vector<SLWord>& suffixes, int phi_power) {
    for (const SLWord& a : prefixes) {
        for (const SLWord& b : suffixes) {
            ForbiddenMember m;
            m.term = term;
            m.pattern = phi_pow(a + core + b, phi_power);
            m.flattened = flatten(pair, m.pattern);
            out.push_back(m);
        }
    }
}

Bits R(const Bits& w) { return reverse_word(w); }
Bits C(const Bits& w) { return complement_word(w); }

}  // namespace

std::vector<ForbiddenMember> build_forbidden(const SuitablePair& pair) {
    const std::vector<SLWord> any{"S", "L"};
    const std::vector<SLWord> tails{"L", "SS", "SL"};
    const std::vector<SLWord> none{""};

    std::vector<ForbiddenMember> out;
    out.reserve(37);
    expand_term(out, pair, 1, any, "SSSL", tails, 0);
    expand_term(out, pair, 2, none, "LSSL", tails, 0);
    expand_term(out, pair, 3, any, "LLLLL", any, 0);
    expand_term(out, pair, 4, any, "LSLLL", any, 0);
    expand_term(out, pair, 5, any, "SS", any, 1);
    expand_term(out, pair, 6, any, "LLLSL", tails, 1);
    expand_term(out, pair, 7, none, "LLL", any, 2);
    expand_term(out, pair, 8, any, "LSS", any, 2);
    expand_term(out, pair, 9, any, "SSSSS", any, 2);
    return out;
}

std::vector<MemberDiagnostic> check_forbidden_images(const SuitablePair& pair) {
    std::vector<MemberDiagnostic> out;
    for (const ForbiddenMember& m : build_forbidden(pair)) {
        MemberDiagnostic d;
        d.member = m;
        d.even_witness = find_xxxr(h_map(m.flattened, Parity::even));
        d.odd_witness = find_xxxr(h_map(m.flattened, Parity::odd));
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<FamilyWitnessCheck> check_family_witnesses(const SuitablePair& pair) {
    const Bits& l = pair.ell;
    const Bits& m = pair.mu;
    const Bits& p = pair.p;

    struct Family {
        int term;
        SLWord rep;
        Bits trim;
        Bits x;
        Bits expected;
    };
    std::vector<Family> families;
    {
        Bits x1 = m + C(R(m) + R(l)) + l;
        families.push_back({1, "SSSSLL", C(p), x1, l + x1 + x1 + R(x1)});
        Bits x2 = C(m) + R(m) + R(l) + C(l);
        families.push_back({2, "LSSLL", p, x2, R(p) + x2 + x2 + R(x2)});
        Bits x3 = R(l) + C(l + R(l)) + l;
        families.push_back({3, "SLLLLLS", "", x3, R(m) + x3 + x3 + x3 + m});
        Bits x4 = m + C(l + R(l)) + l;
        families.push_back({4, "SLSLLLS", "", x4, l + x4 + x4 + R(x4) + R(l)});
        Bits x5 = C(R(l)) + R(m) + R(l) + C(l);
        families.push_back({5, phi("SSSS"), "", x5, ""});
        Bits x6 = R(l) + C(l + R(l)) + R(m) + R(l) + C(l + R(l)) + l + R(l) + C(R(m) + R(l)) + l;
        families.push_back({6, phi("SLLLSLL"), p, x6, ""});
        Bits x7 = C(R(l)) + l + m + C(l + R(l)) + l + R(l) + C(l + m) + l + R(l) + C(l + R(l)) +
                  l + m + C(l);
        families.push_back({7, phi_pow("LLLS", 2), "", x7, ""});
        Bits x8 = C(R(l)) + l + R(l) + C(l + m) + l + R(l) + C(l + m) + l + R(l) + C(l + R(l)) +
                  l + m + C(l);
        families.push_back({8, phi_pow("SLSSS", 2), "", x8, ""});
        Bits x9 = C(R(l)) + l + m + C(l + R(l)) + l + R(l) + C(l + m) + l + R(l) +
                  C(R(m) + R(l)) + l + R(l) + C(l + R(l)) + R(m) + R(l) + C(l);
        families.push_back({9, phi_pow("SSSSSSS", 2), "", x9, ""});
    }

    std::vector<FamilyWitnessCheck> out;
    for (const Family& f : families) {
        FamilyWitnessCheck c;
        c.term = f.term;
        c.representative = f.rep;
        c.trim = f.trim;
        c.x = f.x;
        c.expected = f.expected;

        Bits raw = pair_h(pair, f.rep);
        bool trim_ok = f.trim.empty() || raw.ends_with(f.trim);
        Bits adjusted = trim_ok ? raw.substr(0, raw.size() - f.trim.size()) : raw;
        c.contains_witness = adjusted.find(f.x + f.x + R(f.x)) != Bits::npos;
        c.matches_expected = f.expected.empty() || adjusted == f.expected;
        c.pass = trim_ok && c.contains_witness && c.matches_expected;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

struct ExclusionSearch {
    const std::vector<ForbiddenMember>* members = nullptr;
    Bits letter_img[2][2];  // [S, L] x [even, odd]
    std::size_t max_len = 0;
    SLWord u;
    Bits image;

    // False as soon as some enumerated pattern ends with an excluded member.
    bool run() {
        for (const ForbiddenMember& m : *members) {
            if (u.size() >= m.pattern.size() && u.ends_with(m.pattern)) return false;
        }
        if (u.size() >= max_len) return true;
        for (int li = 0; li < 2; ++li) {
            const Bits& img = letter_img[li][u.size() % 2];
            std::size_t base = image.size();
            bool grows = true;
            for (char b : img) {
                if (!extend_ok(image, b)) {
                    grows = false;
                    break;
                }
                image += b;
            }
            bool ok = true;
            if (grows) {
                u += (li == 0 ? 'S' : 'L');
                ok = run();
                u.pop_back();
            }
            image.resize(base);
            if (!ok) return false;
        }
        return true;
    }
};

}  // namespace

bool sl_avoiders_exclude_forbidden(const SuitablePair& pair, int max_len) {
    if (max_len < 0) throw std::invalid_argument("sl_avoiders_exclude_forbidden: negative bound");
    std::vector<ForbiddenMember> members = build_forbidden(pair);
    ExclusionSearch search;
    search.members = &members;
    search.letter_img[0][0] = h_map(pair.s_word, Parity::even);
    search.letter_img[0][1] = h_map(pair.s_word, Parity::odd);
    search.letter_img[1][0] = h_map(pair.l_word, Parity::even);
    search.letter_img[1][1] = h_map(pair.l_word, Parity::odd);
    search.max_len = static_cast<std::size_t>(max_len);
    return search.run();
}

std::vector<SLWord> lower_language_forbidden_factors() {
    return {"LLL", "SSL", "SLSLS", psi("LLL"), "LLSLLSLLSLSL", psi("SLSLS")};
}

}  // namespace xxxr
