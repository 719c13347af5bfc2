#include "xxxr/words.hpp"

#include <algorithm>

namespace xxxr {

bool is_binary_word(const Bits& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_sl_word(const SLWord& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'S' || c == 'L'; });
}

Bits reverse_word(Bits w) {
    std::reverse(w.begin(), w.end());
    return w;
}

Bits complement_word(Bits w) {
    for (char& c : w) c = (c == '0') ? '1' : '0';
    return w;
}

namespace {

// True iff w[start, start+3m) is x·x·x^R with |x| = m.
bool xxxr_at(const Bits& w, std::size_t start, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
        char x = w[start + i];
        if (w[start + m + i] != x) return false;
        if (w[start + 3 * m - 1 - i] != x) return false;
    }
    return true;
}

}  // namespace

std::optional<XxxrWitness> find_xxxr(const Bits& w) {
    std::size_t n = w.size();
    for (std::size_t start = 0; start + 3 <= n; ++start) {
        for (std::size_t m = 1; start + 3 * m <= n; ++m) {
            if (xxxr_at(w, start, m)) return XxxrWitness{start, m};
        }
    }
    return std::nullopt;
}

bool avoids_xxxr(const Bits& w) {
    return !find_xxxr(w).has_value();
}

bool extend_ok(const Bits& w, char b) {
    std::size_t n = w.size() + 1;
    for (std::size_t m = 1; 3 * m <= n; ++m) {
        // Check the length-3m suffix of w·b, i.e. positions [n-3m, n).
        std::size_t start = n - 3 * m;
        bool hit = true;
        for (std::size_t i = 0; i < m && hit; ++i) {
            char x = (start + i < w.size()) ? w[start + i] : b;
            char second = (start + m + i < w.size()) ? w[start + m + i] : b;
            std::size_t rev = start + 3 * m - 1 - i;
            char third = (rev < w.size()) ? w[rev] : b;
            if (second != x || third != x) hit = false;
        }
        if (hit) return false;
    }
    return true;
}

bool is_in_K(const Bits& z) {
    return !z.empty() && z.front() == '0' && z.back() == '1' && avoids_xxxr(z);
}

}  // namespace xxxr
