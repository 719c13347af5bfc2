#include "xxxr/transduce.hpp"

#include <stdexcept>
#include <vector>

namespace xxxr {

Parity flip(Parity p) {
    return p == Parity::even ? Parity::odd : Parity::even;
}

namespace {

const char* kSImage[2] = {"00100", "11011"};
const char* kLImage[2] = {"00100100", "11011011"};

int idx(Parity p) { return p == Parity::even ? 0 : 1; }

bool match_at(const Bits& z, std::size_t pos, const char* image, std::size_t len) {
    if (pos + len > z.size()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (z[pos + i] != image[i]) return false;
    }
    return true;
}

}  // namespace

Bits f_map(const std::string& v) {
    Bits out;
    out.reserve(v.size() * 2);
    for (char c : v) {
        switch (c) {
            case 'a': out += '0'; break;
            case 'b': out += '1'; break;
            case 'c': out += "00"; break;
            case 'd': out += "11"; break;
            default: throw std::invalid_argument("f_map: letter must be one of a, b, c, d");
        }
    }
    return out;
}

std::string g_map(const SLWord& u, Parity start) {
    std::string out;
    out.reserve(u.size() * 5);
    Parity p = start;
    for (char c : u) {
        bool odd = (p == Parity::odd);
        if (c == 'S') {
            out += odd ? "dad" : "cbc";
        } else if (c == 'L') {
            out += odd ? "dadad" : "cbcbc";
        } else {
            throw std::invalid_argument("g_map: letter must be S or L");
        }
        p = flip(p);
    }
    return out;
}

Bits h_map(const SLWord& u, Parity start) {
    Bits out;
    out.reserve(u.size() * 8);
    Parity p = start;
    for (char c : u) {
        if (c == 'S') {
            out += kSImage[idx(p)];
        } else if (c == 'L') {
            out += kLImage[idx(p)];
        } else {
            throw std::invalid_argument("h_map: letter must be S or L");
        }
        p = flip(p);
    }
    return out;
}

std::optional<SLWord> h_decode(const Bits& z, Parity start) {
    SLWord out;
    std::size_t pos = 0;
    Parity p = start;
    while (pos < z.size()) {
        if (match_at(z, pos, kLImage[idx(p)], 8)) {
            out += 'L';
            pos += 8;
        } else if (match_at(z, pos, kSImage[idx(p)], 5)) {
            out += 'S';
            pos += 5;
        } else {
            return std::nullopt;
        }
        p = flip(p);
    }
    return out;
}

SLWord phi(const SLWord& u) {
    SLWord out;
    out.reserve(u.size() * 3);
    for (char c : u) {
        if (c == 'S') {
            out += "SL";
        } else if (c == 'L') {
            out += "SLL";
        } else {
            throw std::invalid_argument("phi: letter must be S or L");
        }
    }
    return out;
}

SLWord phi_pow(SLWord u, int k, int depth_cap) {
    if (k < 0 || k > depth_cap) throw std::invalid_argument("phi_pow: power out of range");
    for (int i = 0; i < k; ++i) u = phi(u);
    return u;
}

std::optional<SLWord> phi_decode(const SLWord& w) {
    // Every image block is S followed by a run of 1 or 2 L's, so the block
    // boundaries are forced by the maximal L-runs.
    SLWord out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != 'S') return std::nullopt;
        std::size_t run = 0;
        while (i + 1 + run < w.size() && w[i + 1 + run] == 'L') ++run;
        if (run == 1) {
            out += 'S';
            i += 2;
        } else if (run == 2) {
            out += 'L';
            i += 3;
        } else {
            return std::nullopt;
        }
    }
    return out;
}

SLWord fib_morphism(const SLWord& u) {
    SLWord out;
    out.reserve(u.size() * 2);
    for (char c : u) {
        if (c == 'L') {
            out += "LS";
        } else if (c == 'S') {
            out += 'L';
        } else {
            throw std::invalid_argument("fib_morphism: letter must be S or L");
        }
    }
    return out;
}

SLWord psi(const SLWord& u) {
    SLWord out;
    out.reserve(u.size() * 5);
    for (char c : u) {
        if (c == 'S') {
            out += "LSL";
        } else if (c == 'L') {
            out += "LSLSL";
        } else {
            throw std::invalid_argument("psi: letter must be S or L");
        }
    }
    return out;
}

SLWord psi_pow(SLWord u, int k, int depth_cap) {
    if (k < 0 || k > depth_cap) throw std::invalid_argument("psi_pow: power out of range");
    for (int i = 0; i < k; ++i) u = psi(u);
    return u;
}

std::uint64_t fib(int k) {
    if (k < 0 || k > 92) throw std::invalid_argument("fib: index out of range");
    std::uint64_t a = 1, b = 1;
    for (int i = 0; i < k; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

bool conjugacy_check(int max_len) {
    std::vector<SLWord> level{SLWord{}};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<SLWord> next;
        for (const SLWord& u : level) {
            SLWord d2 = fib_morphism(fib_morphism(u));
            if ("L" + phi(u) != d2 + "L") return false;
            SLWord d3 = fib_morphism(d2);
            if ("LSL" + psi(u) != d3 + "LSL") return false;
            if (len < max_len) {
                next.push_back(u + 'S');
                next.push_back(u + 'L');
            }
        }
        level = std::move(next);
    }
    return true;
}

}  // namespace xxxr
