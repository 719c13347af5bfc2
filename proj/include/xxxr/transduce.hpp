#pragma once

#include <cstdint>
#include <optional>

#include "xxxr/words.hpp"

namespace xxxr {

enum class Parity { even, odd };

Parity flip(Parity p);

// Letter images of the coding f: a -> 0, b -> 1, c -> 00, d -> 11.
Bits f_map(const std::string& v);

// g sends the i-th letter (0-based) to cbc/dad for S and cbcbc/dadad for L,
// choosing by the parity of i offset by `start`.
std::string g_map(const SLWord& u, Parity start = Parity::even);

// h sends the i-th letter to 00100/11011 for S and 00100100/11011011 for L,
// choosing by the parity of i offset by `start`. h(u, even) == f(g(u)) and
// h(u, odd) == complement(h(u, even)).
Bits h_map(const SLWord& u, Parity start = Parity::even);

// Left inverse of h_map, greedy longest match: whenever the 8-symbol L-image
// matches with more input remaining, taking the 5-symbol S-image instead
// leaves input starting 10/01, which no image at either parity starts with,
// so the long match is forced. Decoding is deterministic and complete.
std::optional<SLWord> h_decode(const Bits& z, Parity start = Parity::even);

// S -> SL, L -> SLL
SLWord phi(const SLWord& u);
SLWord phi_pow(SLWord u, int k, int depth_cap = 12);
std::optional<SLWord> phi_decode(const SLWord& w);

// L -> LS, S -> L
SLWord fib_morphism(const SLWord& u);

// S -> LSL, L -> LSLSL. Both images are palindromes, so psi(u^R) = psi(u)^R.
SLWord psi(const SLWord& u);
SLWord psi_pow(SLWord u, int k, int depth_cap = 12);

// F(0) = F(1) = 1, F(k) = F(k-1) + F(k-2). Valid for 0 <= k <= 92.
std::uint64_t fib(int k);

// Checks L·phi(u) == D^2(u)·L and LSL·psi(u) == D^3(u)·LSL for every SL word
// with |u| <= max_len, where D is fib_morphism.
bool conjugacy_check(int max_len);

}  // namespace xxxr
