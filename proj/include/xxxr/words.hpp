#pragma once

#include <cstddef>
#include <optional>
#include <string>

// Binary words are std::strings over '0'/'1'; SL words are std::strings over
// 'S'/'L'. The text encoding used by the CLI and the test fixtures is
// identical to the in-memory representation.

namespace xxxr {

using Bits = std::string;
using SLWord = std::string;

bool is_binary_word(const Bits& w);
bool is_sl_word(const SLWord& w);

Bits reverse_word(Bits w);

// Flips '0' <-> '1'. Defined for binary words only.
Bits complement_word(Bits w);

// Records a factor w[start, start+3*len) of the form x·x·x^R, where
// x = w.substr(start, len) is non-empty.
struct XxxrWitness {
    std::size_t start = 0;
    std::size_t len = 0;  // |x|
};

// Least witness in lexicographic (start, len) order, if any.
std::optional<XxxrWitness> find_xxxr(const Bits& w);

bool avoids_xxxr(const Bits& w);

// Given w avoiding x·x·x^R, true iff w·b still avoids. Only factors ending at
// the appended symbol need checking.
bool extend_ok(const Bits& w, char b);

// z starts with 0, ends with 1, and avoids x·x·x^R.
bool is_in_K(const Bits& z);

}  // namespace xxxr
