#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace eislat {

// Linear codes used as glue: symbols are small nonnegative ints.

// Extended ternary Golay code [12, 6, 6] over F_3.  Returns all 729
// codewords with entries in {0, 1, 2}.  Generator follows the Paley
// construction from the quadratic residues mod 5 on a circulant block.
std::vector<std::array<uint8_t, 12>> ternary_golay();

// Tetracode [4, 2, 3] over F_3; all 9 codewords.
std::vector<std::array<uint8_t, 4>> tetracode();

// Hexacode [6, 3, 4] over F_4 = {0, 1, w, w^2} encoded as {0, 1, 2, 3};
// all 64 codewords.  Codeword (a, b, c, f(1), f(w), f(w^2)) for
// f(x) = a x^2 + b x + c.
std::vector<std::array<uint8_t, 6>> hexacode();

// Hamming weight of a word.
template <size_t N>
int weight(const std::array<uint8_t, N>& w) {
    int c = 0;
    for (auto s : w) c += (s != 0);
    return c;
}

// Self-duality and minimum-weight checks (used by tests and at
// construction-validation time).
bool golay_is_selfdual_min6();
bool tetracode_is_selfdual_min3();
bool hexacode_is_hermitian_selfdual_min4();

} // namespace eislat
