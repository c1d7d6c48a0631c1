#pragma once

// Arithmetic in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
//
// Bytes encode polynomials with bit k holding the coefficient of x^k, so
// x^7 + x^6 + 1 is 0xC1.

#include <array>
#include <cstdint>

namespace aesbench::gf256 {

using FieldElement = std::uint8_t;

/// x^8 + x^4 + x^3 + x + 1
inline constexpr std::uint16_t kReductionPolynomial = 0x11B;

constexpr FieldElement add(FieldElement a, FieldElement b) noexcept
{
    return static_cast<FieldElement>(a ^ b);
}

/// Multiplication by x: shift left, fold the carry back in with 0x1B.
constexpr FieldElement xtime(FieldElement a) noexcept
{
    const auto shifted = static_cast<std::uint16_t>(a << 1);
    return static_cast<FieldElement>((shifted & 0x100) ? (shifted ^ kReductionPolynomial) : shifted);
}

/// Canonical table-free product. Everything table-driven in the library is
/// checked against this.
constexpr FieldElement mul(FieldElement a, FieldElement b) noexcept
{
    FieldElement product = 0;
    while (b != 0) {
        if (b & 1)
            product ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return product;
}

/// Multiplicative inverse by exhaustive search; inverse(0) is defined as 0.
constexpr FieldElement inverse(FieldElement a) noexcept
{
    if (a == 0)
        return 0;
    for (unsigned b = 1; b < 256; ++b) {
        if (mul(a, static_cast<FieldElement>(b)) == 1)
            return static_cast<FieldElement>(b);
    }
    return 0; // unreachable in a field
}

struct XtimeTable
{
    std::array<FieldElement, 256> entries{};

    constexpr FieldElement operator[](FieldElement a) const noexcept { return entries[a]; }
};

constexpr XtimeTable build_xtime_table() noexcept
{
    XtimeTable table;
    for (unsigned a = 0; a < 256; ++a)
        table.entries[a] = xtime(static_cast<FieldElement>(a));
    return table;
}

/// Process-wide table, built once at compile time.
inline constexpr XtimeTable kXtimeTable = build_xtime_table();

/// True for the coefficients that appear in the mix-columns matrices.
constexpr bool is_mix_coefficient(std::uint8_t c) noexcept
{
    switch (c) {
    case 0x01: case 0x02: case 0x03: case 0x09: case 0x0B: case 0x0D: case 0x0E:
        return true;
    default:
        return false;
    }
}

/// Multiplication by one of the mix-columns coefficients, composed from
/// lookups in kXtimeTable. Throws std::invalid_argument for any other
/// constant.
FieldElement mul_const(FieldElement a, std::uint8_t c);

} // namespace aesbench::gf256
