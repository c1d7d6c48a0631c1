#include "aesbench/gf256.hpp"

#include <stdexcept>
#include <string>

namespace aesbench::gf256 {

FieldElement mul_const(FieldElement a, std::uint8_t c)
{
    const auto& m = kXtimeTable;
    switch (c) {
    case 0x01:
        return a;
    case 0x02:
        return m[a];
    case 0x03:
        return m[a] ^ a;
    case 0x09: {
        // x^3 + 1
        const FieldElement a8 = m[m[m[a]]];
        return a8 ^ a;
    }
    case 0x0B: {
        // x^3 + x + 1
        const FieldElement a2 = m[a];
        const FieldElement a8 = m[m[a2]];
        return a8 ^ a2 ^ a;
    }
    case 0x0D: {
        // x^3 + x^2 + 1
        const FieldElement a4 = m[m[a]];
        const FieldElement a8 = m[a4];
        return a8 ^ a4 ^ a;
    }
    case 0x0E: {
        // x^3 + x^2 + x
        const FieldElement a2 = m[a];
        const FieldElement a4 = m[a2];
        const FieldElement a8 = m[a4];
        return a8 ^ a4 ^ a2;
    }
    default:
        throw std::invalid_argument("gf256::mul_const: unsupported coefficient " + std::to_string(c));
    }
}

} // namespace aesbench::gf256
