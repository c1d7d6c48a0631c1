#pragma once

// Fused round tables. One lookup per state byte replaces sub-bytes,
// shift-rows and mix-columns for the nine full rounds.
//
// Packing: an entry is one state column. Row r of the column lives in bits
// [8r, 8r + 8) of the 32-bit word, i.e. the word is the little-endian load of
// the column's four bytes as they appear in a block.

#include "aesbench/aes_core.hpp"

#include <array>
#include <cstdint>

namespace aesbench {

using Column = std::array<Byte, 4>;

constexpr std::uint32_t pack_column(const Column& c) noexcept
{
    return static_cast<std::uint32_t>(c[0]) | (static_cast<std::uint32_t>(c[1]) << 8) |
           (static_cast<std::uint32_t>(c[2]) << 16) | (static_cast<std::uint32_t>(c[3]) << 24);
}

constexpr Column unpack_column(std::uint32_t w) noexcept
{
    return {static_cast<Byte>(w), static_cast<Byte>(w >> 8), static_cast<Byte>(w >> 16), static_cast<Byte>(w >> 24)};
}

struct TTableSet
{
    using Table = std::array<std::uint32_t, 256>;

    /// encrypt[0][w] = (02.s, s, s, 03.s) top to bottom with s = sbox[w];
    /// encrypt[k] is that column rotated down by k rows.
    std::array<Table, 4> encrypt{};
    /// Same shape from the inverse S-box with coefficients (0E, 09, 0D, 0B).
    std::array<Table, 4> decrypt{};
};

/// Round keys for the equivalent inverse cipher: entries 1..9 have been
/// passed through inverse mix-columns, entries 0 and 10 are unchanged.
struct InverseRoundKeys
{
    std::array<Block, kRounds + 1> round_keys{};
};

TTableSet build_t_tables(const SBox& sbox);

InverseRoundKeys derive_inverse_round_keys(const ExpandedKey& ek, const MixMatrix& matrix);

/// One full round: e_j = T0[p(0,j)] ^ T1[p(1,j+1)] ^ T2[p(2,j+2)] ^ T3[p(3,j+3)] ^ k_j,
/// column indices mod 4.
State ttable_round(const State& state, const Block& round_key, const TTableSet& tables);

/// One full round of the equivalent inverse cipher; round_key must come from
/// InverseRoundKeys.
State ttable_inv_round(const State& state, const Block& round_key, const TTableSet& tables);

Block ttable_encrypt_block(const Block& block, const ExpandedKey& ek, const TTableSet& tables, const SBox& sbox);

Block ttable_decrypt_block(const Block& block, const InverseRoundKeys& dk, const TTableSet& tables, const SBox& sbox);

/// Convenience overload that derives the inverse schedule on every call.
Block ttable_decrypt_block(const Block& block, const ExpandedKey& ek, const TTableSet& tables, const SBox& sbox);

} // namespace aesbench
