#include "aesbench/ttables.hpp"

#include "aesbench/gf256.hpp"

#include <bit>

namespace aesbench {

namespace {

using Word = std::uint32_t;
using Columns = std::array<Word, 4>;

Columns load_columns(const Block& b) noexcept
{
    Columns c;
    for (std::size_t j = 0; j < 4; ++j)
        c[j] = pack_column({b[4 * j], b[4 * j + 1], b[4 * j + 2], b[4 * j + 3]});
    return c;
}

Block store_columns(const Columns& c) noexcept
{
    Block b;
    for (std::size_t j = 0; j < 4; ++j) {
        const Column col = unpack_column(c[j]);
        for (std::size_t r = 0; r < 4; ++r)
            b[4 * j + r] = col[r];
    }
    return b;
}

constexpr Byte row_byte(Word column, unsigned row) noexcept
{
    return static_cast<Byte>(column >> (8 * row));
}

Columns encrypt_round(const Columns& p, const Columns& k, const TTableSet& t) noexcept
{
    const auto& [t0, t1, t2, t3] = t.encrypt;
    Columns e;
    for (std::size_t j = 0; j < 4; ++j) {
        e[j] = t0[row_byte(p[j], 0)] ^ t1[row_byte(p[(j + 1) & 3], 1)] ^ t2[row_byte(p[(j + 2) & 3], 2)] ^
               t3[row_byte(p[(j + 3) & 3], 3)] ^ k[j];
    }
    return e;
}

Columns decrypt_round(const Columns& p, const Columns& k, const TTableSet& t) noexcept
{
    const auto& [d0, d1, d2, d3] = t.decrypt;
    Columns e;
    for (std::size_t j = 0; j < 4; ++j) {
        e[j] = d0[row_byte(p[j], 0)] ^ d1[row_byte(p[(j + 3) & 3], 1)] ^ d2[row_byte(p[(j + 2) & 3], 2)] ^
               d3[row_byte(p[(j + 1) & 3], 3)] ^ k[j];
    }
    return e;
}

Column fused_column(Byte s, const std::array<Byte, 4>& coeffs)
{
    return {gf256::mul_const(s, coeffs[0]), gf256::mul_const(s, coeffs[1]), gf256::mul_const(s, coeffs[2]),
            gf256::mul_const(s, coeffs[3])};
}

} // namespace

TTableSet build_t_tables(const SBox& sbox)
{
    // First columns of the forward and inverse mix matrices.
    constexpr std::array<Byte, 4> kForward = {0x02, 0x01, 0x01, 0x03};
    constexpr std::array<Byte, 4> kInverse = {0x0E, 0x09, 0x0D, 0x0B};

    TTableSet t;
    for (unsigned w = 0; w < 256; ++w) {
        const Word enc = pack_column(fused_column(sbox.forward[w], kForward));
        const Word dec = pack_column(fused_column(sbox.inverse[w], kInverse));
        for (unsigned k = 0; k < 4; ++k) {
            t.encrypt[k][w] = std::rotl(enc, static_cast<int>(8 * k));
            t.decrypt[k][w] = std::rotl(dec, static_cast<int>(8 * k));
        }
    }
    return t;
}

InverseRoundKeys derive_inverse_round_keys(const ExpandedKey& ek, const MixMatrix& matrix)
{
    InverseRoundKeys dk;
    dk.round_keys = ek.round_keys;
    for (std::size_t r = 1; r < kRounds; ++r)
        dk.round_keys[r] = inv_mix_columns(State::from_block(ek.round_keys[r]), matrix).to_block();
    return dk;
}

State ttable_round(const State& state, const Block& round_key, const TTableSet& tables)
{
    const Columns e = encrypt_round(load_columns(state.to_block()), load_columns(round_key), tables);
    return State::from_block(store_columns(e));
}

State ttable_inv_round(const State& state, const Block& round_key, const TTableSet& tables)
{
    const Columns e = decrypt_round(load_columns(state.to_block()), load_columns(round_key), tables);
    return State::from_block(store_columns(e));
}

Block ttable_encrypt_block(const Block& block, const ExpandedKey& ek, const TTableSet& tables, const SBox& sbox)
{
    Columns s = load_columns(block);
    const Columns k0 = load_columns(ek.round_keys[0]);
    for (std::size_t j = 0; j < 4; ++j)
        s[j] ^= k0[j];

    for (std::size_t round = 1; round < kRounds; ++round)
        s = encrypt_round(s, load_columns(ek.round_keys[round]), tables);

    // Final round: sub-bytes and shift-rows through the plain S-box.
    const Block& last = ek.round_keys[kRounds];
    Block out;
    for (std::size_t j = 0; j < 4; ++j) {
        for (unsigned r = 0; r < 4; ++r)
            out[4 * j + r] = sbox.forward[row_byte(s[(j + r) & 3], r)] ^ last[4 * j + r];
    }
    return out;
}

Block ttable_decrypt_block(const Block& block, const InverseRoundKeys& dk, const TTableSet& tables, const SBox& sbox)
{
    Columns s = load_columns(block);
    const Columns k10 = load_columns(dk.round_keys[kRounds]);
    for (std::size_t j = 0; j < 4; ++j)
        s[j] ^= k10[j];

    for (std::size_t round = kRounds - 1; round >= 1; --round)
        s = decrypt_round(s, load_columns(dk.round_keys[round]), tables);

    const Block& first = dk.round_keys[0];
    Block out;
    for (std::size_t j = 0; j < 4; ++j) {
        for (unsigned r = 0; r < 4; ++r)
            out[4 * j + r] = sbox.inverse[row_byte(s[(j + 4 - r) & 3], r)] ^ first[4 * j + r];
    }
    return out;
}

Block ttable_decrypt_block(const Block& block, const ExpandedKey& ek, const TTableSet& tables, const SBox& sbox)
{
    return ttable_decrypt_block(block, derive_inverse_round_keys(ek, standard_mix_matrix()), tables, sbox);
}

} // namespace aesbench
