#pragma once

// Reference AES-128: state representation, the four round transforms, key
// expansion and the straightforward block cipher built from them. The
// T-table path in ttables.hpp is validated against this one.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace aesbench {

using Byte = std::uint8_t;

inline constexpr std::size_t kBlockSize = 16;
inline constexpr std::size_t kRounds = 10;      // Nr
inline constexpr std::size_t kColumns = 4;      // Nb
inline constexpr std::size_t kExpandedKeySize = kBlockSize * (kRounds + 1);

/// The 16-byte on-the-wire unit.
using Block = std::array<Byte, kBlockSize>;

/// 4x4 byte matrix. Block byte k sits at row k % 4, column k / 4.
class State
{
public:
    constexpr State() = default;

    static constexpr State from_block(const Block& block) noexcept
    {
        State s;
        s.cells_ = block;
        return s;
    }

    constexpr Block to_block() const noexcept { return cells_; }

    constexpr Byte& at(std::size_t row, std::size_t col) noexcept { return cells_[col * 4 + row]; }
    constexpr Byte at(std::size_t row, std::size_t col) const noexcept { return cells_[col * 4 + row]; }

    friend constexpr bool operator==(const State&, const State&) = default;

private:
    Block cells_{};
};

struct SBox
{
    std::array<Byte, 256> forward{};
    std::array<Byte, 256> inverse{};
};

struct CipherKey
{
    Block bytes{};
};

struct ExpandedKey
{
    std::array<Block, kRounds + 1> round_keys{};

    static constexpr std::size_t size_bits() noexcept { return kExpandedKeySize * 8; }
};

struct MixMatrix
{
    using Coefficients = std::array<std::array<Byte, 4>, 4>;

    Coefficients forward{};
    Coefficients inverse{};
};

/// Computes the S-box from field inversion followed by the affine map.
SBox build_sbox();

/// build_sbox(), compared once against the published table. A mismatch means
/// the field arithmetic is broken; the process aborts.
const SBox& standard_sbox();

const MixMatrix& standard_mix_matrix();

State sub_bytes(const State& state, const SBox& sbox);
State inv_sub_bytes(const State& state, const SBox& sbox);

/// Row i rotates left by i: out(i, j) = in(i, (i + j) mod 4).
State shift_rows(const State& state);
State inv_shift_rows(const State& state);

State mix_columns(const State& state, const MixMatrix& matrix);
State inv_mix_columns(const State& state, const MixMatrix& matrix);

State add_round_key(const State& state, const Block& round_key);

ExpandedKey key_expansion(const CipherKey& key, const SBox& sbox);

Block encrypt_block(const Block& block, const ExpandedKey& ek, const SBox& sbox, const MixMatrix& matrix);
Block decrypt_block(const Block& block, const ExpandedKey& ek, const SBox& sbox, const MixMatrix& matrix);

} // namespace aesbench
