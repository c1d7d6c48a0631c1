#pragma once

// The five classic confidentiality modes over the AES block primitive.
//
// The *_encrypt / *_decrypt functions operate on padded messages (length a
// positive multiple of 16) and throw std::invalid_argument otherwise.
// encrypt_message / decrypt_message add padding and IV checks on top.

#include "aesbench/cipher_context.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace aesbench {

using Bytes = std::vector<Byte>;

enum class Mode { ecb, cbc, cfb, ofb, ctr };

inline constexpr std::array<Mode, 5> kAllModes = {Mode::ecb, Mode::cbc, Mode::cfb, Mode::ofb, Mode::ctr};

enum class Parallelism { suitable, unsuitable };

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(Parallelism p) noexcept;

/// Accepts lower- or upper-case names; nullopt for anything else.
std::optional<Mode> parse_mode(std::string_view name) noexcept;

Parallelism classify_parallelism(Mode mode) noexcept;

struct IV
{
    Block bytes{};
};

/// 128-bit big-endian counter base R. Block i of a message uses R + i
/// (mod 2^128), with i counted from 0.
struct Counter
{
    Block base{};

    Block at(std::uint64_t offset) const noexcept;
};

/// Padding trailer is malformed; the ciphertext or key is wrong.
class CorruptionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Appends k copies of byte k, k = 16 - len % 16.
Bytes pad(std::span<const Byte> data);

/// Inverse of pad(). Throws CorruptionError on a malformed trailer.
Bytes unpad(std::span<const Byte> data);

Bytes ecb_encrypt(std::span<const Byte> msg, const CipherContext& ctx);
Bytes ecb_decrypt(std::span<const Byte> msg, const CipherContext& ctx);

Bytes cbc_encrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx);
Bytes cbc_decrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx);

Bytes cfb_encrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx);
Bytes cfb_decrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx);

/// Encryption and decryption are the same operation.
Bytes ofb_encrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx);
Bytes ofb_decrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx);

/// Encryption and decryption are the same operation.
Bytes ctr_encrypt(std::span<const Byte> msg, const Counter& counter, const CipherContext& ctx);
Bytes ctr_decrypt(std::span<const Byte> msg, const Counter& counter, const CipherContext& ctx);

/// Pads, then applies the mode. The IV (the counter base for CTR) is required
/// for every mode except ECB, where it must be absent; violations throw
/// std::invalid_argument.
Bytes encrypt_message(Mode mode, std::span<const Byte> plaintext, const CipherContext& ctx,
                      const std::optional<IV>& iv = std::nullopt);

/// Inverts the mode, then unpads. Throws CorruptionError on bad padding.
Bytes decrypt_message(Mode mode, std::span<const Byte> ciphertext, const CipherContext& ctx,
                      const std::optional<IV>& iv = std::nullopt);

} // namespace aesbench
