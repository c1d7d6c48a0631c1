#include "aesbench/modes.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace aesbench {

namespace {

void require_padded(std::span<const Byte> msg, const char* what)
{
    if (msg.empty() || msg.size() % kBlockSize != 0)
        throw std::invalid_argument(std::string(what) + ": message length " + std::to_string(msg.size()) +
                                    " is not a positive multiple of 16");
}

Block load_block(std::span<const Byte> msg, std::size_t index) noexcept
{
    Block b;
    std::copy_n(msg.begin() + static_cast<std::ptrdiff_t>(index * kBlockSize), kBlockSize, b.begin());
    return b;
}

void store_block(Bytes& out, std::size_t index, const Block& b) noexcept
{
    std::copy(b.begin(), b.end(), out.begin() + static_cast<std::ptrdiff_t>(index * kBlockSize));
}

Block xor_blocks(const Block& a, const Block& b) noexcept
{
    Block r;
    for (std::size_t i = 0; i < kBlockSize; ++i)
        r[i] = a[i] ^ b[i];
    return r;
}

// Shared by OFB in both directions.
Bytes ofb_apply(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    require_padded(msg, "ofb");
    const std::size_t n = msg.size() / kBlockSize;
    Bytes out(msg.size());
    Block keystream = iv.bytes;
    for (std::size_t i = 0; i < n; ++i) {
        keystream = ctx.encrypt(keystream);
        store_block(out, i, xor_blocks(load_block(msg, i), keystream));
    }
    return out;
}

Bytes ctr_apply(std::span<const Byte> msg, const Counter& counter, const CipherContext& ctx)
{
    require_padded(msg, "ctr");
    const std::size_t n = msg.size() / kBlockSize;
    Bytes out(msg.size());
    for (std::size_t i = 0; i < n; ++i)
        store_block(out, i, xor_blocks(load_block(msg, i), ctx.encrypt(counter.at(i))));
    return out;
}

const IV& require_iv(Mode mode, const std::optional<IV>& iv)
{
    if (!iv)
        throw std::invalid_argument(std::string(to_string(mode)) + " requires an IV");
    return *iv;
}

} // namespace

std::string_view to_string(Mode mode) noexcept
{
    switch (mode) {
    case Mode::ecb: return "ecb";
    case Mode::cbc: return "cbc";
    case Mode::cfb: return "cfb";
    case Mode::ofb: return "ofb";
    case Mode::ctr: return "ctr";
    }
    return "?";
}

std::string_view to_string(Parallelism p) noexcept
{
    return p == Parallelism::suitable ? "Suitable" : "Unsuitable";
}

std::optional<Mode> parse_mode(std::string_view name) noexcept
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (Mode m : kAllModes) {
        if (to_string(m) == lower)
            return m;
    }
    return std::nullopt;
}

Parallelism classify_parallelism(Mode mode) noexcept
{
    switch (mode) {
    case Mode::ecb:
    case Mode::ctr:
        return Parallelism::suitable;
    case Mode::cbc:
    case Mode::cfb:
    case Mode::ofb:
        return Parallelism::unsuitable;
    }
    return Parallelism::unsuitable;
}

Block Counter::at(std::uint64_t offset) const noexcept
{
    Block value = base;
    unsigned carry = 0;
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        const std::size_t pos = kBlockSize - 1 - i;
        const unsigned addend = i < 8 ? static_cast<unsigned>((offset >> (8 * i)) & 0xFF) : 0;
        const unsigned sum = value[pos] + addend + carry;
        value[pos] = static_cast<Byte>(sum);
        carry = sum >> 8;
    }
    return value; // carry out of the top byte is the mod 2^128 wrap
}

Bytes pad(std::span<const Byte> data)
{
    const std::size_t k = kBlockSize - data.size() % kBlockSize;
    Bytes out(data.begin(), data.end());
    out.insert(out.end(), k, static_cast<Byte>(k));
    return out;
}

Bytes unpad(std::span<const Byte> data)
{
    if (data.empty() || data.size() % kBlockSize != 0)
        throw CorruptionError("unpad: length " + std::to_string(data.size()) + " is not a positive multiple of 16");
    const Byte k = data.back();
    if (k == 0 || k > kBlockSize)
        throw CorruptionError("unpad: invalid padding count " + std::to_string(k));
    const auto trailer = data.last(k);
    if (!std::all_of(trailer.begin(), trailer.end(), [k](Byte b) { return b == k; }))
        throw CorruptionError("unpad: inconsistent padding bytes");
    return Bytes(data.begin(), data.end() - k);
}

Bytes ecb_encrypt(std::span<const Byte> msg, const CipherContext& ctx)
{
    require_padded(msg, "ecb");
    Bytes out(msg.size());
    for (std::size_t i = 0; i < msg.size() / kBlockSize; ++i)
        store_block(out, i, ctx.encrypt(load_block(msg, i)));
    return out;
}

Bytes ecb_decrypt(std::span<const Byte> msg, const CipherContext& ctx)
{
    require_padded(msg, "ecb");
    Bytes out(msg.size());
    for (std::size_t i = 0; i < msg.size() / kBlockSize; ++i)
        store_block(out, i, ctx.decrypt(load_block(msg, i)));
    return out;
}

Bytes cbc_encrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    require_padded(msg, "cbc");
    Bytes out(msg.size());
    Block prev = iv.bytes;
    for (std::size_t i = 0; i < msg.size() / kBlockSize; ++i) {
        prev = ctx.encrypt(xor_blocks(load_block(msg, i), prev));
        store_block(out, i, prev);
    }
    return out;
}

Bytes cbc_decrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    require_padded(msg, "cbc");
    Bytes out(msg.size());
    Block prev = iv.bytes;
    for (std::size_t i = 0; i < msg.size() / kBlockSize; ++i) {
        const Block c = load_block(msg, i);
        store_block(out, i, xor_blocks(ctx.decrypt(c), prev));
        prev = c;
    }
    return out;
}

Bytes cfb_encrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    require_padded(msg, "cfb");
    Bytes out(msg.size());
    Block prev = iv.bytes;
    for (std::size_t i = 0; i < msg.size() / kBlockSize; ++i) {
        prev = xor_blocks(load_block(msg, i), ctx.encrypt(prev));
        store_block(out, i, prev);
    }
    return out;
}

Bytes cfb_decrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    require_padded(msg, "cfb");
    Bytes out(msg.size());
    Block prev = iv.bytes;
    for (std::size_t i = 0; i < msg.size() / kBlockSize; ++i) {
        const Block c = load_block(msg, i);
        store_block(out, i, xor_blocks(c, ctx.encrypt(prev)));
        prev = c;
    }
    return out;
}

Bytes ofb_encrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    return ofb_apply(msg, iv, ctx);
}

Bytes ofb_decrypt(std::span<const Byte> msg, const IV& iv, const CipherContext& ctx)
{
    return ofb_apply(msg, iv, ctx);
}

Bytes ctr_encrypt(std::span<const Byte> msg, const Counter& counter, const CipherContext& ctx)
{
    return ctr_apply(msg, counter, ctx);
}

Bytes ctr_decrypt(std::span<const Byte> msg, const Counter& counter, const CipherContext& ctx)
{
    return ctr_apply(msg, counter, ctx);
}

Bytes encrypt_message(Mode mode, std::span<const Byte> plaintext, const CipherContext& ctx,
                      const std::optional<IV>& iv)
{
    if (mode == Mode::ecb && iv)
        throw std::invalid_argument("ecb does not take an IV");
    const Bytes padded = pad(plaintext);
    switch (mode) {
    case Mode::ecb: return ecb_encrypt(padded, ctx);
    case Mode::cbc: return cbc_encrypt(padded, require_iv(mode, iv), ctx);
    case Mode::cfb: return cfb_encrypt(padded, require_iv(mode, iv), ctx);
    case Mode::ofb: return ofb_encrypt(padded, require_iv(mode, iv), ctx);
    case Mode::ctr: return ctr_encrypt(padded, Counter{require_iv(mode, iv).bytes}, ctx);
    }
    throw std::invalid_argument("unknown mode");
}

Bytes decrypt_message(Mode mode, std::span<const Byte> ciphertext, const CipherContext& ctx,
                      const std::optional<IV>& iv)
{
    if (mode == Mode::ecb && iv)
        throw std::invalid_argument("ecb does not take an IV");
    if (ciphertext.empty() || ciphertext.size() % kBlockSize != 0)
        throw CorruptionError("ciphertext length " + std::to_string(ciphertext.size()) +
                              " is not a positive multiple of 16");
    Bytes padded;
    switch (mode) {
    case Mode::ecb: padded = ecb_decrypt(ciphertext, ctx); break;
    case Mode::cbc: padded = cbc_decrypt(ciphertext, require_iv(mode, iv), ctx); break;
    case Mode::cfb: padded = cfb_decrypt(ciphertext, require_iv(mode, iv), ctx); break;
    case Mode::ofb: padded = ofb_decrypt(ciphertext, require_iv(mode, iv), ctx); break;
    case Mode::ctr: padded = ctr_decrypt(ciphertext, Counter{require_iv(mode, iv).bytes}, ctx); break;
    }
    return unpad(padded);
}

} // namespace aesbench
