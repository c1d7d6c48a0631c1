#include "aesbench/hex.hpp"

namespace aesbench {

namespace {

int nibble(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

} // namespace

std::optional<Block> parse_hex_block(std::string_view hex) noexcept
{
    if (hex.size() != 2 * kBlockSize)
        return std::nullopt;
    Block out;
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        const int hi = nibble(hex[2 * i]);
        const int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        out[i] = static_cast<Byte>((hi << 4) | lo);
    }
    return out;
}

std::string to_hex(std::span<const Byte> bytes)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (Byte b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0xF]);
    }
    return s;
}

} // namespace aesbench
