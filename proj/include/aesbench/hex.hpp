#pragma once

#include "aesbench/aes_core.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace aesbench {

/// Exactly 32 hex digits, either case. nullopt on any other input.
std::optional<Block> parse_hex_block(std::string_view hex) noexcept;

/// Lower-case hex.
std::string to_hex(std::span<const Byte> bytes);

} // namespace aesbench
