#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmohocc {

std::string to_hex(std::span<const std::uint8_t> bytes);

// Accepts upper or lower case, optional "0x" prefix. Throws KeyFormatError on
// odd length or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace mmohocc
