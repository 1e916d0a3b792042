#pragma once

// Stored text is single-byte Windows-1251. These convert at the edges
// (command line input, SVG and inspect output).

#include <string>
#include <string_view>

namespace tcgx {

/// Throws DomainError for characters outside the code page or malformed UTF-8.
std::string utf8_to_cp1251(std::string_view utf8);

/// Unassigned code points become U+FFFD.
std::string cp1251_to_utf8(std::string_view bytes);

} // namespace tcgx
