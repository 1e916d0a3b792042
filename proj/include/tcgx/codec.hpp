#pragma once

// Little-endian binary encoding of elements and drawings (.tcgx).
// Layouts are documented byte by byte in docs/format.md.

#include <tcgx/model.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace tcgx {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint16_t file_version = 1;
inline constexpr std::size_t file_header_size = 16;
inline constexpr std::size_t carrier_encoding_size = 21;

enum class CarrierKind : std::uint8_t
{
    Segment = 0,
    Arc = 1,
};

/// Appends the record for `e`. Throws DomainError for elements the format
/// cannot represent (bad codes, non-finite or float-overflowing values).
void encode_element(const Element& e, Bytes& out);
Bytes encode_element(const Element& e);

struct Decoded
{
    Element element;
    std::size_t consumed = 0;
};

/// Decodes one record starting at `offset`. Errors carry absolute offsets.
Decoded decode_element(std::span<const std::uint8_t> bytes, std::size_t offset = 0);

Bytes encode_drawing(const Drawing& d);

/// Strict: bad magic, unsupported version, trailing bytes and every
/// element-level defect raise DecodeError (with the element index when known).
Drawing decode_drawing(std::span<const std::uint8_t> bytes);

/// The 21-byte carrier record used inside magistrals.
void encode_carrier(const CarrierLine& c, Bytes& out);
CarrierLine decode_carrier(std::span<const std::uint8_t> bytes, std::size_t offset);

} // namespace tcgx
