#pragma once

// Legal value domains for everything stored in a drawing, and the fixed-step
// quantizers used by the binary encodings.

#include <tcgx/errors.hpp>

#include <array>
#include <cstdint>
#include <string_view>

namespace tcgx {

// ─── Line attributes ────────────────────────────────────────────────────────

/// Six line kinds distinguished by thickness and dash structure, plus the
/// thickened dashed line used on construction drawings. Codes are format-frozen.
enum class LineType : std::uint8_t
{
    SolidMain = 0,
    SolidThin = 1,
    DashedThin = 2,
    DashDotThin = 3,
    DashDotThick = 4,
    DashDotDotThin = 5,
    DashedThick = 6,
};

inline constexpr int line_type_count = 7;

std::string_view line_type_name(LineType lt);

enum class CoordSpace : std::uint8_t
{
    Natura = 0, ///< model space; scaled by the drawing scale for output
    Bumaga = 1, ///< paper space; millimetres on the sheet
};

std::string_view coord_space_name(CoordSpace s);

/// Line type (3 bits), color index (4 bits) and coordinate space (1 bit).
struct Attributes
{
    LineType line = LineType::SolidMain;
    std::uint8_t color = 0;
    CoordSpace space = CoordSpace::Bumaga;

    friend bool operator==(const Attributes&, const Attributes&) = default;
};

/// bits 0-2 line type, bits 3-6 color, bit 7 space. Throws DomainError.
std::uint8_t pack_attr(const Attributes& a);

/// Throws DecodeError at `offset` when the line-type field is 7.
Attributes unpack_attr(std::uint8_t b, std::size_t offset = 0);

// ─── Fonts ──────────────────────────────────────────────────────────────────

enum class Slant : std::uint8_t
{
    Upright = 90,
    Italic = 75,
};

struct FontSpec
{
    double size_mm = 3.5;
    int slant_deg = 90;

    friend bool operator==(const FontSpec&, const FontSpec&) = default;
};

inline constexpr std::array<double, 9> font_sizes_mm{2.5, 3.5, 5, 7, 10, 14, 20, 28, 40};

bool is_legal_font(const FontSpec& f) noexcept;

/// Low 7 bits: size in 0.5 mm units; high bit set for a 75 degree slant.
std::uint8_t encode_font(const FontSpec& f);
FontSpec decode_font(std::uint8_t b, std::size_t offset = 0);

// ─── Quantizers ─────────────────────────────────────────────────────────────

/// A fixed-step length encoding. The step is kept in hundredths of a
/// millimetre so that every legal step is exact.
struct Quantizer
{
    std::uint16_t step_centi = 1; ///< 1 = 0.01 mm, 10 = 0.1 mm, 20 = 0.2 mm, 50 = 0.5 mm
    std::int32_t min_code = 0;
    std::int32_t max_code = 0;
    std::uint8_t width = 1; ///< bytes in storage

    double step() const noexcept { return step_centi / 100.0; }
    double min_value() const noexcept { return min_code * step_centi / 100.0; }
    double max_value() const noexcept { return max_code * step_centi / 100.0; }
    bool contains(std::int64_t code) const noexcept { return code >= min_code && code <= max_code; }

    friend bool operator==(const Quantizer&, const Quantizer&) = default;
};

/// Round-half-up to the nearest code. Throws DomainError naming `field` when
/// the code falls outside [min_code, max_code].
std::int32_t quantize(const Quantizer& q, double value_mm, std::string_view field = {});
double dequantize(const Quantizer& q, std::int32_t code, std::string_view field = {});

namespace quant {

/// Magistral general settings: 0.01 - 600 mm, two bytes.
inline constexpr Quantizer general{1, 1, 60000, 2};
/// Default individual setting: 0.1 - 25 mm, one byte.
inline constexpr Quantizer q8{10, 1, 250, 1};
/// Font compression factor 0.10 - 2.55, one byte.
inline constexpr Quantizer compression{1, 10, 255, 1};
/// Dimension-style lengths, 0.2 mm step.
inline constexpr Quantizer arrow_len{20, 1, 60, 1};
inline constexpr Quantizer tick_len{20, 1, 50, 1};
inline constexpr Quantizer extension_overshoot{20, 1, 60, 1};

constexpr Quantizer q8_range(std::int32_t lo, std::int32_t hi) { return {10, lo, hi, 1}; }
constexpr Quantizer q16_range(std::int32_t lo, std::int32_t hi) { return {1, lo, hi, 2}; }

} // namespace quant

// ─── Dimension style ────────────────────────────────────────────────────────

/// Stored codes cover a range 2-3 times wider than the drawing standard allows;
/// validate_dimension_style() enforces the narrower range from configuration.
struct DimensionStyle
{
    std::uint8_t arrow_len = 0;
    std::uint8_t tick_len = 0;
    std::uint8_t extension_overshoot = 0;

    static DimensionStyle from_mm(double arrow, double tick, double overshoot);

    friend bool operator==(const DimensionStyle&, const DimensionStyle&) = default;
};

} // namespace tcgx
