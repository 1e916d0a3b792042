#include <tcgx/standards.hpp>

#include <cmath>
#include <string>

namespace tcgx {

std::string_view line_type_name(LineType lt)
{
    switch (lt)
    {
        case LineType::SolidMain: return "solid_main";
        case LineType::SolidThin: return "solid_thin";
        case LineType::DashedThin: return "dashed_thin";
        case LineType::DashDotThin: return "dash_dot_thin";
        case LineType::DashDotThick: return "dash_dot_thick";
        case LineType::DashDotDotThin: return "dash_dot_dot_thin";
        case LineType::DashedThick: return "dashed_thick";
    }
    return "invalid";
}

std::string_view coord_space_name(CoordSpace s)
{
    return s == CoordSpace::Natura ? "natura" : "bumaga";
}

std::uint8_t pack_attr(const Attributes& a)
{
    const auto code = static_cast<unsigned>(a.line);
    if (code >= line_type_count)
        throw DomainError("line_type", "code " + std::to_string(code) + " is not one of the 7 line types");
    if (a.color > 15)
        throw DomainError("color", "index " + std::to_string(a.color) + " exceeds 15");
    return static_cast<std::uint8_t>(code | (a.color << 3) | (a.space == CoordSpace::Bumaga ? 0x80u : 0u));
}

Attributes unpack_attr(std::uint8_t b, std::size_t offset)
{
    const unsigned code = b & 0x07u;
    if (code >= line_type_count)
        throw DecodeError(offset, "attribute byte has line-type field 7");
    return Attributes{static_cast<LineType>(code), static_cast<std::uint8_t>((b >> 3) & 0x0Fu),
                      (b & 0x80u) ? CoordSpace::Bumaga : CoordSpace::Natura};
}

namespace {

int font_half_mm(double size_mm) noexcept
{
    for (double s : font_sizes_mm)
        if (s == size_mm)
            return static_cast<int>(s * 2);
    return -1;
}

} // namespace

bool is_legal_font(const FontSpec& f) noexcept
{
    return font_half_mm(f.size_mm) > 0 && (f.slant_deg == 90 || f.slant_deg == 75);
}

std::uint8_t encode_font(const FontSpec& f)
{
    const int half = font_half_mm(f.size_mm);
    if (half < 0)
        throw DomainError("font.size", std::to_string(f.size_mm) + " mm is not a standard font size");
    if (f.slant_deg != 90 && f.slant_deg != 75)
        throw DomainError("font.slant", std::to_string(f.slant_deg) + " deg is neither 90 nor 75");
    return static_cast<std::uint8_t>(half | (f.slant_deg == 75 ? 0x80 : 0));
}

FontSpec decode_font(std::uint8_t b, std::size_t offset)
{
    const int half = b & 0x7F;
    for (double s : font_sizes_mm)
        if (static_cast<int>(s * 2) == half)
            return FontSpec{s, (b & 0x80) ? 75 : 90};
    throw DecodeError(offset, "font byte " + std::to_string(b) + " does not encode a standard font size");
}

std::int32_t quantize(const Quantizer& q, double value_mm, std::string_view field)
{
    if (!std::isfinite(value_mm))
        throw DomainError(std::string(field), "value is not finite");
    // Snap to a millionth of a step first so decimal inputs like 12.345 round
    // the way they read rather than the way they happen to be represented.
    const double steps = std::round(value_mm * 100.0 / q.step_centi * 1e6) / 1e6;
    const double code = std::floor(steps + 0.5);
    if (code < q.min_code || code > q.max_code)
    {
        throw DomainError(std::string(field), std::to_string(value_mm) + " mm outside [" +
                                                  std::to_string(q.min_value()) + ", " +
                                                  std::to_string(q.max_value()) + "]");
    }
    return static_cast<std::int32_t>(code);
}

double dequantize(const Quantizer& q, std::int32_t code, std::string_view field)
{
    if (!q.contains(code))
        throw DomainError(std::string(field), "code " + std::to_string(code) + " outside [" +
                                                  std::to_string(q.min_code) + ", " +
                                                  std::to_string(q.max_code) + "]");
    return code * static_cast<double>(q.step_centi) / 100.0;
}

DimensionStyle DimensionStyle::from_mm(double arrow, double tick, double overshoot)
{
    return DimensionStyle{static_cast<std::uint8_t>(quantize(quant::arrow_len, arrow, "arrow_len")),
                          static_cast<std::uint8_t>(quantize(quant::tick_len, tick, "tick_len")),
                          static_cast<std::uint8_t>(
                              quantize(quant::extension_overshoot, overshoot, "extension_overshoot"))};
}

} // namespace tcgx
