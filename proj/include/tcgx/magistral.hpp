#pragma once

// The 26 magistral types: which general settings each one uses, the schema of
// its 12 individual-setting bytes, validation, and expansion into explicit
// segments, arcs, polylines and texts.

#include <tcgx/model.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tcgx::magistral {

inline constexpr int type_count = 26;

enum class FieldKind
{
    Length,      ///< quantized millimetres, 1 or 2 bytes
    Font,        ///< one font byte
    Text,        ///< four code-page bytes, zero padded
    Compression, ///< font compression factor, one byte
};

struct FieldSpec
{
    std::string_view name;
    FieldKind kind = FieldKind::Length;
    Quantizer q{};
    double default_value = 0; ///< Length and Compression fields

    std::size_t width() const noexcept
    {
        switch (kind)
        {
            case FieldKind::Length: return q.width;
            case FieldKind::Text: return 4;
            default: return 1;
        }
    }
};

/// Where a length in the repeating pattern comes from.
enum class Source
{
    None,
    Zero,
    FirstStep,
    Step,
    Picture,
    Field, ///< an individual setting, named by LengthRef::field
};

struct LengthRef
{
    Source source = Source::None;
    std::string_view field{};
};

enum class PatternKind
{
    Periodic, ///< carrier pieces alternating with glyph-bearing gaps
    Wavy,     ///< one sine polyline over the whole carrier
    Rails,    ///< two offset copies of the carrier, no gaps
};

/// Arclength structure: carrier on [0, first], then gap, on, gap, on, ...
struct PatternProgram
{
    PatternKind kind = PatternKind::Periodic;
    LengthRef first;
    LengthRef on;
    LengthRef gap;
    LengthRef doubled{}; ///< when set, carrier pieces are drawn as two lines this far apart
};

enum class GlyphKind
{
    None,
    Arrows,  ///< open arrowheads pointing along the carrier
    Zigzag,  ///< a single break in place of the gap
    Strokes, ///< tilted strokes across the carrier
    DotPair, ///< two dots in the gap
    Text,
    Crosses, ///< diagonal crosses
    Check,   ///< a V mark standing on the carrier
    Dot,     ///< one dot at the gap center
    Bar,     ///< filled-width dash spanning the first half of the gap
    DotDash, ///< dot with a dash across the carrier
};

struct GlyphProgram
{
    GlyphKind kind = GlyphKind::None;
    int count = 1;      ///< arrows, strokes, crosses
    bool shaft = false; ///< the carrier continues through the gap
};

struct TypeDescriptor
{
    std::uint8_t id = 0;
    std::string_view key;  ///< stable identifier, e.g. "thin-with-zigzag"
    std::string_view name; ///< what the line depicts
    bool uses_first_step = true;
    bool uses_step = true;
    bool uses_picture = true;
    std::vector<FieldSpec> fields;
    PatternProgram pattern;
    GlyphProgram glyph;
    bool hatch_eligible = false;
    LineType carrier_line = LineType::SolidMain;
    LineType glyph_line = LineType::SolidMain;

    std::size_t individual_width() const noexcept;
    const FieldSpec* field(std::string_view name) const noexcept;
    int field_index(std::string_view name) const noexcept;
};

/// Throws DomainError unless 1 <= id <= 26.
const TypeDescriptor& descriptor(int id);
std::span<const TypeDescriptor> all_types();
bool hatch_eligible(int id);

// ─── Individual settings ────────────────────────────────────────────────────

using FieldValue = std::variant<double, FontSpec, std::string>;

/// Decoded individual settings, one value per descriptor field in order.
/// Text values hold raw code-page bytes.
struct IndividualSettings
{
    std::vector<FieldValue> values;

    double length(const TypeDescriptor& d, std::string_view name) const;

    friend bool operator==(const IndividualSettings&, const IndividualSettings&) = default;
};

IndividualSettings default_individual(int id);

/// Strict: every field code in range and all unused bytes zero. Offsets in
/// errors are relative to the block start plus `base_offset`.
IndividualSettings decode_individual(int id, std::span<const std::uint8_t, MagistralElement::individual_bytes> bytes,
                                     std::size_t base_offset = 0);

/// Throws DomainError naming the offending field.
std::array<std::uint8_t, MagistralElement::individual_bytes> encode_individual(int id, const IndividualSettings& s);

/// Same checks as encode_individual, reported as data.
Violations check_individual(int id, const IndividualSettings& s);

// ─── Building and validation ────────────────────────────────────────────────

/// General settings in millimetres; 0 marks "not set".
struct GeneralSettings
{
    double first_step_mm = 0;
    double step_mm = 0;
    double picture_mm = 0;
};

GeneralSettings default_general(int id);

/// A magistral in human units, before quantization.
struct MagistralSpec
{
    ElementHeader header;
    CarrierLine carrier = Segment{};
    int type = 1;
    GeneralSettings general;
    IndividualSettings individual;
};

Violations validate(const MagistralSpec& spec);

/// Quantize a spec into its stored form. Throws DomainError carrying the first
/// violation when validate(spec) is not empty.
MagistralElement build(const MagistralSpec& spec);

Violations validate_magistral(const MagistralElement& m);

// ─── Expansion ──────────────────────────────────────────────────────────────

struct Interval
{
    double begin = 0;
    double end = 0;

    double length() const noexcept { return end - begin; }
    double mid() const noexcept { return 0.5 * (begin + end); }
};

/// Resolved pattern lengths in millimetres.
struct Pattern
{
    double first = 0;
    double on = 0;
    double gap = 0;
};

/// How the carrier's arclength [0, L] is split. Glyph anchors are gap midpoints.
struct Layout
{
    double length = 0;
    Pattern pattern;
    std::vector<Interval> carrier_on;
    std::vector<Interval> gaps;
};

Pattern resolve_pattern(const MagistralElement& m);
Layout layout(const MagistralElement& m);

/// Explicit primitives in carrier order. Throws DomainError when
/// validate_magistral(m) is not empty.
std::vector<Element> tessellate(const MagistralElement& m);

/// Sum of element_size() over tessellate(m).
std::size_t expanded_size(const MagistralElement& m);

/// One glyph drawn in `frame` for a gap of length `gap`.
std::vector<Element> draw_glyph(const TypeDescriptor& d, const IndividualSettings& s, const Frame& frame, double gap,
                                const ElementHeader& header);

/// Documented reach of a glyph beyond half the gap, along the tangent.
double glyph_overreach(const TypeDescriptor& d, const IndividualSettings& s, double gap);

inline constexpr int wavy_samples_per_half_wave = 8;
inline constexpr std::size_t max_periods = 1'000'000;

} // namespace tcgx::magistral
