#pragma once

// In-memory drawing: element variants, per-element header, drawing-level
// scale and sheet format, and the Natura/Bumaga coordinate resolution.

#include <tcgx/geometry.hpp>
#include <tcgx/registry.hpp>
#include <tcgx/standards.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tcgx {

/// Record tags; frozen as part of the file format.
enum class ElementTag : std::uint8_t
{
    Segment = 0x01,
    Arc = 0x02,
    Polyline = 0x03,
    Text = 0x04,
    Magistral = 0x05,
};

std::string_view element_tag_name(ElementTag t);

/// Layer and attribute byte; the tag is implied by the element variant.
struct ElementHeader
{
    std::uint8_t layer = 0;
    Attributes attr;

    friend bool operator==(const ElementHeader&, const ElementHeader&) = default;
};

struct SegmentElement
{
    ElementHeader header;
    Segment geom;

    friend bool operator==(const SegmentElement&, const SegmentElement&) = default;
};

/// Also used for circles (|sweep| = 2 pi).
struct ArcElement
{
    ElementHeader header;
    Arc geom;

    friend bool operator==(const ArcElement&, const ArcElement&) = default;
};

struct PolylineElement
{
    static constexpr std::size_t min_vertices = 2;
    static constexpr std::size_t max_vertices = 65535;

    ElementHeader header;
    std::vector<Point> vertices;

    friend bool operator==(const PolylineElement&, const PolylineElement&) = default;
};

/// A single line of text. The anchor is the center of the text box; the
/// string holds raw code-page bytes (see text_encoding.hpp).
struct TextElement
{
    static constexpr std::size_t max_bytes = 255;

    ElementHeader header;
    FontSpec font;
    double compression = 1.0;
    Point anchor;
    double rotation = 0; ///< radians, counterclockwise
    std::string text;

    friend bool operator==(const TextElement&, const TextElement&) = default;
};

/// Parametric utility-line element: carrier line plus settings, regenerated
/// into explicit geometry on demand (see magistral.hpp).
struct MagistralElement
{
    static constexpr std::size_t individual_bytes = 12;

    ElementHeader header;
    CarrierLine carrier = Segment{};
    std::uint8_t type = 1;
    /// Raw 0.01 mm codes. Zero marks a setting the type does not use.
    std::uint16_t first_step = 0;
    std::uint16_t step = 0;
    std::uint16_t picture = 0;
    std::array<std::uint8_t, individual_bytes> individual{};

    friend bool operator==(const MagistralElement&, const MagistralElement&) = default;
};

using Element = std::variant<SegmentElement, ArcElement, PolylineElement, TextElement, MagistralElement>;

ElementTag tag_of(const Element& e) noexcept;
const ElementHeader& header_of(const Element& e) noexcept;
ElementHeader& header_of(Element& e) noexcept;

// ─── Drawing ────────────────────────────────────────────────────────────────

/// Either an index into the configured format table or explicit dimensions
/// in whole millimetres.
struct SheetFormat
{
    enum class Kind : std::uint8_t
    {
        Standard = 0,
        Custom = 1,
    };

    Kind kind = Kind::Standard;
    std::uint16_t standard_id = 0;
    std::uint16_t width_mm = 0;
    std::uint16_t height_mm = 0;

    static SheetFormat standard(std::uint16_t id) { return {Kind::Standard, id, 0, 0}; }
    static SheetFormat custom(std::uint16_t w, std::uint16_t h) { return {Kind::Custom, 0, w, h}; }

    friend bool operator==(const SheetFormat&, const SheetFormat&) = default;
};

struct SheetSize
{
    double width_mm = 0;
    double height_mm = 0;
};

struct Drawing
{
    ScaleId scale = 0;
    SheetFormat format = SheetFormat::standard(4);
    std::vector<Element> elements;

    friend bool operator==(const Drawing&, const Drawing&) = default;
};

/// Sheet dimensions; throws DomainError for an unknown standard format id.
SheetSize sheet_size(const SheetFormat& f, const Standards& st = Standards::bundled());

/// Paper millimetres for a point of an element: Bumaga points pass through,
/// Natura points are scaled about the shared origin.
Point to_paper_mm(const Drawing& d, const Element& e, Point p, const Standards& st = Standards::bundled());
Point to_paper_mm(const Scale& scale, CoordSpace space, Point p) noexcept;

/// Encoded size in bytes, computed without encoding.
std::size_t element_size(const Element& e) noexcept;

/// Standards conformance of a single element (never throws).
Violations validate_element(const Element& e);

/// Every element plus the drawing-level scale and format.
Violations validate_drawing(const Drawing& d, const Standards& st = Standards::bundled());

namespace record_size {
inline constexpr std::size_t header = 3;
inline constexpr std::size_t segment = 19;
inline constexpr std::size_t arc = 23;
inline constexpr std::size_t magistral = 43;
inline constexpr std::size_t polyline_base = 5;
inline constexpr std::size_t text_base = 18;
} // namespace record_size

} // namespace tcgx
