#pragma once

// Standards tables loaded from the bundled (or overridden) configuration file:
// drawing scales, sheet formats, projections, dimension-style ranges, line
// kind stroke parameters and the output palette. Immutable after load.

#include <tcgx/errors.hpp>
#include <tcgx/standards.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tcgx {

struct Scale
{
    std::string label; ///< "1:100", "2.5:1", ...
    double numerator = 1;
    double denominator = 1;

    /// Paper millimetres per natura millimetre.
    double factor() const noexcept { return numerator / denominator; }
    /// How many natura units one paper unit stands for (100 for 1:100).
    double reduction() const noexcept { return denominator / numerator; }
};

using ScaleId = std::uint8_t;

enum class ScaleContext
{
    General,
    ProfileHorizontal,
    ProfileVertical,
};

struct NamedFormat
{
    std::string name;
    int width_mm = 0;
    int height_mm = 0;
};

enum class ProjectionCategory
{
    Axonometric,   ///< the standard's axonometric projections
    View,          ///< the six basic views
    ExtraOblique,  ///< frontal oblique projections used on construction drawings
};

struct Vec2
{
    double x = 0;
    double y = 0;
};

struct Projection
{
    int id = 0;
    std::string name;
    ProjectionCategory category = ProjectionCategory::View;
    std::array<Vec2, 3> axes{};          ///< unit directions of X, Y, Z in the drawing plane
    std::array<double, 3> distortion{};  ///< length factor along each axis (0 = axis seen end-on)
};

struct Range
{
    double min = 0;
    double max = 0;

    bool contains(double v) const noexcept { return v >= min - 1e-9 && v <= max + 1e-9; }
};

struct DimensionRanges
{
    Range arrow_len;
    Range tick_len;
    Range extension_overshoot;
};

struct LineKindStyle
{
    std::string name;
    double stroke_width_mm = 0.35;
    std::vector<double> dash_mm; ///< empty for solid lines
};

class Standards
{
public:
    static constexpr int format_version = 1;
    static constexpr int projection_count = 25;

    /// The configuration compiled into the library.
    static const Standards& bundled();
    /// Parse configuration text; throws ConfigError.
    static Standards parse(std::string_view text);
    static Standards load_file(const std::filesystem::path& path);
    /// $TCGX_CONFIG_DIR/standards.json when the variable is set, else bundled().
    static Standards from_environment();

    const std::vector<Scale>& scales() const noexcept { return scales_; }
    const Scale& scale(ScaleId id) const;
    bool has_scale(ScaleId id) const noexcept { return id < scales_.size(); }
    std::vector<ScaleId> allowed_scales(ScaleContext ctx) const;

    const std::vector<NamedFormat>& formats() const noexcept { return formats_; }
    const NamedFormat& format(std::size_t id) const;

    const std::vector<Projection>& projections() const noexcept { return projections_; }
    const Projection& projection(int id) const;

    const DimensionRanges& dimension_ranges() const noexcept { return dimension_ranges_; }
    const LineKindStyle& line_kind(LineType lt) const { return line_kinds_.at(static_cast<std::size_t>(lt)); }
    const std::array<std::string, 16>& palette() const noexcept { return palette_; }

private:
    std::vector<Scale> scales_;
    Range profile_horizontal_{500, 5000};
    Range profile_vertical_{100, 500};
    std::vector<NamedFormat> formats_;
    std::vector<Projection> projections_;
    DimensionRanges dimension_ranges_;
    std::vector<LineKindStyle> line_kinds_;
    std::array<std::string, 16> palette_;
};

/// Dequantized values checked against the configured standard ranges.
Violations validate_dimension_style(const DimensionStyle& d, const Standards& std = Standards::bundled());

} // namespace tcgx
