#include <tcgx/magistral.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace tcgx::magistral {

namespace {

constexpr double pi = std::numbers::pi;

std::string mm(double v)
{
    std::ostringstream s;
    s << v << " mm";
    return s.str();
}

double general_mm(std::uint16_t code) { return code * 0.01; }

// ─── Validation helpers ─────────────────────────────────────────────────────

struct GeneralSlot
{
    const char* name;
    bool used;
    std::uint16_t code;
};

void check_general_codes(const TypeDescriptor& d, std::uint16_t first, std::uint16_t step, std::uint16_t picture,
                         Violations& out)
{
    const GeneralSlot slots[] = {
        {"first_step", d.uses_first_step, first},
        {"step", d.uses_step, step},
        {"picture", d.uses_picture, picture},
    };
    for (const auto& s : slots)
    {
        if (s.used && s.code == 0)
            out.push_back({s.name, "required for type " + std::string(d.key) + "; allowed [0.01, 600] mm"});
        else if (s.used && s.code > quant::general.max_code)
            out.push_back({s.name, mm(general_mm(s.code)) + " outside [0.01, 600] mm"});
        else if (!s.used && s.code != 0)
            out.push_back({s.name, "inapplicable for type " + std::string(d.key) + "; stored code " +
                                       std::to_string(s.code) + " must be 0"});
    }
}

double ref_length(const LengthRef& ref, const MagistralElement& m, const TypeDescriptor& d,
                  const IndividualSettings& s)
{
    switch (ref.source)
    {
        case Source::FirstStep: return general_mm(m.first_step);
        case Source::Step: return general_mm(m.step);
        case Source::Picture: return general_mm(m.picture);
        case Source::Field: return s.length(d, ref.field);
        case Source::Zero:
        case Source::None: return 0;
    }
    return 0;
}

Pattern pattern_of(const MagistralElement& m, const TypeDescriptor& d, const IndividualSettings& s)
{
    return Pattern{ref_length(d.pattern.first, m, d, s), ref_length(d.pattern.on, m, d, s),
                   ref_length(d.pattern.gap, m, d, s)};
}

std::size_t wavy_half_waves(double len, double half_wave)
{
    return static_cast<std::size_t>(std::max(1.0, std::round(len / half_wave)));
}

// Checks that depend on the carrier and the decoded settings together.
void check_geometry(const MagistralElement& m, const TypeDescriptor& d, const IndividualSettings& s, Violations& out)
{
    const double len = length(m.carrier);
    const Arc* arc = std::get_if<Arc>(&m.carrier);
    switch (d.pattern.kind)
    {
        case PatternKind::Wavy:
        {
            const double hw = s.length(d, "half_wave_length");
            if (len / hw > 1e9 || wavy_half_waves(len, hw) * wavy_samples_per_half_wave + 1 >
                                      PolylineElement::max_vertices)
                out.push_back({"half_wave_length", mm(hw) + " is too short for a " + mm(len) +
                                                       " carrier; the wave would exceed 65535 vertices"});
            break;
        }
        case PatternKind::Rails:
        {
            const double off = s.length(d, "rail_offset");
            if (arc && !(arc->radius - off > 0))
                out.push_back({"rail_offset", mm(off) + " reaches the center of an arc of radius " + mm(arc->radius)});
            break;
        }
        case PatternKind::Periodic:
        {
            const Pattern p = pattern_of(m, d, s);
            if ((len - p.first) / (p.on + p.gap) > static_cast<double>(max_periods))
                out.push_back({"pattern", "more than " + std::to_string(max_periods) + " periods on a " + mm(len) +
                                              " carrier"});
            if (d.pattern.doubled.source == Source::Field && arc)
            {
                const double half = 0.5 * s.length(d, d.pattern.doubled.field);
                if (!(arc->radius - half > 0))
                    out.push_back({std::string(d.pattern.doubled.field),
                                   "parallel lines reach the center of an arc of radius " + mm(arc->radius)});
            }
            break;
        }
    }
}

// ─── Emission helpers ───────────────────────────────────────────────────────

ElementHeader with_line(const ElementHeader& h, LineType lt)
{
    ElementHeader out = h;
    out.attr.line = lt;
    return out;
}

Element carrier_element(const CarrierLine& c, const ElementHeader& h)
{
    if (const auto* s = std::get_if<Segment>(&c))
        return SegmentElement{h, *s};
    return ArcElement{h, std::get<Arc>(c)};
}

class GlyphSink
{
public:
    GlyphSink(const Frame& f, const ElementHeader& h, std::vector<Element>& out) : f_(f), h_(h), out_(out) {}

    void segment(double u1, double v1, double u2, double v2)
    {
        out_.push_back(SegmentElement{h_, Segment{f_.at(u1, v1), f_.at(u2, v2)}});
    }

    void polyline(std::initializer_list<std::pair<double, double>> pts)
    {
        PolylineElement p{h_, {}};
        for (const auto& [u, v] : pts)
            p.vertices.push_back(f_.at(u, v));
        out_.push_back(std::move(p));
    }

    void circle(double u, double v, double r)
    {
        out_.push_back(ArcElement{h_, Arc{f_.at(u, v), r, 0.0, 2 * pi}});
    }

private:
    const Frame& f_;
    const ElementHeader& h_;
    std::vector<Element>& out_;
};

// Centers of `count` marks spaced `spacing` apart around 0.
std::vector<double> mark_centers(int count, double spacing)
{
    std::vector<double> c;
    for (int k = 0; k < count; ++k)
        c.push_back((k - 0.5 * (count - 1)) * spacing);
    return c;
}

double optional_length(const TypeDescriptor& d, const IndividualSettings& s, std::string_view name)
{
    return d.field(name) ? s.length(d, name) : 0.0;
}

std::uint16_t general_code(double v, const char* field)
{
    return v == 0 ? std::uint16_t{0} : static_cast<std::uint16_t>(quantize(quant::general, v, field));
}

MagistralElement to_element(const MagistralSpec& spec)
{
    MagistralElement m;
    m.header = spec.header;
    m.carrier = spec.carrier;
    m.type = static_cast<std::uint8_t>(spec.type);
    m.first_step = general_code(spec.general.first_step_mm, "first_step");
    m.step = general_code(spec.general.step_mm, "step");
    m.picture = general_code(spec.general.picture_mm, "picture");
    m.individual = encode_individual(spec.type, spec.individual);
    return m;
}

} // namespace

// ─── Validation ─────────────────────────────────────────────────────────────

Violations validate_magistral(const MagistralElement& m)
{
    Violations out;
    if (m.type < 1 || m.type > type_count)
    {
        out.push_back({"type", std::to_string(m.type) + " is not a magistral type 1..26"});
        return out;
    }
    const auto& d = descriptor(m.type);
    if (const char* defect = carrier_defect(m.carrier); *defect)
        out.push_back({"carrier", defect});
    check_general_codes(d, m.first_step, m.step, m.picture, out);

    IndividualSettings s;
    try
    {
        s = decode_individual(m.type, m.individual);
    }
    catch (const DecodeError& e)
    {
        out.push_back({"individual", "byte " + std::to_string(e.offset()) + ": " + e.detail()});
    }
    if (out.empty())
        check_geometry(m, d, s, out);
    return out;
}

Violations validate(const MagistralSpec& spec)
{
    Violations out;
    if (spec.type < 1 || spec.type > type_count)
    {
        out.push_back({"type", std::to_string(spec.type) + " is not a magistral type 1..26"});
        return out;
    }
    const auto& d = descriptor(spec.type);
    if (const char* defect = carrier_defect(spec.carrier); *defect)
        out.push_back({"carrier", defect});

    const struct
    {
        const char* name;
        bool used;
        double value;
    } slots[] = {
        {"first_step", d.uses_first_step, spec.general.first_step_mm},
        {"step", d.uses_step, spec.general.step_mm},
        {"picture", d.uses_picture, spec.general.picture_mm},
    };
    for (const auto& s : slots)
    {
        if (!s.used)
        {
            if (s.value != 0)
                out.push_back({s.name, "inapplicable for type " + std::string(d.key) + "; must not be set"});
            continue;
        }
        if (s.value == 0)
        {
            out.push_back({s.name, "required for type " + std::string(d.key) + "; allowed [0.01, 600] mm"});
            continue;
        }
        try
        {
            (void)quantize(quant::general, s.value, s.name);
        }
        catch (const DomainError&)
        {
            out.push_back({s.name, mm(s.value) + " outside [0.01, 600] mm"});
        }
    }
    for (auto& v : check_individual(spec.type, spec.individual))
        out.push_back(std::move(v));
    if (static_cast<unsigned>(spec.header.attr.line) >= line_type_count)
        out.push_back({"line_type", "not a line type"});
    if (spec.header.attr.color > 15)
        out.push_back({"color", "index exceeds 15"});
    if (!out.empty())
        return out;

    // Everything is representable now; the remaining checks need the stored form.
    return validate_magistral(to_element(spec));
}

MagistralElement build(const MagistralSpec& spec)
{
    if (auto v = validate(spec); !v.empty())
        throw DomainError(v.front().field, v.front().message);
    return to_element(spec);
}

// ─── Layout ─────────────────────────────────────────────────────────────────

Pattern resolve_pattern(const MagistralElement& m)
{
    const auto& d = descriptor(m.type);
    return pattern_of(m, d, decode_individual(m.type, m.individual));
}

Layout layout(const MagistralElement& m)
{
    const auto& d = descriptor(m.type);
    Layout out;
    out.length = length(m.carrier);
    const double len = out.length;
    if (d.pattern.kind != PatternKind::Periodic)
    {
        out.carrier_on.push_back({0, len});
        return out;
    }

    const Pattern p = resolve_pattern(m);
    out.pattern = p;
    const double period = p.on + p.gap;
    const double eps = 1e-9 * std::max(1.0, len);
    double carrier_start = 0;
    for (std::size_t k = 0;; ++k)
    {
        // max(): with a zero on-length, rounding can put a gap start a hair before the previous end.
        const double begin = std::max(carrier_start, p.first + static_cast<double>(k) * period);
        const double end = begin + p.gap;
        if (end > len + eps)
            break;
        out.carrier_on.push_back({carrier_start, begin});
        out.gaps.push_back({begin, std::min(end, len)});
        carrier_start = std::min(end, len);
    }
    out.carrier_on.push_back({carrier_start, len});
    return out;
}

// ─── Glyphs ─────────────────────────────────────────────────────────────────

std::vector<Element> draw_glyph(const TypeDescriptor& d, const IndividualSettings& s, const Frame& frame, double gap,
                                const ElementHeader& header)
{
    std::vector<Element> out;
    const ElementHeader h = with_line(header, d.glyph_line);
    GlyphSink g(frame, h, out);
    const double half = 0.5 * gap;

    switch (d.glyph.kind)
    {
        case GlyphKind::None: break;
        case GlyphKind::Arrows:
        {
            const double a = s.length(d, "arrow_long");
            const double b = s.length(d, "arrow_trans");
            const double spacing = optional_length(d, s, "arrow_spacing");
            for (double c : mark_centers(d.glyph.count, spacing))
                g.polyline({{c - 0.5 * a, b}, {c + 0.5 * a, 0}, {c - 0.5 * a, -b}});
            break;
        }
        case GlyphKind::Zigzag:
        {
            const double h2 = 0.5 * s.length(d, "zigzag_height");
            g.polyline({{-half, 0}, {-gap / 6, h2}, {gap / 6, -h2}, {half, 0}});
            break;
        }
        case GlyphKind::Strokes:
        {
            const double h2 = 0.5 * s.length(d, "stroke_height");
            const double tilt2 = 0.5 * s.length(d, "stroke_tilt");
            const double spacing = optional_length(d, s, "stroke_spacing");
            for (double c : mark_centers(d.glyph.count, spacing))
                g.segment(c - tilt2, -h2, c + tilt2, h2);
            break;
        }
        case GlyphKind::DotPair:
        {
            const double c = s.length(d, "dot_spacing");
            for (double u : mark_centers(2, c))
                g.circle(u, 0, 0.25 * c);
            break;
        }
        case GlyphKind::Text:
        {
            const auto& text = std::get<std::string>(s.values[static_cast<std::size_t>(d.field_index("text"))]);
            if (text.empty())
                break;
            TextElement t;
            t.header = h;
            t.font = std::get<FontSpec>(s.values[static_cast<std::size_t>(d.field_index("font"))]);
            t.compression = s.length(d, "compression");
            t.anchor = frame.origin;
            double rot = std::atan2(frame.tangent.y, frame.tangent.x);
            if (frame.tangent.x < 0)
                rot = rot > 0 ? rot - pi : rot + pi;
            t.rotation = rot;
            t.text = text;
            out.push_back(std::move(t));
            break;
        }
        case GlyphKind::Crosses:
        {
            const double h2 = 0.5 * s.length(d, "cross_height");
            const double spacing = optional_length(d, s, "cross_spacing");
            for (double c : mark_centers(d.glyph.count, spacing))
            {
                g.segment(c - h2, -h2, c + h2, h2);
                g.segment(c - h2, h2, c + h2, -h2);
            }
            break;
        }
        case GlyphKind::Check:
        {
            const double h = s.length(d, "check_height");
            const double w2 = 0.5 * s.length(d, "check_width");
            g.polyline({{-w2, h}, {0, 0}, {w2, h}});
            break;
        }
        case GlyphKind::Dot: g.circle(0, 0, 0.5 * s.length(d, "dot_diameter")); break;
        case GlyphKind::Bar:
        {
            const double w2 = 0.5 * s.length(d, "stroke_width");
            g.polyline({{-half, -w2}, {0, -w2}, {0, w2}, {-half, w2}, {-half, -w2}});
            break;
        }
        case GlyphKind::DotDash:
        {
            const double a2 = 0.5 * s.length(d, "dash_length");
            g.segment(0, -a2, 0, a2);
            g.circle(0, 0, 0.5 * s.length(d, "dot_diameter"));
            break;
        }
    }
    return out;
}

double glyph_overreach(const TypeDescriptor& d, const IndividualSettings& s, double gap)
{
    double extent = 0;
    switch (d.glyph.kind)
    {
        case GlyphKind::Arrows:
            extent = 0.5 * (d.glyph.count - 1) * optional_length(d, s, "arrow_spacing") + 0.5 * s.length(d, "arrow_long");
            break;
        case GlyphKind::Strokes:
            extent = 0.5 * (d.glyph.count - 1) * optional_length(d, s, "stroke_spacing") +
                     0.5 * s.length(d, "stroke_tilt");
            break;
        case GlyphKind::DotPair: extent = 0.75 * s.length(d, "dot_spacing"); break;
        case GlyphKind::Crosses:
            extent = 0.5 * (d.glyph.count - 1) * optional_length(d, s, "cross_spacing") +
                     0.5 * s.length(d, "cross_height");
            break;
        case GlyphKind::Check: extent = 0.5 * s.length(d, "check_width"); break;
        case GlyphKind::Dot:
        case GlyphKind::DotDash: extent = 0.5 * s.length(d, "dot_diameter"); break;
        case GlyphKind::None:
        case GlyphKind::Zigzag:
        case GlyphKind::Text:
        case GlyphKind::Bar: extent = 0; break;
    }
    return std::max(0.0, extent - 0.5 * gap);
}

// ─── Tessellation ───────────────────────────────────────────────────────────

std::vector<Element> tessellate(const MagistralElement& m)
{
    if (auto v = validate_magistral(m); !v.empty())
        throw DomainError(v.front().field, "cannot expand invalid magistral: " + v.front().message);

    const auto& d = descriptor(m.type);
    const IndividualSettings s = decode_individual(m.type, m.individual);
    const ElementHeader carrier_header = with_line(m.header, d.carrier_line);
    std::vector<Element> out;

    switch (d.pattern.kind)
    {
        case PatternKind::Rails:
        {
            const double off = s.length(d, "rail_offset");
            out.push_back(carrier_element(offset(m.carrier, off), carrier_header));
            out.push_back(carrier_element(offset(m.carrier, -off), carrier_header));
            return out;
        }
        case PatternKind::Wavy:
        {
            const double len = length(m.carrier);
            const double height = s.length(d, "half_wave_height");
            const std::size_t n = wavy_half_waves(len, s.length(d, "half_wave_length"));
            const std::size_t samples = n * wavy_samples_per_half_wave;
            PolylineElement p{carrier_header, {}};
            p.vertices.reserve(samples + 1);
            for (std::size_t j = 0; j <= samples; ++j)
            {
                const double at = j == samples ? len : len * static_cast<double>(j) / static_cast<double>(samples);
                const double phase = pi * static_cast<double>(j % (2 * wavy_samples_per_half_wave)) /
                                     wavy_samples_per_half_wave;
                const double v = j % wavy_samples_per_half_wave == 0 ? 0.0 : height * std::sin(phase);
                p.vertices.push_back(frame_at(m.carrier, at).at(0, v));
            }
            out.push_back(std::move(p));
            return out;
        }
        case PatternKind::Periodic: break;
    }

    const Layout lay = layout(m);
    const double doubled = d.pattern.doubled.source == Source::Field ? s.length(d, d.pattern.doubled.field) : 0.0;
    const auto emit_piece = [&](const Interval& iv) {
        if (!(iv.length() > 1e-6)) // slivers left by float rounding at the carrier end
            return;
        const CarrierLine piece = sub_carrier(m.carrier, iv.begin, iv.end);
        if (doubled > 0)
        {
            out.push_back(carrier_element(offset(piece, 0.5 * doubled), carrier_header));
            out.push_back(carrier_element(offset(piece, -0.5 * doubled), carrier_header));
        }
        else
        {
            out.push_back(carrier_element(piece, carrier_header));
        }
    };

    for (std::size_t k = 0; k < lay.carrier_on.size(); ++k)
    {
        emit_piece(lay.carrier_on[k]);
        if (k >= lay.gaps.size())
            continue;
        const Interval& gap = lay.gaps[k];
        if (d.glyph.shaft)
            emit_piece(gap);
        for (auto& e : draw_glyph(d, s, frame_at(m.carrier, gap.mid()), gap.length(), m.header))
            out.push_back(std::move(e));
    }
    return out;
}

std::size_t expanded_size(const MagistralElement& m)
{
    std::size_t total = 0;
    for (const auto& e : tessellate(m))
        total += element_size(e);
    return total;
}

} // namespace tcgx::magistral
