#include <tcgx/magistral.hpp>

#include <cstring>
#include <sstream>

namespace tcgx::magistral {

namespace {

using quant::q16_range;
using quant::q8_range;

FieldSpec len(std::string_view name, Quantizer q, double def) { return FieldSpec{name, FieldKind::Length, q, def}; }
FieldSpec q8(std::string_view name, double def) { return len(name, quant::q8, def); }

std::vector<FieldSpec> text_fields()
{
    return {
        FieldSpec{"font", FieldKind::Font, {}, 0},
        FieldSpec{"text", FieldKind::Text, {}, 0},
        FieldSpec{"compression", FieldKind::Compression, quant::compression, 1.0},
    };
}

constexpr LengthRef first_step{Source::FirstStep};
constexpr LengthRef step{Source::Step};
constexpr LengthRef picture{Source::Picture};
constexpr LengthRef zero{Source::Zero};
constexpr LengthRef field(std::string_view name) { return LengthRef{Source::Field, name}; }

constexpr PatternProgram standard_pattern{PatternKind::Periodic, first_step, step, picture};

// Flags: F = first step, S = step, P = picture.
struct Uses
{
    bool first, step, picture;
};
constexpr Uses FSP{true, true, true};

TypeDescriptor make(std::uint8_t id, std::string_view key, std::string_view name, Uses uses,
                    std::vector<FieldSpec> fields, PatternProgram pattern, GlyphProgram glyph, LineType carrier,
                    LineType glyph_line, bool hatch = false)
{
    TypeDescriptor d;
    d.id = id;
    d.key = key;
    d.name = name;
    d.uses_first_step = uses.first;
    d.uses_step = uses.step;
    d.uses_picture = uses.picture;
    d.fields = std::move(fields);
    d.pattern = pattern;
    d.glyph = glyph;
    d.hatch_eligible = hatch;
    d.carrier_line = carrier;
    d.glyph_line = glyph_line;
    return d;
}

std::vector<TypeDescriptor> build_registry()
{
    using LT = LineType;
    using GK = GlyphKind;
    const auto main = LT::SolidMain;
    const auto thin = LT::SolidThin;

    std::vector<TypeDescriptor> r;
    r.reserve(type_count);

    r.push_back(make(1, "single-arrows", "low-voltage cable", FSP,
                     {len("arrow_long", q8_range(1, 120), 2.0), q8("arrow_trans", 1.0)}, standard_pattern,
                     {GK::Arrows, 1, true}, main, main));
    r.push_back(make(2, "double-arrows", "high-voltage cable", FSP,
                     {len("arrow_long", q8_range(1, 120), 2.0), q8("arrow_trans", 1.0), q8("arrow_spacing", 2.0)},
                     standard_pattern, {GK::Arrows, 2, true}, main, main));
    r.push_back(make(3, "wavy", "break line, flexible pipe or hose", {false, false, true},
                     {len("half_wave_length", q16_range(1, 30000), 5.0),
                      len("half_wave_height", q16_range(10, 15000), 1.5)},
                     {PatternKind::Wavy, {}, {}, {}}, {GK::None}, thin, thin, true));
    r.push_back(make(4, "thin-with-zigzag", "long break line", FSP, {q8("zigzag_height", 3.0)}, standard_pattern,
                     {GK::Zigzag}, thin, thin, true));
    r.push_back(make(5, "single-stroke", "domestic sewer", FSP, {q8("stroke_height", 3.0), q8("stroke_tilt", 1.0)},
                     standard_pattern, {GK::Strokes, 1, true}, main, main));
    r.push_back(make(6, "double-stroke", "industrial sewer", FSP,
                     {q8("stroke_height", 3.0), q8("stroke_spacing", 1.0), q8("stroke_tilt", 1.0)}, standard_pattern,
                     {GK::Strokes, 2, true}, main, main));
    r.push_back(make(7, "triple-stroke", "auxiliary line", FSP,
                     {q8("stroke_height", 3.0), q8("stroke_spacing", 1.0), q8("stroke_tilt", 1.0)}, standard_pattern,
                     {GK::Strokes, 3, true}, main, main));
    r.push_back(make(8, "double-dot", "auxiliary line", FSP, {q8("dot_spacing", 2.0)}, standard_pattern,
                     {GK::DotPair}, main, main));
    r.push_back(make(9, "solid-main-with-text", "designed pipeline", FSP, text_fields(), standard_pattern,
                     {GK::Text}, main, main));
    r.push_back(make(10, "dashed-thin-with-text", "hidden existing pipeline or trench network", FSP, text_fields(),
                     standard_pattern, {GK::Text}, LT::DashedThin, thin));
    r.push_back(make(11, "single-cross", "filtered water supply", FSP, {q8("cross_height", 3.0)}, standard_pattern,
                     {GK::Crosses, 1, true}, main, main));
    r.push_back(make(12, "double-cross", "filtered water return", FSP,
                     {q8("cross_height", 3.0), q8("cross_spacing", 2.0)}, standard_pattern, {GK::Crosses, 2, true},
                     main, main));
    r.push_back(make(13, "single-check", "storm sewer", FSP, {q8("check_height", 3.0), q8("check_width", 3.0)},
                     standard_pattern, {GK::Check, 1, true}, main, main));
    r.push_back(make(14, "solid-thin-with-text", "existing pipeline", FSP, text_fields(), standard_pattern,
                     {GK::Text}, thin, thin));
    r.push_back(make(15, "dashed-thickened-with-text", "hidden designed pipeline", FSP, text_fields(),
                     standard_pattern, {GK::Text}, LT::DashedThick, main));
    r.push_back(make(16, "railroad", "railway track", {false, false, true},
                     {len("rail_offset", q16_range(1, 60000), 1.5)}, {PatternKind::Rails, {}, {}, {}}, {GK::None},
                     main, main));
    r.push_back(make(17, "open-conductor-main", "open wiring, main line", FSP, {q8("zigzag_height", 3.0)},
                     standard_pattern, {GK::Zigzag}, main, main));
    r.push_back(make(18, "open-conductor-thin", "open wiring, thin line", FSP, {q8("zigzag_height", 3.0)},
                     standard_pattern, {GK::Zigzag}, thin, thin));
    r.push_back(make(19, "special-dashed", "custom dashed line, pedestrian crossing", {true, false, true},
                     {len("stroke_width", q16_range(1, 60000), 3.0)},
                     {PatternKind::Periodic, first_step, zero, picture}, {GK::Bar}, thin, thin));
    r.push_back(make(20, "low-voltage", "circuit of 36 V or less", {true, true, false},
                     {len("dot_diameter", q16_range(1, 2550), 1.0)},
                     {PatternKind::Periodic, first_step, step, field("dot_diameter")}, {GK::Dot, 1, true}, main,
                     main));
    r.push_back(make(21, "emergency-low-voltage", "emergency lighting of 36 V or less", {true, false, false},
                     {len("gap_length", q16_range(1, 60000), 5.0), len("dash_length", q16_range(1, 60000), 10.0),
                      len("dot_diameter", q16_range(1, 2550), 1.0)},
                     {PatternKind::Periodic, first_step, field("dash_length"), field("gap_length")}, {GK::Dot}, main,
                     main));
    r.push_back(make(22, "grounding-conductor", "grounding conductor", {false, false, false},
                     {len("stroke_spacing", q16_range(1, 60000), 5.0), len("dash_length", q16_range(1, 60000), 10.0),
                      len("cross_height", q16_range(1, 2550), 2.0)},
                     {PatternKind::Periodic, field("dash_length"), field("dash_length"), field("stroke_spacing")},
                     {GK::Crosses, 1, false}, main, main));
    r.push_back(make(23, "high-voltage-cable", "high-voltage cable", {true, false, true},
                     {len("gap_length", q16_range(1, 60000), 5.0), len("arrow_long", q8_range(0, 120), 2.0),
                      len("arrow_trans", q16_range(5, 2500), 1.0)},
                     {PatternKind::Periodic, first_step, picture, field("gap_length")}, {GK::Arrows, 1, true}, main,
                     main));
    r.push_back(make(24, "water-pipe", "water supply", {true, false, true},
                     {len("gap_length", q16_range(1, 60000), 5.0), q8("line_spacing", 1.5)},
                     {PatternKind::Periodic, first_step, picture, field("gap_length"), field("line_spacing")},
                     {GK::None}, main, main));
    r.push_back(make(25, "grounding-line", "grounding line", FSP, {len("dot_diameter", q16_range(1, 2550), 1.0)},
                     standard_pattern, {GK::Dot, 1, true}, main, main));
    r.push_back(make(26, "low-current-cable", "low-current cable", {true, false, true},
                     {len("gap_length", q16_range(1, 60000), 5.0), len("dash_length", q16_range(1, 60000), 3.0),
                      len("dot_diameter", q16_range(1, 2550), 1.0)},
                     {PatternKind::Periodic, first_step, picture, field("gap_length")}, {GK::DotDash}, main, main));
    return r;
}

const std::vector<TypeDescriptor>& registry()
{
    static const std::vector<TypeDescriptor> r = build_registry();
    return r;
}

std::string describe_range(const Quantizer& q)
{
    std::ostringstream s;
    s << "[" << q.min_value() << ", " << q.max_value() << "] mm";
    return s.str();
}

} // namespace

std::size_t TypeDescriptor::individual_width() const noexcept
{
    std::size_t w = 0;
    for (const auto& f : fields)
        w += f.width();
    return w;
}

const FieldSpec* TypeDescriptor::field(std::string_view n) const noexcept
{
    const int i = field_index(n);
    return i < 0 ? nullptr : &fields[static_cast<std::size_t>(i)];
}

int TypeDescriptor::field_index(std::string_view n) const noexcept
{
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i].name == n)
            return static_cast<int>(i);
    return -1;
}

const TypeDescriptor& descriptor(int id)
{
    if (id < 1 || id > type_count)
        throw DomainError("magistral.type", std::to_string(id) + " is not a magistral type 1..26");
    return registry()[static_cast<std::size_t>(id - 1)];
}

std::span<const TypeDescriptor> all_types()
{
    return registry();
}

bool hatch_eligible(int id)
{
    return descriptor(id).hatch_eligible;
}

// ─── Individual settings ────────────────────────────────────────────────────

double IndividualSettings::length(const TypeDescriptor& d, std::string_view name) const
{
    const int i = d.field_index(name);
    if (i < 0 || static_cast<std::size_t>(i) >= values.size())
        throw DomainError(std::string(name), "no such setting for type " + std::string(d.key));
    if (const auto* v = std::get_if<double>(&values[static_cast<std::size_t>(i)]))
        return *v;
    throw DomainError(std::string(name), "setting is not a length");
}

IndividualSettings default_individual(int id)
{
    const auto& d = descriptor(id);
    IndividualSettings s;
    for (const auto& f : d.fields)
    {
        switch (f.kind)
        {
            case FieldKind::Length:
            case FieldKind::Compression: s.values.emplace_back(f.default_value); break;
            case FieldKind::Font: s.values.emplace_back(FontSpec{3.5, 90}); break;
            case FieldKind::Text: s.values.emplace_back(std::string{}); break;
        }
    }
    return s;
}

GeneralSettings default_general(int id)
{
    const auto& d = descriptor(id);
    return GeneralSettings{d.uses_first_step ? 10.0 : 0.0, d.uses_step ? 20.0 : 0.0, d.uses_picture ? 5.0 : 0.0};
}

IndividualSettings decode_individual(int id, std::span<const std::uint8_t, MagistralElement::individual_bytes> bytes,
                                     std::size_t base_offset)
{
    const auto& d = descriptor(id);
    IndividualSettings s;
    std::size_t pos = 0;
    for (const auto& f : d.fields)
    {
        const std::size_t at = base_offset + pos;
        switch (f.kind)
        {
            case FieldKind::Length:
            {
                std::int32_t code = bytes[pos];
                if (f.q.width == 2)
                    code |= bytes[pos + 1] << 8;
                if (!f.q.contains(code))
                    throw DecodeError(at, std::string(f.name) + " code " + std::to_string(code) + " outside " +
                                              describe_range(f.q));
                s.values.emplace_back(dequantize(f.q, code));
                break;
            }
            case FieldKind::Font: s.values.emplace_back(decode_font(bytes[pos], at)); break;
            case FieldKind::Text:
            {
                std::string text;
                bool ended = false;
                for (std::size_t k = 0; k < 4; ++k)
                {
                    const auto b = bytes[pos + k];
                    if (b == 0)
                        ended = true;
                    else if (ended)
                        throw DecodeError(at + k, "nonzero byte after the end of the text");
                    else
                        text += static_cast<char>(b);
                }
                s.values.emplace_back(std::move(text));
                break;
            }
            case FieldKind::Compression:
            {
                const std::int32_t code = bytes[pos];
                if (!f.q.contains(code))
                    throw DecodeError(at, "compression code " + std::to_string(code) + " below 10 (0.10)");
                s.values.emplace_back(dequantize(f.q, code));
                break;
            }
        }
        pos += f.width();
    }
    for (; pos < bytes.size(); ++pos)
        if (bytes[pos] != 0)
            throw DecodeError(base_offset + pos, "nonzero padding in individual settings of type " +
                                                     std::to_string(id));
    return s;
}

Violations check_individual(int id, const IndividualSettings& s)
{
    Violations out;
    const TypeDescriptor* d = nullptr;
    try
    {
        d = &descriptor(id);
    }
    catch (const DomainError& e)
    {
        out.push_back({"type", e.what()});
        return out;
    }
    if (s.values.size() != d->fields.size())
    {
        out.push_back({"individual", "type " + std::string(d->key) + " expects " + std::to_string(d->fields.size()) +
                                         " settings, got " + std::to_string(s.values.size())});
        return out;
    }
    for (std::size_t i = 0; i < d->fields.size(); ++i)
    {
        const auto& f = d->fields[i];
        const auto& v = s.values[i];
        const std::string name(f.name);
        switch (f.kind)
        {
            case FieldKind::Length:
            case FieldKind::Compression:
            {
                const auto* x = std::get_if<double>(&v);
                if (!x)
                {
                    out.push_back({name, "expected a number"});
                    break;
                }
                try
                {
                    (void)quantize(f.q, *x, name);
                }
                catch (const DomainError&)
                {
                    std::ostringstream msg;
                    msg << *x << (f.kind == FieldKind::Length ? " mm" : "") << " outside [" << f.q.min_value() << ", "
                        << f.q.max_value() << "]";
                    out.push_back({name, msg.str()});
                }
                break;
            }
            case FieldKind::Font:
            {
                const auto* x = std::get_if<FontSpec>(&v);
                if (!x)
                    out.push_back({name, "expected a font"});
                else if (!is_legal_font(*x))
                {
                    std::ostringstream msg;
                    msg << "size " << x->size_mm << " mm, slant " << x->slant_deg
                        << " deg is not a standard font (sizes 2.5..40 mm, slant 90 or 75)";
                    out.push_back({name, msg.str()});
                }
                break;
            }
            case FieldKind::Text:
            {
                const auto* x = std::get_if<std::string>(&v);
                if (!x)
                    out.push_back({name, "expected text"});
                else if (x->size() > 4)
                    out.push_back({name, std::to_string(x->size()) + " characters; at most 4 allowed"});
                else if (x->find('\0') != std::string::npos)
                    out.push_back({name, "text may not contain NUL characters"});
                break;
            }
        }
    }
    return out;
}

std::array<std::uint8_t, MagistralElement::individual_bytes> encode_individual(int id, const IndividualSettings& s)
{
    if (auto v = check_individual(id, s); !v.empty())
        throw DomainError(v.front().field, v.front().message);
    const auto& d = descriptor(id);
    std::array<std::uint8_t, MagistralElement::individual_bytes> out{};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < d.fields.size(); ++i)
    {
        const auto& f = d.fields[i];
        switch (f.kind)
        {
            case FieldKind::Length:
            case FieldKind::Compression:
            {
                const auto code = quantize(f.q, std::get<double>(s.values[i]), f.name);
                out[pos] = static_cast<std::uint8_t>(code);
                if (f.q.width == 2)
                    out[pos + 1] = static_cast<std::uint8_t>(code >> 8);
                break;
            }
            case FieldKind::Font: out[pos] = encode_font(std::get<FontSpec>(s.values[i])); break;
            case FieldKind::Text:
            {
                const auto& text = std::get<std::string>(s.values[i]);
                std::memcpy(out.data() + pos, text.data(), text.size());
                break;
            }
        }
        pos += f.width();
    }
    return out;
}

} // namespace tcgx::magistral
