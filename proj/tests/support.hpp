#pragma once
// Generators and fixtures shared by the unit tests, the acceptance suite and
// the golden-file regeneration tool.

#include <tcgx/codec.hpp>
#include <tcgx/magistral.hpp>

#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tcgx::testing {

using Rng = std::mt19937_64;

inline constexpr double pi = std::numbers::pi;

/// The double nearest to `v` that survives storage as a 32-bit float.
inline double f32(double v) { return static_cast<double>(static_cast<float>(v)); }

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Point random_point(Rng& rng, double extent = 1000.0)
{
    return {f32(uniform(rng, -extent, extent)), f32(uniform(rng, -extent, extent))};
}

inline ElementHeader random_header(Rng& rng)
{
    ElementHeader h;
    h.layer = static_cast<std::uint8_t>(uniform_int(rng, 0, 255));
    h.attr.line = static_cast<LineType>(uniform_int(rng, 0, line_type_count - 1));
    h.attr.color = static_cast<std::uint8_t>(uniform_int(rng, 0, 15));
    h.attr.space = uniform_int(rng, 0, 1) ? CoordSpace::Bumaga : CoordSpace::Natura;
    return h;
}

inline FontSpec random_font(Rng& rng)
{
    return FontSpec{font_sizes_mm[static_cast<std::size_t>(uniform_int(rng, 0, font_sizes_mm.size() - 1))],
                    uniform_int(rng, 0, 1) ? 90 : 75};
}

inline CarrierLine random_carrier(Rng& rng)
{
    if (uniform_int(rng, 0, 1))
    {
        Segment s{random_point(rng), random_point(rng)};
        while (s.p1 == s.p2)
            s.p2 = random_point(rng);
        return s;
    }
    const double sweep = uniform_int(rng, 0, 9) == 0 ? (uniform_int(rng, 0, 1) ? 2 * pi : -2 * pi)
                                                      : uniform(rng, -2 * pi, 2 * pi);
    return Arc{random_point(rng), f32(uniform(rng, 0.5, 500.0)), f32(uniform(rng, -pi, pi)),
               f32(sweep == 0 ? 1.0 : sweep)};
}

inline std::string random_bytes(Rng& rng, std::size_t n, int lo = 0)
{
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
        s.push_back(static_cast<char>(uniform_int(rng, lo, 255)));
    return s;
}

inline magistral::IndividualSettings random_individual(Rng& rng, int type)
{
    const auto& d = magistral::descriptor(type);
    magistral::IndividualSettings s;
    for (const auto& f : d.fields)
    {
        switch (f.kind)
        {
            case magistral::FieldKind::Length:
            case magistral::FieldKind::Compression:
                s.values.emplace_back(dequantize(f.q, uniform_int(rng, f.q.min_code, f.q.max_code)));
                break;
            case magistral::FieldKind::Font: s.values.emplace_back(random_font(rng)); break;
            case magistral::FieldKind::Text:
                s.values.emplace_back(random_bytes(rng, static_cast<std::size_t>(uniform_int(rng, 0, 4)), 1));
                break;
        }
    }
    return s;
}

/// A stored magistral whose general codes respect applicability. Its
/// geometry is not guaranteed to pass validate_magistral.
inline MagistralElement random_magistral_raw(Rng& rng)
{
    MagistralElement m;
    m.header = random_header(rng);
    m.carrier = random_carrier(rng);
    m.type = static_cast<std::uint8_t>(uniform_int(rng, 1, magistral::type_count));
    const auto& d = magistral::descriptor(m.type);
    const auto code = [&](bool used) { return used ? static_cast<std::uint16_t>(uniform_int(rng, 1, 60000)) : 0; };
    m.first_step = code(d.uses_first_step);
    m.step = code(d.uses_step);
    m.picture = code(d.uses_picture);
    m.individual = magistral::encode_individual(m.type, random_individual(rng, m.type));
    return m;
}

inline MagistralElement random_magistral(Rng& rng)
{
    for (;;)
    {
        auto m = random_magistral_raw(rng);
        if (magistral::validate_magistral(m).empty())
            return m;
    }
}

inline Element random_element(Rng& rng)
{
    switch (uniform_int(rng, 0, 4))
    {
        case 0:
        {
            Segment s{random_point(rng), random_point(rng)};
            while (s.p1 == s.p2)
                s.p2 = random_point(rng);
            return SegmentElement{random_header(rng), s};
        }
        case 1:
        {
            auto c = random_carrier(rng);
            while (!std::holds_alternative<Arc>(c))
                c = random_carrier(rng);
            return ArcElement{random_header(rng), std::get<Arc>(c)};
        }
        case 2:
        {
            PolylineElement p{random_header(rng), {}};
            const int n = uniform_int(rng, 2, 12);
            for (int i = 0; i < n; ++i)
                p.vertices.push_back(random_point(rng));
            return p;
        }
        case 3:
        {
            TextElement t;
            t.header = random_header(rng);
            t.font = random_font(rng);
            t.compression = dequantize(quant::compression, uniform_int(rng, 10, 255));
            t.anchor = random_point(rng);
            t.rotation = f32(uniform(rng, -pi, pi));
            t.text = random_bytes(rng, static_cast<std::size_t>(uniform_int(rng, 0, 40)));
            return t;
        }
        default: return random_magistral(rng);
    }
}

/// A drawing that encodes and passes validate_drawing against the bundled tables.
inline Drawing random_drawing(Rng& rng, int max_elements = 8)
{
    Drawing d;
    d.scale = static_cast<ScaleId>(uniform_int(rng, 0, static_cast<int>(Standards::bundled().scales().size()) - 1));
    if (uniform_int(rng, 0, 3) == 0)
        d.format = SheetFormat::custom(static_cast<std::uint16_t>(uniform_int(rng, 1, 65535)),
                                       static_cast<std::uint16_t>(uniform_int(rng, 1, 65535)));
    else
        d.format = SheetFormat::standard(
            static_cast<std::uint16_t>(uniform_int(rng, 0, static_cast<int>(Standards::bundled().formats().size()) - 1)));
    const int n = uniform_int(rng, 0, max_elements);
    for (int i = 0; i < n; ++i)
        d.elements.push_back(random_element(rng));
    return d;
}

// ─── Fixtures ───────────────────────────────────────────────────────────────

/// The reference magistral of each type used by the golden SVGs: defaults on
/// a slanted 120 mm segment (types 1..13) or a quarter arc (types 14..26).
inline MagistralElement golden_magistral(int type)
{
    magistral::MagistralSpec spec;
    spec.type = type;
    const auto& d = magistral::descriptor(type);
    spec.header.attr.line = d.carrier_line;
    spec.header.attr.space = CoordSpace::Bumaga;
    if (type <= 13)
        spec.carrier = Segment{{30, 100}, {126, 172}};
    else
        spec.carrier = Arc{{100, 100}, 80, 0.25 * pi, 0.5 * pi};
    spec.general = magistral::default_general(type);
    spec.individual = magistral::default_individual(type);
    if (const int t = d.field_index("text"); t >= 0)
        spec.individual.values[static_cast<std::size_t>(t)] = std::string("\xC3\xC0\xC7"); // cp1251 for a gas main
    return magistral::build(spec);
}

inline Drawing golden_drawing(int type)
{
    Drawing d;
    d.scale = 0;
    d.format = SheetFormat::standard(4);
    d.elements.push_back(golden_magistral(type));
    return d;
}

/// One element per record tag with hand-picked, float-exact values.
inline std::vector<std::pair<std::string, Element>> golden_elements()
{
    ElementHeader h{3, Attributes{LineType::DashDotThin, 9, CoordSpace::Bumaga}};
    std::vector<std::pair<std::string, Element>> out;
    out.emplace_back("segment", SegmentElement{h, Segment{{0, 0}, {1, 1}}});
    out.emplace_back("arc", ArcElement{h, Arc{{10, -2.5}, 7.25, f32(0.5), f32(-pi / 2)}});
    out.emplace_back("polyline", PolylineElement{h, {{0, 0}, {10, 0}, {10, 5.5}}});
    TextElement t;
    t.header = h;
    t.font = FontSpec{5, 75};
    t.compression = dequantize(quant::compression, 80);
    t.anchor = {42.5, 17};
    t.rotation = f32(pi / 6);
    t.text = "\xC2\x31"; // cp1251 for "В1"
    out.emplace_back("text", t);
    magistral::MagistralSpec spec;
    spec.type = 9;
    spec.header = ElementHeader{1, Attributes{LineType::SolidMain, 2, CoordSpace::Natura}};
    spec.carrier = Segment{{0, 0}, {250, 0}};
    spec.general = {10, 40, 10};
    spec.individual = magistral::default_individual(9);
    spec.individual.values[0] = FontSpec{2.5, 90};
    spec.individual.values[1] = std::string("\xC2\x31");
    out.emplace_back("magistral", magistral::build(spec));
    return out;
}

// ─── Hex fixtures ───────────────────────────────────────────────────────────

/// 16 bytes per line, lowercase, with a leading comment.
inline std::string to_hex(const Bytes& b, const std::string& comment)
{
    static const char* digits = "0123456789abcdef";
    std::string s = "# " + comment + "\n";
    for (std::size_t i = 0; i < b.size(); ++i)
    {
        s += digits[b[i] >> 4];
        s += digits[b[i] & 15];
        s += (i % 16 == 15 || i + 1 == b.size()) ? '\n' : ' ';
    }
    return s;
}

/// Ignores '#' comment lines and whitespace.
inline Bytes from_hex(const std::string& text)
{
    Bytes out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string byte;
        while (ls >> byte)
            out.push_back(static_cast<std::uint8_t>(std::stoul(byte, nullptr, 16)));
    }
    return out;
}

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string svg_golden_name(int type)
{
    return std::string("type_") + (type < 10 ? "0" : "") + std::to_string(type) + ".svg";
}

} // namespace tcgx::testing
