#include <tcgx/svg.hpp>

#include <tcgx/magistral.hpp>
#include <tcgx/text_encoding.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace tcgx {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double pi = std::numbers::pi;

// Fixed four decimals, trailing zeros dropped, never "-0".
std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s = buf;
    while (!s.empty() && s.back() == '0')
        s.pop_back();
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    if (s == "-0")
        s = "0";
    return s;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s)
    {
        switch (c)
        {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default:
                // Control characters are not allowed in XML 1.0 text.
                if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r')
                    out += "\xEF\xBF\xBD";
                else
                    out += c;
                break;
        }
    }
    return out;
}

class SvgWriter
{
public:
    SvgWriter(std::ostringstream& os, const Standards& st) : os_(os), st_(st) {}

    void element(const Element& e, const std::string& indent)
    {
        std::visit(overloaded{
                       [&](const SegmentElement& s) {
                           os_ << indent << "<line x1=\"" << num(s.geom.p1.x) << "\" y1=\"" << num(s.geom.p1.y)
                               << "\" x2=\"" << num(s.geom.p2.x) << "\" y2=\"" << num(s.geom.p2.y) << "\""
                               << stroke(s.header) << "/>\n";
                       },
                       [&](const ArcElement& a) { arc(a, indent); },
                       [&](const PolylineElement& p) {
                           os_ << indent << "<polyline points=\"";
                           for (std::size_t i = 0; i < p.vertices.size(); ++i)
                               os_ << (i ? " " : "") << num(p.vertices[i].x) << "," << num(p.vertices[i].y);
                           os_ << "\"" << stroke(p.header) << "/>\n";
                       },
                       [&](const TextElement& t) { text(t, indent); },
                       [&](const MagistralElement& m) {
                           os_ << indent << "<g class=\"magistral\" data-type=\"" << int(m.type) << "\">\n";
                           for (const auto& piece : magistral::tessellate(m))
                               element(piece, indent + "  ");
                           os_ << indent << "</g>\n";
                       },
                   },
                   e);
    }

private:
    std::string stroke(const ElementHeader& h) const
    {
        const auto& kind = st_.line_kind(h.attr.line);
        std::string s = " stroke=\"" + st_.palette()[h.attr.color] + "\" stroke-width=\"" + num(kind.stroke_width_mm) + "\"";
        if (!kind.dash_mm.empty())
        {
            s += " stroke-dasharray=\"";
            for (std::size_t i = 0; i < kind.dash_mm.size(); ++i)
                s += (i ? "," : "") + num(kind.dash_mm[i]);
            s += "\"";
        }
        return s;
    }

    void arc(const ArcElement& a, const std::string& indent)
    {
        const Arc& g = a.geom;
        if (std::abs(g.sweep) >= 2 * pi - 1e-9)
        {
            os_ << indent << "<circle cx=\"" << num(g.center.x) << "\" cy=\"" << num(g.center.y) << "\" r=\""
                << num(g.radius) << "\"" << stroke(a.header) << "/>\n";
            return;
        }
        const double a0 = g.start_angle;
        const double a1 = g.start_angle + g.sweep;
        os_ << indent << "<path d=\"M " << num(g.center.x + g.radius * std::cos(a0)) << " "
            << num(g.center.y + g.radius * std::sin(a0)) << " A " << num(g.radius) << " " << num(g.radius) << " 0 "
            << (std::abs(g.sweep) > pi ? 1 : 0) << " " << (g.sweep > 0 ? 1 : 0) << " "
            << num(g.center.x + g.radius * std::cos(a1)) << " " << num(g.center.y + g.radius * std::sin(a1)) << "\""
            << stroke(a.header) << "/>\n";
    }

    void text(const TextElement& t, const std::string& indent)
    {
        // The drawing group has y up; scale(c -1) turns glyphs upright again.
        os_ << indent << "<text transform=\"translate(" << num(t.anchor.x) << " " << num(t.anchor.y) << ") rotate("
            << num(t.rotation * 180.0 / pi) << ") scale(" << num(t.compression) << " -1)";
        if (t.font.slant_deg == 75)
            os_ << " skewX(-15)";
        os_ << "\" font-family=\"GOST type A, sans-serif\" font-size=\"" << num(t.font.size_mm)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"" << st_.palette()[t.header.attr.color]
            << "\" stroke=\"none\">" << xml_escape(cp1251_to_utf8(t.text)) << "</text>\n";
    }

    std::ostringstream& os_;
    const Standards& st_;
};

} // namespace

Element to_paper(const Element& e, const Scale& scale)
{
    if (header_of(e).attr.space == CoordSpace::Bumaga)
        return e;
    const double k = scale.factor();
    const auto p = [&](const Point& q) { return q * k; };
    return std::visit(overloaded{
                          [&](const SegmentElement& s) -> Element {
                              return SegmentElement{s.header, Segment{p(s.geom.p1), p(s.geom.p2)}};
                          },
                          [&](const ArcElement& a) -> Element {
                              return ArcElement{a.header, Arc{p(a.geom.center), a.geom.radius * k, a.geom.start_angle,
                                                              a.geom.sweep}};
                          },
                          [&](const PolylineElement& pl) -> Element {
                              PolylineElement out{pl.header, {}};
                              out.vertices.reserve(pl.vertices.size());
                              for (const auto& v : pl.vertices)
                                  out.vertices.push_back(p(v));
                              return out;
                          },
                          [&](const TextElement& t) -> Element {
                              TextElement out = t;
                              out.anchor = p(t.anchor);
                              return out;
                          },
                          [&](const MagistralElement& m) -> Element { return m; },
                      },
                      e);
}

std::string render_svg(const Drawing& d, const Standards& st)
{
    const SheetSize sheet = sheet_size(d.format, st);
    const Scale& scale = st.scale(d.scale);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(sheet.width_mm) << "mm\" height=\""
       << num(sheet.height_mm) << "mm\" viewBox=\"0 0 " << num(sheet.width_mm) << " " << num(sheet.height_mm)
       << "\">\n";
    os << "  <rect class=\"sheet\" x=\"0\" y=\"0\" width=\"" << num(sheet.width_mm) << "\" height=\""
       << num(sheet.height_mm) << "\" fill=\"none\" stroke=\"" << st.palette()[0] << "\" stroke-width=\""
       << num(st.line_kind(LineType::SolidThin).stroke_width_mm) << "\"/>\n";
    os << "  <g class=\"drawing\" transform=\"matrix(1 0 0 -1 0 " << num(sheet.height_mm)
       << ")\" fill=\"none\" stroke-linejoin=\"round\">\n";

    SvgWriter w(os, st);
    for (const auto& e : d.elements)
    {
        if (const auto* m = std::get_if<MagistralElement>(&e))
        {
            // Expand in the element's own space, then bring each piece to paper.
            os << "    <g class=\"magistral\" data-type=\"" << int(m->type) << "\">\n";
            for (const auto& piece : magistral::tessellate(*m))
                w.element(to_paper(piece, scale), "      ");
            os << "    </g>\n";
        }
        else
        {
            w.element(to_paper(e, scale), "    ");
        }
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

} // namespace tcgx
