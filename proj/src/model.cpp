#include <tcgx/model.hpp>

#include <tcgx/magistral.hpp>

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

void check_header(const ElementHeader& h, Violations& out)
{
    if (static_cast<unsigned>(h.attr.line) >= line_type_count)
        out.push_back({"line_type", "code " + std::to_string(static_cast<unsigned>(h.attr.line)) + " is not a line type"});
    if (h.attr.color > 15)
        out.push_back({"color", "index " + std::to_string(h.attr.color) + " exceeds 15"});
}

bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

} // namespace

std::string_view element_tag_name(ElementTag t)
{
    switch (t)
    {
        case ElementTag::Segment: return "segment";
        case ElementTag::Arc: return "arc";
        case ElementTag::Polyline: return "polyline";
        case ElementTag::Text: return "text";
        case ElementTag::Magistral: return "magistral";
    }
    return "unknown";
}

ElementTag tag_of(const Element& e) noexcept
{
    static constexpr ElementTag tags[] = {ElementTag::Segment, ElementTag::Arc, ElementTag::Polyline,
                                          ElementTag::Text, ElementTag::Magistral};
    return tags[e.index()];
}

const ElementHeader& header_of(const Element& e) noexcept
{
    return std::visit([](const auto& el) -> const ElementHeader& { return el.header; }, e);
}

ElementHeader& header_of(Element& e) noexcept
{
    return std::visit([](auto& el) -> ElementHeader& { return el.header; }, e);
}

SheetSize sheet_size(const SheetFormat& f, const Standards& st)
{
    if (f.kind == SheetFormat::Kind::Custom)
        return {static_cast<double>(f.width_mm), static_cast<double>(f.height_mm)};
    const auto& nf = st.format(f.standard_id);
    return {static_cast<double>(nf.width_mm), static_cast<double>(nf.height_mm)};
}

Point to_paper_mm(const Scale& scale, CoordSpace space, Point p) noexcept
{
    if (space == CoordSpace::Bumaga)
        return p;
    return p * scale.factor();
}

Point to_paper_mm(const Drawing& d, const Element& e, Point p, const Standards& st)
{
    return to_paper_mm(st.scale(d.scale), header_of(e).attr.space, p);
}

std::size_t element_size(const Element& e) noexcept
{
    return std::visit(overloaded{
                          [](const SegmentElement&) { return record_size::segment; },
                          [](const ArcElement&) { return record_size::arc; },
                          [](const PolylineElement& p) { return record_size::polyline_base + 8 * p.vertices.size(); },
                          [](const TextElement& t) { return record_size::text_base + t.text.size(); },
                          [](const MagistralElement&) { return record_size::magistral; },
                      },
                      e);
}

Violations validate_element(const Element& e)
{
    Violations out;
    check_header(header_of(e), out);
    std::visit(overloaded{
                   [&](const SegmentElement& s) {
                       if (const char* d = carrier_defect(s.geom); *d)
                           out.push_back({"geometry", d});
                   },
                   [&](const ArcElement& a) {
                       if (const char* d = carrier_defect(a.geom); *d)
                           out.push_back({"geometry", d});
                   },
                   [&](const PolylineElement& p) {
                       const auto n = p.vertices.size();
                       if (n < PolylineElement::min_vertices || n > PolylineElement::max_vertices)
                           out.push_back({"vertices", std::to_string(n) + " vertices outside 2..65535"});
                       for (std::size_t i = 0; i < n; ++i)
                           if (!finite(p.vertices[i]))
                           {
                               out.push_back({"vertices", "vertex " + std::to_string(i) + " is not finite"});
                               break;
                           }
                   },
                   [&](const TextElement& t) {
                       if (!is_legal_font(t.font))
                       {
                           std::ostringstream msg;
                           msg << "size " << t.font.size_mm << " mm, slant " << t.font.slant_deg
                               << " deg is not a standard font (sizes 2.5..40 mm, slant 90 or 75)";
                           out.push_back({"font", msg.str()});
                       }
                       const double c = t.compression;
                       if (!(c >= quant::compression.min_value() - 0.005 && c < quant::compression.max_value() + 0.005))
                       {
                           std::ostringstream msg;
                           msg << c << " outside [0.1, 2.55]";
                           out.push_back({"compression", msg.str()});
                       }
                       if (!finite(t.anchor) || !std::isfinite(t.rotation))
                           out.push_back({"anchor", "position or rotation is not finite"});
                       if (t.text.size() > TextElement::max_bytes)
                           out.push_back({"text", std::to_string(t.text.size()) + " bytes exceeds 255"});
                   },
                   [&](const MagistralElement& m) {
                       for (auto& v : magistral::validate_magistral(m))
                           out.push_back(std::move(v));
                   },
               },
               e);
    return out;
}

Violations validate_drawing(const Drawing& d, const Standards& st)
{
    Violations out;
    if (!st.has_scale(d.scale))
        out.push_back({"scale", "id " + std::to_string(d.scale) + " is not in the configured scale table (" +
                                    std::to_string(st.scales().size()) + " entries)"});
    if (d.format.kind == SheetFormat::Kind::Standard)
    {
        if (d.format.standard_id >= st.formats().size())
            out.push_back({"format", "standard id " + std::to_string(d.format.standard_id) +
                                         " is not in the configured format table"});
    }
    else if (d.format.width_mm == 0 || d.format.height_mm == 0)
    {
        out.push_back({"format", "custom format dimensions must be at least 1 mm"});
    }
    for (std::size_t i = 0; i < d.elements.size(); ++i)
        for (auto& v : validate_element(d.elements[i]))
        {
            v.element = i;
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace tcgx
