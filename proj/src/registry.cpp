#include <tcgx/registry.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace tcgx {

namespace detail {
extern const char* const bundled_standards_json;
}

namespace {

using nlohmann::json;

Scale parse_scale(const std::string& label)
{
    const auto colon = label.find(':');
    if (colon == std::string::npos)
        throw ConfigError("scale '" + label + "' is not of the form a:b");
    Scale s;
    s.label = label;
    try
    {
        s.numerator = std::stod(label.substr(0, colon));
        s.denominator = std::stod(label.substr(colon + 1));
    }
    catch (const std::exception&)
    {
        throw ConfigError("scale '" + label + "' has a non-numeric side");
    }
    if (!(s.numerator > 0) || !(s.denominator > 0))
        throw ConfigError("scale '" + label + "' must have positive sides");
    return s;
}

Range parse_range(const json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string(what) + ": expected [min, max]");
    Range r{j[0].get<double>(), j[1].get<double>()};
    if (!(r.min <= r.max))
        throw ConfigError(std::string(what) + ": min exceeds max");
    return r;
}

ProjectionCategory parse_category(const std::string& s)
{
    if (s == "axonometric")
        return ProjectionCategory::Axonometric;
    if (s == "view")
        return ProjectionCategory::View;
    if (s == "extra_oblique")
        return ProjectionCategory::ExtraOblique;
    throw ConfigError("unknown projection category '" + s + "'");
}

Vec2 direction(double deg)
{
    const double rad = deg * std::numbers::pi / 180.0;
    // Snap exact quadrant angles so that axis vectors like (1, 0) come out exact.
    const auto snap = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
    return Vec2{snap(std::cos(rad)), snap(std::sin(rad))};
}

} // namespace

Standards Standards::parse(std::string_view text)
{
    json root;
    try
    {
        root = json::parse(text);
    }
    catch (const json::exception& e)
    {
        throw ConfigError(std::string("standards config is not valid JSON: ") + e.what());
    }

    Standards st;
    try
    {
        if (root.at("format_version").get<int>() != format_version)
            throw ConfigError("unsupported standards config version " + root.at("format_version").dump());

        for (const auto& s : root.at("scales"))
            st.scales_.push_back(parse_scale(s.get<std::string>()));
        if (st.scales_.empty() || st.scales_.size() > 256)
            throw ConfigError("scale table must have 1..256 entries");

        const auto& bounds = root.at("profile_scale_bounds");
        st.profile_horizontal_ = parse_range(bounds.at("horizontal"), "profile_scale_bounds.horizontal");
        st.profile_vertical_ = parse_range(bounds.at("vertical"), "profile_scale_bounds.vertical");

        for (const auto& f : root.at("sheet_formats"))
        {
            NamedFormat nf{f.at(0).get<std::string>(), f.at(1).get<int>(), f.at(2).get<int>()};
            if (nf.width_mm < 1 || nf.width_mm > 65535 || nf.height_mm < 1 || nf.height_mm > 65535)
                throw ConfigError("sheet format " + nf.name + " has dimensions outside 1..65535 mm");
            st.formats_.push_back(std::move(nf));
        }
        if (st.formats_.empty() || st.formats_.size() > 65535)
            throw ConfigError("format table must have 1..65535 entries");

        std::set<int> ids;
        for (const auto& p : root.at("projections"))
        {
            Projection pr;
            pr.id = p.at("id").get<int>();
            pr.name = p.at("name").get<std::string>();
            pr.category = parse_category(p.at("category").get<std::string>());
            const auto& deg = p.at("axes_deg");
            const auto& dist = p.at("distortion");
            if (deg.size() != 3 || dist.size() != 3)
                throw ConfigError("projection " + pr.name + " needs three axes");
            for (std::size_t k = 0; k < 3; ++k)
            {
                pr.axes[k] = direction(deg[k].get<double>());
                pr.distortion[k] = dist[k].get<double>();
            }
            if (!ids.insert(pr.id).second)
                throw ConfigError("duplicate projection id " + std::to_string(pr.id));
            st.projections_.push_back(std::move(pr));
        }
        if (st.projections_.size() != projection_count || *ids.begin() != 0 || *ids.rbegin() != projection_count - 1)
            throw ConfigError("projection registry must hold ids 0..24");
        std::sort(st.projections_.begin(), st.projections_.end(),
                  [](const Projection& a, const Projection& b) { return a.id < b.id; });
        for (const auto& pr : st.projections_)
        {
            if (pr.category != ProjectionCategory::ExtraOblique)
                continue;
            if (pr.axes[0].x != 1.0 || pr.axes[0].y != 0.0)
                throw ConfigError("oblique projection " + pr.name + ": X axis must point right");
            if (!(pr.axes[1].x > 0 && pr.axes[1].y > 0))
                throw ConfigError("oblique projection " + pr.name + ": Y axis must lie in the first quadrant");
        }

        const auto& dims = root.at("dimension_ranges");
        st.dimension_ranges_.arrow_len = parse_range(dims.at("arrow_len"), "arrow_len");
        st.dimension_ranges_.tick_len = parse_range(dims.at("tick_len"), "tick_len");
        st.dimension_ranges_.extension_overshoot = parse_range(dims.at("extension_overshoot"), "extension_overshoot");

        st.line_kinds_.resize(line_type_count);
        std::set<int> codes;
        for (const auto& lk : root.at("line_kinds"))
        {
            const int code = lk.at("code").get<int>();
            if (code < 0 || code >= line_type_count || !codes.insert(code).second)
                throw ConfigError("line_kinds: bad or duplicate code " + std::to_string(code));
            auto& k = st.line_kinds_[static_cast<std::size_t>(code)];
            k.name = lk.at("name").get<std::string>();
            k.stroke_width_mm = lk.at("width").get<double>();
            k.dash_mm = lk.at("dash").get<std::vector<double>>();
        }
        if (codes.size() != line_type_count)
            throw ConfigError("line_kinds must describe all 7 line types");

        const auto& pal = root.at("palette");
        if (pal.size() != 16)
            throw ConfigError("palette must have 16 entries");
        for (std::size_t i = 0; i < 16; ++i)
            st.palette_[i] = pal[i].get<std::string>();
    }
    catch (const json::exception& e)
    {
        throw ConfigError(std::string("standards config: ") + e.what());
    }
    return st;
}

const Standards& Standards::bundled()
{
    static const Standards instance = parse(detail::bundled_standards_json);
    return instance;
}

Standards Standards::load_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read standards config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Standards Standards::from_environment()
{
    if (const char* dir = std::getenv("TCGX_CONFIG_DIR"); dir && *dir)
        return load_file(std::filesystem::path(dir) / "standards.json");
    return bundled();
}

const Scale& Standards::scale(ScaleId id) const
{
    if (id >= scales_.size())
        throw DomainError("scale", "id " + std::to_string(id) + " is not in the scale table");
    return scales_[id];
}

std::vector<ScaleId> Standards::allowed_scales(ScaleContext ctx) const
{
    std::vector<ScaleId> out;
    for (std::size_t i = 0; i < scales_.size(); ++i)
    {
        const double r = scales_[i].reduction();
        const bool ok = ctx == ScaleContext::General ||
                        (ctx == ScaleContext::ProfileHorizontal && profile_horizontal_.contains(r)) ||
                        (ctx == ScaleContext::ProfileVertical && profile_vertical_.contains(r));
        if (ok)
            out.push_back(static_cast<ScaleId>(i));
    }
    return out;
}

const NamedFormat& Standards::format(std::size_t id) const
{
    if (id >= formats_.size())
        throw DomainError("format", "id " + std::to_string(id) + " is not in the format table");
    return formats_[id];
}

const Projection& Standards::projection(int id) const
{
    if (id < 0 || id >= projection_count)
        throw DomainError("projection", "id " + std::to_string(id) + " outside 0..24");
    return projections_[static_cast<std::size_t>(id)];
}

Violations validate_dimension_style(const DimensionStyle& d, const Standards& st)
{
    Violations out;
    const auto check = [&out](const char* field, const Quantizer& q, std::uint8_t code, const Range& r) {
        if (!q.contains(code))
        {
            out.push_back({field, "stored code " + std::to_string(code) + " outside storage range"});
            return;
        }
        const double v = dequantize(q, code);
        if (!r.contains(v))
        {
            std::ostringstream msg;
            msg << v << " mm outside the standard range [" << r.min << ", " << r.max << "] mm";
            out.push_back({field, msg.str()});
        }
    };
    const auto& r = st.dimension_ranges();
    check("arrow_len", quant::arrow_len, d.arrow_len, r.arrow_len);
    check("tick_len", quant::tick_len, d.tick_len, r.tick_len);
    check("extension_overshoot", quant::extension_overshoot, d.extension_overshoot, r.extension_overshoot);
    return out;
}

} // namespace tcgx
