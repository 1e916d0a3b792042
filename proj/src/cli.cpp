#include <tcgx/cli.hpp>

#include <tcgx/codec.hpp>
#include <tcgx/magistral.hpp>
#include <tcgx/svg.hpp>
#include <tcgx/text_encoding.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

namespace tcgx::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double deg_per_rad = 180.0 / std::numbers::pi;

/// Raised by subcommands to leave with a specific exit code and message.
struct Failure
{
    int code;
    std::string message;
};

Bytes read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{decode_failure, path + ": cannot open file"};
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Write through a temporary so a failed run never leaves a partial file.
void write_file(const std::string& path, std::string_view data)
{
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Failure{decode_failure, path + ": cannot write file"};
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out)
            throw Failure{decode_failure, path + ": write failed"};
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec)
    {
        fs::remove(tmp, ec);
        throw Failure{decode_failure, path + ": cannot replace file"};
    }
}

void write_file(const std::string& path, const Bytes& data)
{
    write_file(path, std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

Drawing load(const std::string& path, const Bytes& bytes)
{
    try
    {
        return decode_drawing(bytes);
    }
    catch (const DecodeError& e)
    {
        throw Failure{decode_failure, path + ": " + e.what()};
    }
}

std::vector<std::size_t> element_offsets(const Drawing& d)
{
    std::vector<std::size_t> out;
    std::size_t pos = file_header_size;
    for (const auto& e : d.elements)
    {
        out.push_back(pos);
        pos += element_size(e);
    }
    return out;
}

std::string fmt_num(double v)
{
    std::ostringstream s;
    s << std::setprecision(7) << v;
    return s.str();
}

std::string format_label(const SheetFormat& f, const Standards& st)
{
    if (f.kind == SheetFormat::Kind::Custom)
        return "custom " + std::to_string(f.width_mm) + "x" + std::to_string(f.height_mm) + " mm";
    if (f.standard_id < st.formats().size())
    {
        const auto& nf = st.format(f.standard_id);
        return nf.name + " " + std::to_string(nf.width_mm) + "x" + std::to_string(nf.height_mm) + " mm";
    }
    return "standard #" + std::to_string(f.standard_id) + " (unknown)";
}

std::string scale_label(ScaleId id, const Standards& st)
{
    return st.has_scale(id) ? st.scale(id).label : "#" + std::to_string(id) + " (unknown)";
}

// ─── Element description ────────────────────────────────────────────────────

Json point_json(const Point& p) { return Json::array({p.x, p.y}); }

Json carrier_json(const CarrierLine& c)
{
    return std::visit(overloaded{
                          [](const Segment& s) {
                              return Json{{"kind", "segment"}, {"p1", point_json(s.p1)}, {"p2", point_json(s.p2)}};
                          },
                          [](const Arc& a) {
                              return Json{{"kind", "arc"},
                                          {"center", point_json(a.center)},
                                          {"radius_mm", a.radius},
                                          {"start_deg", a.start_angle * deg_per_rad},
                                          {"sweep_deg", a.sweep * deg_per_rad}};
                          },
                      },
                      c);
}

Json individual_json(const MagistralElement& m)
{
    const auto& d = magistral::descriptor(m.type);
    const auto s = magistral::decode_individual(m.type, m.individual);
    Json out = Json::object();
    for (std::size_t i = 0; i < d.fields.size(); ++i)
    {
        const auto& f = d.fields[i];
        const std::string key = std::string(f.name) + (f.kind == magistral::FieldKind::Length ? "_mm" : "");
        std::visit(overloaded{
                       [&](double v) { out[key] = v; },
                       [&](const FontSpec& fs) { out[key] = Json{{"size_mm", fs.size_mm}, {"slant_deg", fs.slant_deg}}; },
                       [&](const std::string& t) { out[key] = cp1251_to_utf8(t); },
                   },
                   s.values[i]);
    }
    return out;
}

Json element_json(const Element& e, std::size_t index, std::size_t offset)
{
    const auto& h = header_of(e);
    Json j;
    j["index"] = index;
    j["offset"] = offset;
    j["tag"] = std::string(element_tag_name(tag_of(e)));
    j["size"] = element_size(e);
    j["layer"] = h.layer;
    j["line_type"] = std::string(line_type_name(h.attr.line));
    j["color"] = h.attr.color;
    j["space"] = std::string(coord_space_name(h.attr.space));
    std::visit(overloaded{
                   [&](const SegmentElement& s) {
                       j["p1"] = point_json(s.geom.p1);
                       j["p2"] = point_json(s.geom.p2);
                   },
                   [&](const ArcElement& a) {
                       j["center"] = point_json(a.geom.center);
                       j["radius_mm"] = a.geom.radius;
                       j["start_deg"] = a.geom.start_angle * deg_per_rad;
                       j["sweep_deg"] = a.geom.sweep * deg_per_rad;
                   },
                   [&](const PolylineElement& p) {
                       Json v = Json::array();
                       for (const auto& q : p.vertices)
                           v.push_back(point_json(q));
                       j["vertices"] = v;
                   },
                   [&](const TextElement& t) {
                       j["font"] = Json{{"size_mm", t.font.size_mm}, {"slant_deg", t.font.slant_deg}};
                       j["compression"] = t.compression;
                       j["anchor"] = point_json(t.anchor);
                       j["rotation_deg"] = t.rotation * deg_per_rad;
                       j["text"] = cp1251_to_utf8(t.text);
                   },
                   [&](const MagistralElement& m) {
                       const auto& d = magistral::descriptor(m.type);
                       j["magistral_type"] = m.type;
                       j["magistral_key"] = std::string(d.key);
                       j["magistral_name"] = std::string(d.name);
                       j["carrier"] = carrier_json(m.carrier);
                       const auto general = [](std::uint16_t code) -> Json {
                           return code == 0 ? Json(nullptr) : Json(code * 0.01);
                       };
                       j["step_mm"] = general(m.step);
                       j["picture_mm"] = general(m.picture);
                       j["first_step_mm"] = general(m.first_step);
                       j["individual"] = individual_json(m);
                   },
               },
               e);
    return j;
}

std::string json_scalar(const Json& v)
{
    if (v.is_number_float())
        return fmt_num(v.get<double>());
    if (v.is_string())
        return "\"" + v.get<std::string>() + "\"";
    if (v.is_array() && v.size() == 2 && v[0].is_number())
        return "(" + fmt_num(v[0].get<double>()) + ", " + fmt_num(v[1].get<double>()) + ")";
    return v.dump();
}

void print_record_text(std::ostream& out, const Json& j)
{
    out << "#" << j["index"].get<std::size_t>() << " @" << j["offset"].get<std::size_t>() << " "
        << j["tag"].get<std::string>() << " (" << j["size"].get<std::size_t>() << " bytes)"
        << " layer=" << j["layer"].get<int>() << " line=" << j["line_type"].get<std::string>()
        << " color=" << j["color"].get<int>() << " space=" << j["space"].get<std::string>() << "\n";
    static const std::set<std::string> header_keys{"index", "offset", "tag", "size", "layer", "line_type", "color",
                                                   "space"};
    for (const auto& [key, value] : j.items())
    {
        if (header_keys.count(key))
            continue;
        if (value.is_object())
        {
            out << "    " << key << ":";
            for (const auto& [k2, v2] : value.items())
                out << " " << k2 << "=" << json_scalar(v2);
            out << "\n";
        }
        else if (key == "vertices")
        {
            out << "    vertices: " << value.size() << " points";
            for (const auto& v : value)
                out << " " << json_scalar(v);
            out << "\n";
        }
        else
        {
            out << "    " << key << ": " << (value.is_null() ? "unused" : json_scalar(value)) << "\n";
        }
    }
}

// ─── Subcommands ────────────────────────────────────────────────────────────

int cmd_validate(const std::string& path, bool json, const Standards& st, std::ostream& out)
{
    const Bytes bytes = read_file(path);
    const Drawing d = load(path, bytes);
    const auto offsets = element_offsets(d);
    const Violations v = validate_drawing(d, st);
    if (json)
    {
        Json j;
        j["file"] = path;
        j["elements"] = d.elements.size();
        Json list = Json::array();
        for (const auto& x : v)
        {
            Json item;
            if (x.element != Violation::no_element)
            {
                item["element"] = x.element;
                item["offset"] = offsets[x.element];
            }
            else
            {
                item["element"] = nullptr;
                item["offset"] = nullptr;
            }
            item["field"] = x.field;
            item["message"] = x.message;
            list.push_back(item);
        }
        j["violations"] = list;
        out << j.dump(2) << "\n";
    }
    else
    {
        for (const auto& x : v)
        {
            if (x.element != Violation::no_element)
                out << "element " << x.element << " (offset " << offsets[x.element] << "): ";
            else
                out << "drawing: ";
            out << x.field << ": " << x.message << "\n";
        }
        out << path << ": " << d.elements.size() << " elements, " << v.size()
            << (v.size() == 1 ? " violation" : " violations") << "\n";
    }
    return v.empty() ? ok : validation_failure;
}

int cmd_inspect(const std::string& path, bool json, const Standards& st, std::ostream& out)
{
    const Bytes bytes = read_file(path);
    const Drawing d = load(path, bytes);
    const auto offsets = element_offsets(d);

    Json records = Json::array();
    for (std::size_t i = 0; i < d.elements.size(); ++i)
        records.push_back(element_json(d.elements[i], i, offsets[i]));

    if (json)
    {
        Json j;
        j["version"] = file_version;
        j["file_size"] = bytes.size();
        j["scale"] = Json{{"id", d.scale}, {"label", scale_label(d.scale, st)}};
        j["format"] = format_label(d.format, st);
        j["element_count"] = d.elements.size();
        j["elements"] = records;
        out << j.dump(2) << "\n";
        return ok;
    }
    out << "drawing: version " << file_version << ", " << bytes.size() << " bytes, scale "
        << scale_label(d.scale, st) << ", format " << format_label(d.format, st) << ", " << d.elements.size()
        << " elements\n";
    for (const auto& r : records)
        print_record_text(out, r);
    return ok;
}

int cmd_stats(const std::string& path, bool json, std::ostream& out)
{
    const Bytes bytes = read_file(path);
    const Drawing d = load(path, bytes);

    struct Row
    {
        std::string tag;
        std::size_t size;
        std::size_t expanded;
    };
    std::vector<Row> rows;
    std::size_t total = 0, compact = 0, expanded = 0, magistrals = 0;
    for (const auto& e : d.elements)
    {
        Row r{std::string(element_tag_name(tag_of(e))), element_size(e), 0};
        if (const auto* m = std::get_if<MagistralElement>(&e))
        {
            try
            {
                r.expanded = magistral::expanded_size(*m);
            }
            catch (const DomainError& ex)
            {
                throw Failure{validation_failure, path + ": element " + std::to_string(rows.size()) + ": " + ex.what()};
            }
            compact += r.size;
            expanded += r.expanded;
            ++magistrals;
        }
        total += r.size;
        rows.push_back(std::move(r));
    }

    if (json)
    {
        Json j;
        Json list = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            Json row{{"index", i}, {"tag", rows[i].tag}, {"size", rows[i].size}};
            if (rows[i].tag == "magistral")
            {
                row["compact"] = rows[i].size;
                row["expanded"] = rows[i].expanded;
                row["ratio"] = static_cast<double>(rows[i].expanded) / static_cast<double>(rows[i].size);
            }
            list.push_back(row);
        }
        j["rows"] = list;
        j["totals"] = Json{{"elements", rows.size()},
                           {"bytes", total},
                           {"file_size", bytes.size()},
                           {"magistrals", magistrals},
                           {"magistral_compact", compact},
                           {"magistral_expanded", expanded}};
        out << j.dump(2) << "\n";
        return ok;
    }

    out << std::right << std::setw(6) << "#" << "  " << std::left << std::setw(10) << "tag" << std::right
        << std::setw(8) << "bytes" << std::setw(10) << "expanded" << std::setw(8) << "ratio" << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        out << std::right << std::setw(6) << i << "  " << std::left << std::setw(10) << rows[i].tag << std::right
            << std::setw(8) << rows[i].size;
        if (rows[i].tag == "magistral")
            out << std::setw(10) << rows[i].expanded << std::setw(8) << std::fixed << std::setprecision(2)
                << static_cast<double>(rows[i].expanded) / static_cast<double>(rows[i].size)
                << std::defaultfloat;
        out << "\n";
    }
    out << "total: " << rows.size() << " elements, " << total << " bytes of records (" << bytes.size()
        << " bytes in file)\n";
    if (magistrals)
        out << "magistrals: " << magistrals << ", compact " << compact << " bytes, expanded " << expanded
            << " bytes\n";
    return ok;
}

int cmd_expand(const std::string& in, const std::string& out_path, const Standards& st, std::ostream& out)
{
    const Drawing d = load(in, read_file(in));
    if (auto v = validate_drawing(d, st); !v.empty())
    {
        std::string msg = in + ": " + std::to_string(v.size()) + " violations; not expanding";
        for (const auto& x : v)
            msg += "\n  " + x.to_string();
        throw Failure{validation_failure, msg};
    }

    Drawing result;
    result.scale = d.scale;
    result.format = d.format;
    std::size_t expanded = 0;
    for (const auto& e : d.elements)
    {
        if (const auto* m = std::get_if<MagistralElement>(&e))
        {
            for (auto& piece : magistral::tessellate(*m))
                result.elements.push_back(std::move(piece));
            ++expanded;
        }
        else
        {
            result.elements.push_back(e);
        }
    }
    const Bytes bytes = encode_drawing(result);
    write_file(out_path, bytes);
    out << out_path << ": expanded " << expanded << " magistrals; " << d.elements.size() << " -> "
        << result.elements.size() << " elements, " << bytes.size() << " bytes\n";
    return ok;
}

int cmd_svg(const std::string& in, const std::string& out_path, const Standards& st, std::ostream& out)
{
    const Drawing d = load(in, read_file(in));
    std::string svg;
    try
    {
        svg = render_svg(d, st);
    }
    catch (const DomainError& e)
    {
        throw Failure{validation_failure, in + ": cannot render: " + e.what()};
    }
    write_file(out_path, svg);
    out << out_path << ": " << d.elements.size() << " elements rendered\n";
    return ok;
}

int cmd_roundtrip(const std::string& path, std::ostream& out)
{
    const Bytes bytes = read_file(path);
    const Drawing d = load(path, bytes);
    const Bytes again = encode_drawing(d);
    const auto mismatch = std::mismatch(bytes.begin(), bytes.end(), again.begin(), again.end());
    if (mismatch.first != bytes.end() || mismatch.second != again.end())
    {
        const auto at = static_cast<std::size_t>(mismatch.first - bytes.begin());
        throw Failure{validation_failure, path + ": re-encoding differs at byte " + std::to_string(at)};
    }
    out << path << ": " << bytes.size() << " bytes roundtrip identically\n";
    return ok;
}

// ─── new-magistral ──────────────────────────────────────────────────────────

std::vector<double> parse_numbers(const std::string& s, std::size_t count, const char* flag)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        }
        catch (const std::exception&)
        {
            throw Failure{decode_failure, std::string(flag) + ": '" + item + "' is not a number"};
        }
    }
    if (v.size() != count)
        throw Failure{decode_failure, std::string(flag) + " expects " + std::to_string(count) + " comma-separated numbers"};
    return v;
}

FontSpec parse_font(const std::string& s)
{
    FontSpec f;
    const auto slash = s.find('/');
    try
    {
        f.size_mm = std::stod(s.substr(0, slash));
        f.slant_deg = slash == std::string::npos ? 90 : std::stoi(s.substr(slash + 1));
    }
    catch (const std::exception&)
    {
        throw Failure{decode_failure, "--font: expected SIZE or SIZE/SLANT, got '" + s + "'"};
    }
    return f;
}

struct NewMagistralOptions
{
    std::string output;
    int type = 0;
    std::string seg;
    std::string arc;
    double first_step = -1;
    double step = -1;
    double picture = -1;
    std::vector<std::string> sets;
    std::string font;
    std::string text;
    bool text_given = false;
    double compression = -1;
    int layer = 0;
    int color = 0;
    std::string space = "bumaga";
    int scale = 0;
    std::string format = "A4";
};

SheetFormat parse_format(const std::string& s, const Standards& st)
{
    for (std::size_t i = 0; i < st.formats().size(); ++i)
        if (st.formats()[i].name == s)
            return SheetFormat::standard(static_cast<std::uint16_t>(i));
    const auto x = s.find('x');
    if (x != std::string::npos)
    {
        try
        {
            const int w = std::stoi(s.substr(0, x));
            const int h = std::stoi(s.substr(x + 1));
            if (w >= 1 && w <= 65535 && h >= 1 && h <= 65535)
                return SheetFormat::custom(static_cast<std::uint16_t>(w), static_cast<std::uint16_t>(h));
        }
        catch (const std::exception&)
        {
        }
    }
    throw Failure{decode_failure, "--format: '" + s + "' is neither a configured format name nor WxH in whole mm"};
}

int cmd_new_magistral(const NewMagistralOptions& o, const Standards& st, std::ostream& out)
{
    magistral::MagistralSpec spec;
    spec.type = o.type;
    const magistral::TypeDescriptor* d = nullptr;
    try
    {
        d = &magistral::descriptor(o.type);
    }
    catch (const DomainError& e)
    {
        throw Failure{validation_failure, e.what()};
    }

    if (o.seg.empty() == o.arc.empty())
        throw Failure{decode_failure, "exactly one of --seg or --arc is required"};
    if (!o.seg.empty())
    {
        const auto v = parse_numbers(o.seg, 4, "--seg");
        spec.carrier = Segment{{v[0], v[1]}, {v[2], v[3]}};
    }
    else
    {
        const auto v = parse_numbers(o.arc, 5, "--arc");
        spec.carrier = Arc{{v[0], v[1]}, v[2], v[3] / deg_per_rad, v[4] / deg_per_rad};
    }

    if (o.layer < 0 || o.layer > 255)
        throw Failure{validation_failure, "--layer must be 0..255"};
    if (o.color < 0 || o.color > 15)
        throw Failure{validation_failure, "--color must be 0..15"};
    if (o.space != "natura" && o.space != "bumaga")
        throw Failure{decode_failure, "--space must be natura or bumaga"};
    spec.header.layer = static_cast<std::uint8_t>(o.layer);
    spec.header.attr = Attributes{d->carrier_line, static_cast<std::uint8_t>(o.color),
                                  o.space == "natura" ? CoordSpace::Natura : CoordSpace::Bumaga};

    const auto defaults = magistral::default_general(o.type);
    spec.general.first_step_mm = o.first_step >= 0 ? o.first_step : defaults.first_step_mm;
    spec.general.step_mm = o.step >= 0 ? o.step : defaults.step_mm;
    spec.general.picture_mm = o.picture >= 0 ? o.picture : defaults.picture_mm;

    spec.individual = magistral::default_individual(o.type);
    const auto set_value = [&](const std::string& name, magistral::FieldValue value) {
        const int i = d->field_index(name);
        if (i < 0)
        {
            std::string names;
            for (const auto& f : d->fields)
                names += (names.empty() ? "" : ", ") + std::string(f.name);
            throw Failure{validation_failure, "type " + std::string(d->key) + " has no setting '" + name +
                                                  "' (settings: " + names + ")"};
        }
        spec.individual.values[static_cast<std::size_t>(i)] = std::move(value);
    };
    for (const auto& kv : o.sets)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Failure{decode_failure, "--set expects NAME=VALUE, got '" + kv + "'"};
        const std::string name = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        const auto* f = d->field(name);
        if (f && f->kind == magistral::FieldKind::Font)
            set_value(name, parse_font(value));
        else if (f && f->kind == magistral::FieldKind::Text)
            set_value(name, value);
        else
            set_value(name, parse_numbers(value, 1, "--set")[0]);
    }
    if (!o.font.empty())
        set_value("font", parse_font(o.font));
    if (o.text_given)
    {
        try
        {
            set_value("text", utf8_to_cp1251(o.text));
        }
        catch (const DomainError& e)
        {
            throw Failure{validation_failure, std::string("--text: ") + e.what()};
        }
    }
    if (o.compression >= 0)
        set_value("compression", o.compression);

    if (auto v = magistral::validate(spec); !v.empty())
    {
        std::string msg = "invalid magistral; nothing written";
        for (const auto& x : v)
            msg += "\n  " + x.to_string();
        throw Failure{validation_failure, msg};
    }
    const MagistralElement m = magistral::build(spec);

    Drawing drawing;
    if (fs::exists(o.output))
    {
        drawing = load(o.output, read_file(o.output));
    }
    else
    {
        if (o.scale < 0 || o.scale > 255 || !st.has_scale(static_cast<ScaleId>(o.scale)))
            throw Failure{validation_failure, "--scale: id " + std::to_string(o.scale) + " is not in the scale table"};
        drawing.scale = static_cast<ScaleId>(o.scale);
        drawing.format = parse_format(o.format, st);
    }
    drawing.elements.push_back(m);
    const Bytes bytes = encode_drawing(drawing);
    write_file(o.output, bytes);
    out << o.output << ": added magistral type " << o.type << " (" << d->key << "), " << element_size(m)
        << " bytes; drawing now " << drawing.elements.size() << " elements, " << bytes.size() << " bytes\n";
    return ok;
}

std::string types_help()
{
    std::string s = "Magistral types and their individual settings (--set NAME=VALUE, lengths in mm):\n";
    for (const auto& d : magistral::all_types())
    {
        s += "  " + std::to_string(d.id) + (d.id < 10 ? "  " : " ") + std::string(d.key) + ":";
        for (const auto& f : d.fields)
            s += " " + std::string(f.name);
        std::string unused;
        if (!d.uses_first_step)
            unused += " first-step";
        if (!d.uses_step)
            unused += " step";
        if (!d.uses_picture)
            unused += " picture";
        if (!unused.empty())
            s += "  [no" + unused + "]";
        s += "\n";
    }
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"tcgx: compact standards-constrained drawing files.\n"
                 "Exit codes: 0 ok, 1 validation failure, 2 decode/I/O/usage failure.\n"
                 "--json output is a JSON object with stable keys (see README).\n"
                 "Standards tables come from $TCGX_CONFIG_DIR/standards.json when set.",
                 "tcgx"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    bool json = false;

    auto* validate = app.add_subcommand("validate", "Decode and check every element against the standards");
    validate->add_option("file", input, "Drawing (.tcgx)")->required();
    validate->add_flag("--json", json, "Structured output");

    auto* inspect = app.add_subcommand("inspect", "Dump every element in human units");
    inspect->add_option("file", input, "Drawing (.tcgx)")->required();
    inspect->add_flag("--json", json, "Structured output");

    NewMagistralOptions nm;
    auto* newm = app.add_subcommand("new-magistral", "Create a magistral and append it to a drawing");
    newm->footer(types_help());
    newm->add_option("-o,--output", nm.output, "Drawing to append to (created if missing)")->required();
    newm->add_option("--type", nm.type, "Magistral type 1..26")->required();
    newm->add_option("--seg", nm.seg, "Segment carrier x1,y1,x2,y2 (mm)");
    newm->add_option("--arc", nm.arc, "Arc carrier cx,cy,r,start,sweep (mm, degrees)");
    newm->add_option("--first-step", nm.first_step, "Carrier length before the first picture (mm)");
    newm->add_option("--step", nm.step, "Carrier length between pictures (mm)");
    newm->add_option("--picture", nm.picture, "Picture length (mm)");
    newm->add_option("--set", nm.sets, "Individual setting NAME=VALUE");
    newm->add_option("--font", nm.font, "Font SIZE[/SLANT], e.g. 3.5/75");
    newm->add_option("--text", nm.text, "Text of up to 4 characters")->each([&nm](const std::string&) {
        nm.text_given = true;
    });
    newm->add_option("--compression", nm.compression, "Font compression 0.1..2.55");
    newm->add_option("--layer", nm.layer, "Layer 0..255");
    newm->add_option("--color", nm.color, "Color index 0..15");
    newm->add_option("--space", nm.space, "natura or bumaga");
    newm->add_option("--scale", nm.scale, "Scale id for a new drawing");
    newm->add_option("--format", nm.format, "Sheet format name or WxH for a new drawing");

    auto* expand = app.add_subcommand("expand", "Replace every magistral by explicit primitives");
    expand->add_option("input", input, "Drawing (.tcgx)")->required();
    expand->add_option("-o,--output", output, "Expanded drawing")->required();

    auto* stats = app.add_subcommand("stats", "Per-element sizes and magistral expansion ratios");
    stats->add_option("file", input, "Drawing (.tcgx)")->required();
    stats->add_flag("--json", json, "Structured output");

    auto* svg = app.add_subcommand("svg", "Render the sheet to SVG (1 unit = 1 mm)");
    svg->add_option("input", input, "Drawing (.tcgx)")->required();
    svg->add_option("-o,--output", output, "SVG file")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "Decode, re-encode and compare byte for byte");
    roundtrip->add_option("file", input, "Drawing (.tcgx)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : decode_failure;
    }

    try
    {
        if (roundtrip->parsed())
            return cmd_roundtrip(input, out);
        if (stats->parsed())
            return cmd_stats(input, json, out);

        const Standards st = Standards::from_environment();
        if (validate->parsed())
            return cmd_validate(input, json, st, out);
        if (inspect->parsed())
            return cmd_inspect(input, json, st, out);
        if (newm->parsed())
            return cmd_new_magistral(nm, st, out);
        if (expand->parsed())
            return cmd_expand(input, output, st, out);
        if (svg->parsed())
            return cmd_svg(input, output, st, out);
    }
    catch (const Failure& f)
    {
        err << "tcgx: " << f.message << "\n";
        return f.code;
    }
    catch (const ConfigError& e)
    {
        err << "tcgx: " << e.what() << "\n";
        return decode_failure;
    }
    catch (const DomainError& e)
    {
        err << "tcgx: " << e.what() << "\n";
        return validation_failure;
    }
    return decode_failure;
}

} // namespace tcgx::cli
