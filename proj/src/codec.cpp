#include <tcgx/codec.hpp>

#include <tcgx/magistral.hpp>

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

namespace tcgx {

namespace {

constexpr std::uint8_t magic[4] = {'T', 'C', 'G', 'X'};

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ─── Writing ────────────────────────────────────────────────────────────────

class Writer
{
public:
    explicit Writer(Bytes& out) : out_(out) {}

    void u8(std::uint8_t v) { out_.push_back(v); }

    void u16(std::uint16_t v)
    {
        out_.push_back(static_cast<std::uint8_t>(v));
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
    }

    void u32(std::uint32_t v)
    {
        for (int k = 0; k < 4; ++k)
            out_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }

    void f32(double v, const char* field)
    {
        if (!std::isfinite(v))
            throw DomainError(field, "value is not finite");
        if (std::abs(v) > std::numeric_limits<float>::max())
            throw DomainError(field, "value does not fit a 32-bit float");
        u32(std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    }

    void point(const Point& p, const char* field)
    {
        f32(p.x, field);
        f32(p.y, field);
    }

    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }

private:
    Bytes& out_;
};

// ─── Reading ────────────────────────────────────────────────────────────────

class Reader
{
public:
    Reader(std::span<const std::uint8_t> data, std::size_t pos) : data_(data), pos_(pos) {}

    std::size_t pos() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return pos_ <= data_.size() ? data_.size() - pos_ : 0; }

    void need(std::size_t n, const char* what) const
    {
        if (remaining() < n)
            throw DecodeError(pos_, std::string("truncated ") + what + ": need " + std::to_string(n) +
                                        " bytes, have " + std::to_string(remaining()));
    }

    std::uint8_t u8()
    {
        need(1, "field");
        return data_[pos_++];
    }

    std::uint16_t u16()
    {
        need(2, "field");
        const auto v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }

    std::uint32_t u32()
    {
        need(4, "field");
        std::uint32_t v = 0;
        for (int k = 0; k < 4; ++k)
            v |= static_cast<std::uint32_t>(data_[pos_ + k]) << (8 * k);
        pos_ += 4;
        return v;
    }

    double f32()
    {
        const std::size_t at = pos_;
        const float f = std::bit_cast<float>(u32());
        if (!std::isfinite(f))
            throw DecodeError(at, "non-finite float");
        return f;
    }

    Point point() { return Point{f32(), f32()}; }

    std::span<const std::uint8_t> take(std::size_t n, const char* what)
    {
        need(n, what);
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_;
};

void write_header(Writer& w, ElementTag tag, const ElementHeader& h)
{
    w.u8(static_cast<std::uint8_t>(tag));
    w.u8(h.layer);
    w.u8(pack_attr(h.attr));
}

ElementHeader read_header(Reader& r)
{
    ElementHeader h;
    h.layer = r.u8();
    const std::size_t at = r.pos();
    h.attr = unpack_attr(r.u8(), at);
    return h;
}

void check_magistral_storable(const MagistralElement& m)
{
    if (m.type < 1 || m.type > magistral::type_count)
        throw DomainError("magistral.type", std::to_string(m.type) + " is not a magistral type 1..26");
    const auto check_code = [](std::uint16_t code, const char* field) {
        if (code > quant::general.max_code)
            throw DomainError(field, "code " + std::to_string(code) + " exceeds 60000 (600 mm)");
    };
    check_code(m.step, "step");
    check_code(m.picture, "picture");
    check_code(m.first_step, "first_step");
    try
    {
        (void)magistral::decode_individual(m.type, m.individual);
    }
    catch (const DecodeError& e)
    {
        throw DomainError("individual", e.detail());
    }
}

} // namespace

// ─── Carrier ────────────────────────────────────────────────────────────────

void encode_carrier(const CarrierLine& c, Bytes& out)
{
    Writer w(out);
    std::visit(overloaded{
                   [&](const Segment& s) {
                       w.u8(static_cast<std::uint8_t>(CarrierKind::Segment));
                       w.point(s.p1, "carrier.p1");
                       w.point(s.p2, "carrier.p2");
                       w.u32(0);
                   },
                   [&](const Arc& a) {
                       w.u8(static_cast<std::uint8_t>(CarrierKind::Arc));
                       w.point(a.center, "carrier.center");
                       w.f32(a.radius, "carrier.radius");
                       w.f32(a.start_angle, "carrier.start_angle");
                       w.f32(a.sweep, "carrier.sweep");
                   },
               },
               c);
}

CarrierLine decode_carrier(std::span<const std::uint8_t> bytes, std::size_t offset)
{
    Reader r(bytes, offset);
    r.need(carrier_encoding_size, "carrier");
    const std::uint8_t kind = r.u8();
    if (kind > static_cast<std::uint8_t>(CarrierKind::Arc))
        throw DecodeError(offset, "carrier kind " + std::to_string(kind) + " is neither segment (0) nor arc (1)");
    if (kind == static_cast<std::uint8_t>(CarrierKind::Segment))
    {
        Segment s;
        s.p1 = r.point();
        s.p2 = r.point();
        const std::size_t pad_at = r.pos();
        if (r.u32() != 0)
            throw DecodeError(pad_at, "nonzero padding after segment carrier");
        return s;
    }
    Arc a;
    a.center = r.point();
    a.radius = r.f32();
    a.start_angle = r.f32();
    a.sweep = r.f32();
    return a;
}

// ─── Elements ───────────────────────────────────────────────────────────────

void encode_element(const Element& e, Bytes& out)
{
    const std::size_t start = out.size();
    Writer w(out);
    try
    {
        std::visit(overloaded{
                       [&](const SegmentElement& s) {
                           write_header(w, ElementTag::Segment, s.header);
                           w.point(s.geom.p1, "p1");
                           w.point(s.geom.p2, "p2");
                       },
                       [&](const ArcElement& a) {
                           write_header(w, ElementTag::Arc, a.header);
                           w.point(a.geom.center, "center");
                           w.f32(a.geom.radius, "radius");
                           w.f32(a.geom.start_angle, "start_angle");
                           w.f32(a.geom.sweep, "sweep");
                       },
                       [&](const PolylineElement& p) {
                           const auto n = p.vertices.size();
                           if (n < PolylineElement::min_vertices || n > PolylineElement::max_vertices)
                               throw DomainError("vertices", std::to_string(n) + " vertices outside 2..65535");
                           write_header(w, ElementTag::Polyline, p.header);
                           w.u16(static_cast<std::uint16_t>(n));
                           for (const auto& v : p.vertices)
                               w.point(v, "vertex");
                       },
                       [&](const TextElement& t) {
                           if (t.text.size() > TextElement::max_bytes)
                               throw DomainError("text", std::to_string(t.text.size()) + " bytes exceeds 255");
                           write_header(w, ElementTag::Text, t.header);
                           w.u8(encode_font(t.font));
                           w.u8(static_cast<std::uint8_t>(quantize(quant::compression, t.compression, "compression")));
                           w.point(t.anchor, "anchor");
                           w.f32(t.rotation, "rotation");
                           w.u8(static_cast<std::uint8_t>(t.text.size()));
                           for (char c : t.text)
                               w.u8(static_cast<std::uint8_t>(c));
                       },
                       [&](const MagistralElement& m) {
                           check_magistral_storable(m);
                           write_header(w, ElementTag::Magistral, m.header);
                           encode_carrier(m.carrier, out);
                           w.u8(m.type);
                           w.u16(m.step);
                           w.u16(m.picture);
                           w.u16(m.first_step);
                           w.bytes(m.individual);
                       },
                   },
                   e);
    }
    catch (...)
    {
        out.resize(start);
        throw;
    }
}

Bytes encode_element(const Element& e)
{
    Bytes out;
    encode_element(e, out);
    return out;
}

Decoded decode_element(std::span<const std::uint8_t> bytes, std::size_t offset)
{
    Reader r(bytes, offset);
    const std::uint8_t tag = r.u8();
    Element result;
    switch (tag)
    {
        case static_cast<std::uint8_t>(ElementTag::Segment):
        {
            r.need(record_size::segment - 1, "segment record");
            SegmentElement s;
            s.header = read_header(r);
            s.geom.p1 = r.point();
            s.geom.p2 = r.point();
            result = s;
            break;
        }
        case static_cast<std::uint8_t>(ElementTag::Arc):
        {
            r.need(record_size::arc - 1, "arc record");
            ArcElement a;
            a.header = read_header(r);
            a.geom.center = r.point();
            a.geom.radius = r.f32();
            a.geom.start_angle = r.f32();
            a.geom.sweep = r.f32();
            result = a;
            break;
        }
        case static_cast<std::uint8_t>(ElementTag::Polyline):
        {
            r.need(record_size::polyline_base - 1, "polyline record");
            PolylineElement p;
            p.header = read_header(r);
            const std::size_t count_at = r.pos();
            const std::uint16_t n = r.u16();
            if (n < PolylineElement::min_vertices)
                throw DecodeError(count_at, "polyline needs at least 2 vertices, has " + std::to_string(n));
            r.need(8u * n, "polyline vertices");
            p.vertices.reserve(n);
            for (std::uint16_t i = 0; i < n; ++i)
                p.vertices.push_back(r.point());
            result = std::move(p);
            break;
        }
        case static_cast<std::uint8_t>(ElementTag::Text):
        {
            r.need(record_size::text_base - 1, "text record");
            TextElement t;
            t.header = read_header(r);
            const std::size_t font_at = r.pos();
            t.font = decode_font(r.u8(), font_at);
            const std::size_t comp_at = r.pos();
            const std::uint8_t comp = r.u8();
            if (!quant::compression.contains(comp))
                throw DecodeError(comp_at, "compression code " + std::to_string(comp) + " below 10 (0.10)");
            t.compression = dequantize(quant::compression, comp);
            t.anchor = r.point();
            t.rotation = r.f32();
            const std::uint8_t len = r.u8();
            const auto text = r.take(len, "text bytes");
            t.text.assign(text.begin(), text.end());
            result = std::move(t);
            break;
        }
        case static_cast<std::uint8_t>(ElementTag::Magistral):
        {
            r.need(record_size::magistral - 1, "magistral record");
            MagistralElement m;
            m.header = read_header(r);
            m.carrier = decode_carrier(bytes, r.pos());
            r.take(carrier_encoding_size, "carrier");
            const std::size_t type_at = r.pos();
            m.type = r.u8();
            if (m.type < 1 || m.type > magistral::type_count)
                throw DecodeError(type_at, "magistral type " + std::to_string(m.type) + " outside 1..26");
            for (auto* field : {&m.step, &m.picture, &m.first_step})
            {
                const std::size_t at = r.pos();
                *field = r.u16();
                if (*field > quant::general.max_code)
                    throw DecodeError(at, "general setting code " + std::to_string(*field) + " exceeds 60000");
            }
            const std::size_t ind_at = r.pos();
            const auto block = r.take(MagistralElement::individual_bytes, "individual settings");
            std::copy(block.begin(), block.end(), m.individual.begin());
            (void)magistral::decode_individual(m.type, m.individual, ind_at);
            result = m;
            break;
        }
        default:
            throw DecodeError(offset, "unknown element tag " + std::to_string(tag));
    }
    return Decoded{std::move(result), r.pos() - offset};
}

// ─── Drawings ───────────────────────────────────────────────────────────────

Bytes encode_drawing(const Drawing& d)
{
    if (d.elements.size() > std::numeric_limits<std::uint32_t>::max())
        throw DomainError("elements", "too many elements for a 32-bit count");
    if (d.format.kind == SheetFormat::Kind::Custom && (d.format.width_mm == 0 || d.format.height_mm == 0))
        throw DomainError("format", "custom format dimensions must be at least 1 mm");
    if (d.format.kind != SheetFormat::Kind::Custom && d.format.kind != SheetFormat::Kind::Standard)
        throw DomainError("format", "unknown format kind");

    Bytes out;
    Writer w(out);
    w.bytes(magic);
    w.u16(file_version);
    w.u8(d.scale);
    w.u8(static_cast<std::uint8_t>(d.format.kind));
    if (d.format.kind == SheetFormat::Kind::Standard)
    {
        w.u16(d.format.standard_id);
        w.u16(0);
    }
    else
    {
        w.u16(d.format.width_mm);
        w.u16(d.format.height_mm);
    }
    w.u32(static_cast<std::uint32_t>(d.elements.size()));
    for (std::size_t i = 0; i < d.elements.size(); ++i)
    {
        try
        {
            encode_element(d.elements[i], out);
        }
        catch (const DomainError& e)
        {
            throw DomainError("element " + std::to_string(i) + "." + e.field(), e.what());
        }
    }
    return out;
}

Drawing decode_drawing(std::span<const std::uint8_t> bytes)
{
    Reader r(bytes, 0);
    r.need(file_header_size, "file header");
    if (std::memcmp(bytes.data(), magic, 4) != 0)
        throw DecodeError(0, "bad magic; not a TCGX drawing");
    r.take(4, "magic");
    const std::uint16_t version = r.u16();
    if (version != file_version)
        throw DecodeError(4, "unsupported format version " + std::to_string(version));

    Drawing d;
    d.scale = r.u8();
    const std::size_t kind_at = r.pos();
    const std::uint8_t kind = r.u8();
    const std::uint16_t a = r.u16();
    const std::size_t b_at = r.pos();
    const std::uint16_t b = r.u16();
    if (kind == static_cast<std::uint8_t>(SheetFormat::Kind::Standard))
    {
        if (b != 0)
            throw DecodeError(b_at, "nonzero padding in standard sheet format");
        d.format = SheetFormat::standard(a);
    }
    else if (kind == static_cast<std::uint8_t>(SheetFormat::Kind::Custom))
    {
        if (a == 0 || b == 0)
            throw DecodeError(kind_at + 1, "custom sheet format dimensions must be at least 1 mm");
        d.format = SheetFormat::custom(a, b);
    }
    else
    {
        throw DecodeError(kind_at, "sheet format kind " + std::to_string(kind) + " is neither standard nor custom");
    }

    const std::uint32_t count = r.u32();
    std::size_t pos = r.pos();
    for (std::uint32_t i = 0; i < count; ++i)
    {
        try
        {
            auto dec = decode_element(bytes, pos);
            pos += dec.consumed;
            d.elements.push_back(std::move(dec.element));
        }
        catch (const DecodeError& e)
        {
            throw e.relocated(0, i);
        }
    }
    if (pos != bytes.size())
        throw DecodeError(pos, std::to_string(bytes.size() - pos) + " trailing bytes after the last element");
    return d;
}

} // namespace tcgx
