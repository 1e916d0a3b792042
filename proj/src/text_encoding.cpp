#include <tcgx/text_encoding.hpp>

#include <tcgx/errors.hpp>

#include <array>
#include <cstdint>

namespace tcgx {

namespace {

// 0x80..0xBF; 0x98 is unassigned.
constexpr std::array<char32_t, 64> cp1251_high{
    0x0402, 0x0403, 0x201A, 0x0453, 0x201E, 0x2026, 0x2020, 0x2021, 0x20AC, 0x2030, 0x0409, 0x2039, 0x040A,
    0x040C, 0x040B, 0x040F, 0x0452, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014, 0xFFFD, 0x2122,
    0x0459, 0x203A, 0x045A, 0x045C, 0x045B, 0x045F, 0x00A0, 0x040E, 0x045E, 0x0408, 0x00A4, 0x0490, 0x00A6,
    0x00A7, 0x0401, 0x00A9, 0x0404, 0x00AB, 0x00AC, 0x00AD, 0x00AE, 0x0407, 0x00B0, 0x00B1, 0x0406, 0x0456,
    0x0491, 0x00B5, 0x00B6, 0x00B7, 0x0451, 0x2116, 0x0454, 0x00BB, 0x0458, 0x0405, 0x0455, 0x0457,
};

char32_t to_unicode(unsigned char b) noexcept
{
    if (b < 0x80)
        return b;
    if (b >= 0xC0)
        return 0x0410 + (b - 0xC0); // А..я
    return cp1251_high[b - 0x80];
}

void append_utf8(std::string& out, char32_t cp)
{
    if (cp < 0x80)
    {
        out += static_cast<char>(cp);
    }
    else if (cp < 0x800)
    {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    else
    {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

} // namespace

std::string cp1251_to_utf8(std::string_view bytes)
{
    std::string out;
    out.reserve(bytes.size() * 2);
    for (char c : bytes)
        append_utf8(out, to_unicode(static_cast<unsigned char>(c)));
    return out;
}

std::string utf8_to_cp1251(std::string_view utf8)
{
    std::string out;
    std::size_t i = 0;
    while (i < utf8.size())
    {
        const auto lead = static_cast<unsigned char>(utf8[i]);
        char32_t cp = 0;
        std::size_t extra = 0;
        if (lead < 0x80)
            cp = lead;
        else if ((lead & 0xE0) == 0xC0)
            cp = lead & 0x1F, extra = 1;
        else if ((lead & 0xF0) == 0xE0)
            cp = lead & 0x0F, extra = 2;
        else if ((lead & 0xF8) == 0xF0)
            cp = lead & 0x07, extra = 3;
        else
            throw DomainError("text", "malformed UTF-8");
        for (std::size_t k = 1; k <= extra; ++k)
        {
            if (i + k >= utf8.size())
                throw DomainError("text", "truncated UTF-8 sequence");
            const auto cont = static_cast<unsigned char>(utf8[i + k]);
            if ((cont & 0xC0) != 0x80)
                throw DomainError("text", "malformed UTF-8");
            cp = (cp << 6) | (cont & 0x3F);
        }
        i += extra + 1;

        int byte = -1;
        if (cp < 0x80)
            byte = static_cast<int>(cp);
        else if (cp >= 0x0410 && cp <= 0x044F)
            byte = 0xC0 + static_cast<int>(cp - 0x0410);
        else
            for (std::size_t k = 0; k < cp1251_high.size(); ++k)
                if (cp1251_high[k] == cp && cp != 0xFFFD)
                    byte = 0x80 + static_cast<int>(k);
        if (byte < 0)
            throw DomainError("text", "character U+" + std::to_string(static_cast<std::uint32_t>(cp)) +
                                          " has no single-byte code");
        out += static_cast<char>(byte);
    }
    return out;
}

} // namespace tcgx
