#include "support.hpp"

#include <doctest.h>

#include <tcgx/text_encoding.hpp>

using namespace tcgx;

TEST_CASE("segment bytes are hand-assembled")
{
    const Bytes expected{0x01, 0x00, 0x00,                          // tag, layer, attr
                         0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, // (0, 0)
                         0x00, 0x00, 0x80, 0x3F, 0x00, 0x00, 0x80, 0x3F}; // (1, 1) as little-endian 1.0f
    const Element e = SegmentElement{{0, {LineType::SolidMain, 0, CoordSpace::Natura}}, {{0, 0}, {1, 1}}};
    CHECK(encode_element(e) == expected);
    const auto d = decode_element(expected);
    CHECK(d.consumed == 19);
    CHECK(d.element == e);
}

TEST_CASE("record sizes are fixed")
{
    testing::Rng rng(3);
    for (int i = 0; i < 500; ++i)
    {
        CHECK(encode_element(testing::random_magistral(rng)).size() == 43);
        CHECK(encode_element(ArcElement{testing::random_header(rng), Arc{testing::random_point(rng), 3, 1, 2}}).size() == 23);
    }
}

TEST_CASE("empty drawing is a 16-byte header")
{
    Drawing d;
    const Bytes b = encode_drawing(d);
    REQUIRE(b.size() == 16);
    CHECK(b[0] == 'T');
    CHECK(b[3] == 'X');
    CHECK(b[4] == 1); // version
    CHECK(b[5] == 0);
    CHECK(b[6] == 0);  // scale id
    CHECK(b[7] == 0);  // standard format
    CHECK(b[8] == 4);  // A4
    CHECK(b[12] == 0); // element count
    CHECK(decode_drawing(b) == d);
}

TEST_CASE("two magistrals take 16 + 86 bytes")
{
    testing::Rng rng(8);
    Drawing d;
    d.elements.push_back(testing::random_magistral(rng));
    d.elements.push_back(testing::random_magistral(rng));
    CHECK(encode_drawing(d).size() == 16 + 86);
}

TEST_CASE("random drawings roundtrip")
{
    testing::Rng rng(99);
    for (int i = 0; i < 2000; ++i)
    {
        const Drawing d = testing::random_drawing(rng);
        const Bytes b = encode_drawing(d);
        const Drawing back = decode_drawing(b);
        REQUIRE(back == d);
        REQUIRE(encode_drawing(back) == b);
    }
}

TEST_CASE("decode errors are located")
{
    testing::Rng rng(4);
    Drawing d;
    d.elements.push_back(SegmentElement{{}, {{0, 0}, {1, 0}}});
    d.elements.push_back(testing::random_magistral(rng));
    const Bytes good = encode_drawing(d);
    const std::size_t mag = 16 + 19;

    SUBCASE("carrier kind 2")
    {
        Bytes b = good;
        b[mag + 3] = 2;
        try
        {
            (void)decode_drawing(b);
            FAIL("expected DecodeError");
        }
        catch (const DecodeError& e)
        {
            CHECK(e.offset() == mag + 3);
            CHECK(e.element() == 1u);
        }
        const Bytes rec(b.begin() + mag, b.begin() + mag + 43);
        try
        {
            (void)decode_element(rec);
            FAIL("expected DecodeError");
        }
        catch (const DecodeError& e)
        {
            CHECK(e.offset() == 3);
        }
    }
    SUBCASE("truncation")
    {
        const Bytes b(good.begin(), good.end() - 1);
        CHECK_THROWS_AS(decode_drawing(b), DecodeError);
    }
    SUBCASE("trailing bytes")
    {
        Bytes b = good;
        b.push_back(0);
        CHECK_THROWS_AS(decode_drawing(b), DecodeError);
    }
    SUBCASE("bad magic and version")
    {
        Bytes b = good;
        b[0] = 'X';
        CHECK_THROWS_AS(decode_drawing(b), DecodeError);
        b = good;
        b[4] = 2;
        CHECK_THROWS_AS(decode_drawing(b), DecodeError);
    }
    SUBCASE("unknown tag")
    {
        Bytes b = good;
        b[16] = 9;
        try
        {
            (void)decode_drawing(b);
            FAIL("expected DecodeError");
        }
        catch (const DecodeError& e)
        {
            CHECK(e.offset() == 16);
            CHECK(e.element() == 0u);
        }
    }
    SUBCASE("nonzero segment padding inside a carrier")
    {
        Drawing m;
        MagistralElement x = testing::golden_magistral(4);
        m.elements.push_back(x);
        Bytes b = encode_drawing(m);
        b[16 + 20] = 1;
        try
        {
            (void)decode_drawing(b);
            FAIL("expected DecodeError");
        }
        catch (const DecodeError& e)
        {
            CHECK(e.offset() == 16 + 20);
        }
    }
    SUBCASE("illegal font byte in a text record")
    {
        TextElement t;
        t.text = "A";
        Drawing td;
        td.elements.push_back(t);
        Bytes b = encode_drawing(td);
        b[16 + 3] = 0x06; // 3 mm is not a standard size
        try
        {
            (void)decode_drawing(b);
            FAIL("expected DecodeError");
        }
        catch (const DecodeError& e)
        {
            CHECK(e.offset() == 16 + 3);
        }
    }
}

TEST_CASE("encoder rejects unrepresentable values")
{
    CHECK_THROWS_AS(encode_element(SegmentElement{{}, {{0, 0}, {1e39, 0}}}), DomainError);
    CHECK_THROWS_AS(encode_element(SegmentElement{{}, {{0, 0}, {NAN, 0}}}), DomainError);
    CHECK_THROWS_AS(encode_element(PolylineElement{{}, {{0, 0}}}), DomainError);
    TextElement t;
    t.text = std::string(256, 'a');
    CHECK_THROWS_AS(encode_element(t), DomainError);
    MagistralElement m = testing::golden_magistral(4);
    m.type = 27;
    CHECK_THROWS_AS(encode_element(m), DomainError);
    m = testing::golden_magistral(4);
    m.individual[0] = 255;
    CHECK_THROWS_AS(encode_element(m), DomainError);
    Bytes out{1, 2, 3};
    CHECK_THROWS_AS(encode_element(m, out), DomainError);
    CHECK(out == Bytes{1, 2, 3});
}

TEST_CASE("mutated buffers decode or fail with an in-range offset")
{
    testing::Rng rng(17);
    for (int i = 0; i < 3000; ++i)
    {
        Bytes b = encode_drawing(testing::random_drawing(rng, 4));
        const int flips = testing::uniform_int(rng, 1, 4);
        for (int k = 0; k < flips; ++k)
            b[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(b.size()) - 1))] =
                static_cast<std::uint8_t>(testing::uniform_int(rng, 0, 255));
        if (testing::uniform_int(rng, 0, 4) == 0)
            b.resize(static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(b.size()))));
        try
        {
            (void)decode_drawing(b);
        }
        catch (const DecodeError& e)
        {
            CHECK(e.offset() <= b.size());
        }
    }
}

TEST_CASE("code page conversion")
{
    CHECK(utf8_to_cp1251("\xD0\x92" "1") == "\xC2\x31");
    CHECK(cp1251_to_utf8("\xC3\xC0\xC7") == "\xD0\x93\xD0\x90\xD0\x97");
    CHECK(cp1251_to_utf8("\x98") == "\xEF\xBF\xBD");
    CHECK_THROWS_AS(utf8_to_cp1251("\xE4\xB8\xAD"), DomainError); // a CJK character
    CHECK_THROWS_AS(utf8_to_cp1251("\xD0"), DomainError);
    for (int b = 1; b < 256; ++b)
    {
        if (b == 0x98)
            continue;
        const std::string s(1, static_cast<char>(b));
        CHECK(utf8_to_cp1251(cp1251_to_utf8(s)) == s);
    }
}
