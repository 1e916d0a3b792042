// Compares current output against the checked-in fixtures. The fixtures are
// only ever rewritten by the tcgx_regen_golden tool.
#include "support.hpp"

#include <doctest.h>

#include <tcgx/svg.hpp>

#include <filesystem>

using namespace tcgx;

TEST_CASE("element byte layouts match the hex fixtures")
{
    for (const auto& [name, element] : testing::golden_elements())
    {
        CAPTURE(name);
        const std::string path = TCGX_GOLDEN_DIR "/elements/" + name + ".hex";
        REQUIRE(std::filesystem::exists(path));
        const Bytes expected = testing::from_hex(testing::read_text(path));
        CHECK(encode_element(element) == expected);
        const auto decoded = decode_element(expected);
        CHECK(decoded.consumed == expected.size());
        CHECK(decoded.element == element);
    }
}

TEST_CASE("magistral renderings match the SVG fixtures")
{
    for (int type = 1; type <= magistral::type_count; ++type)
    {
        CAPTURE(type);
        const std::string path = TCGX_GOLDEN_DIR "/svg/" + testing::svg_golden_name(type);
        REQUIRE(std::filesystem::exists(path));
        CHECK(render_svg(testing::golden_drawing(type)) == testing::read_text(path));
    }
}
