#include "support.hpp"

#include <doctest.h>

#include <tcgx/svg.hpp>

using namespace tcgx;

namespace {

std::size_t occurrences(const std::string& s, const std::string& what)
{
    std::size_t n = 0;
    for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("empty drawing renders only the sheet frame")
{
    const std::string svg = render_svg(Drawing{});
    CHECK(svg.find("width=\"210mm\"") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 210 297\"") != std::string::npos);
    CHECK(occurrences(svg, "<rect") == 1);
    for (const char* tag : {"<line", "<path", "<polyline", "<circle", "<text"})
        CHECK(occurrences(svg, tag) == 0);
}

TEST_CASE("wavy magistral renders as a single polyline")
{
    const std::string svg = render_svg(testing::golden_drawing(3));
    CHECK(occurrences(svg, "<polyline") == 1);
    CHECK(occurrences(svg, "<line") == 0);
    CHECK(svg.find("data-type=\"3\"") != std::string::npos);
}

TEST_CASE("natura coordinates are scaled to paper")
{
    Drawing d;
    d.scale = 12; // 1:100
    d.elements.push_back(SegmentElement{{0, {LineType::DashedThin, 0, CoordSpace::Natura}}, {{0, 0}, {1000, 2000}}});
    d.elements.push_back(SegmentElement{{0, {LineType::SolidMain, 1, CoordSpace::Bumaga}}, {{0, 0}, {1000, 2000}}});
    const std::string svg = render_svg(d);
    CHECK(svg.find("x2=\"10\" y2=\"20\"") != std::string::npos);
    CHECK(svg.find("x2=\"1000\" y2=\"2000\"") != std::string::npos);
    CHECK(svg.find("stroke-dasharray=\"5,1.5\"") != std::string::npos);
    CHECK(svg.find("stroke=\"" + Standards::bundled().palette()[1] + "\"") != std::string::npos);
}

TEST_CASE("arcs and circles")
{
    Drawing d;
    d.elements.push_back(ArcElement{{}, Arc{{50, 50}, 10, 0, 2 * testing::pi}});
    d.elements.push_back(ArcElement{{}, Arc{{50, 50}, 10, 0, -1.5 * testing::pi}});
    const std::string svg = render_svg(d);
    CHECK(occurrences(svg, "<circle") == 1);
    CHECK(svg.find("A 10 10 0 1 0") != std::string::npos);
}

TEST_CASE("rendering is deterministic")
{
    testing::Rng rng(2);
    for (int i = 0; i < 50; ++i)
    {
        Drawing d = testing::random_drawing(rng, 3);
        d.format = SheetFormat::standard(4);
        CHECK(render_svg(d) == render_svg(d));
    }
}
