#include "support.hpp"

#include <doctest.h>

#include <tcgx/cli.hpp>

#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace tcgx;
namespace fs = std::filesystem;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result tcgx_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir
{
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path() / ("tcgx_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write_bytes(const std::string& path, const Bytes& b)
{
    std::ofstream(path, std::ios::binary).write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
}

Bytes read_bytes(const std::string& path)
{
    const std::string s = testing::read_text(path);
    return Bytes(s.begin(), s.end());
}

} // namespace

TEST_CASE("new-magistral appends 43 bytes")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    auto r = tcgx_run({"new-magistral", "-o", file, "--type", "4", "--seg", "0,0,100,0"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("43 bytes") != std::string::npos);
    CHECK(fs::file_size(file) == 16 + 43);
    r = tcgx_run({"new-magistral", "-o", file, "--type", "4", "--arc", "0,0,50,0,90"});
    REQUIRE(r.code == 0);
    CHECK(fs::file_size(file) == 16 + 86);
}

TEST_CASE("new-magistral rejects invalid settings and writes nothing")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    auto r = tcgx_run({"new-magistral", "-o", file, "--type", "16", "--seg", "0,0,100,0", "--step", "5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("step") != std::string::npos);
    CHECK_FALSE(fs::exists(file));
    r = tcgx_run({"new-magistral", "-o", file, "--type", "9", "--seg", "0,0,100,0", "--text", "ABCDE"});
    CHECK(r.code == 1);
    CHECK_FALSE(fs::exists(file));
    r = tcgx_run({"new-magistral", "-o", file, "--type", "9", "--seg", "0,0,100,0", "--set", "nope=1"});
    CHECK(r.code == 1);
    r = tcgx_run({"new-magistral", "-o", file, "--type", "4", "--seg", "0,0,100"});
    CHECK(r.code == 2);
    CHECK_FALSE(fs::exists(file));
}

TEST_CASE("new-magistral settings reach the record")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    auto r = tcgx_run({"new-magistral", "-o", file, "--type", "9", "--seg", "0,0,100,0", "--text",
                       "\xD0\x92" "1", "--font", "2.5", "--compression", "1", "--layer", "4", "--color", "3",
                       "--space", "natura", "--scale", "12", "--format", "A3", "--step", "30"});
    REQUIRE(r.code == 0);
    const Drawing d = decode_drawing(read_bytes(file));
    CHECK(d.scale == 12);
    CHECK(d.format == SheetFormat::standard(3));
    const auto& m = std::get<MagistralElement>(d.elements.at(0));
    CHECK(m.header.layer == 4);
    CHECK(m.header.attr.color == 3);
    CHECK(m.header.attr.space == CoordSpace::Natura);
    CHECK(m.step == 3000);
    const std::array<std::uint8_t, 12> expected{0x05, 0xC2, 0x31, 0, 0, 0x64, 0, 0, 0, 0, 0, 0};
    CHECK(m.individual == expected);
}

TEST_CASE("validate")
{
    TempDir dir;
    const auto good = dir / "good.tcgx";
    REQUIRE(tcgx_run({"new-magistral", "-o", good, "--type", "16", "--seg", "0,0,100,0"}).code == 0);
    auto r = tcgx_run({"validate", good});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 violations") != std::string::npos);

    Drawing d = decode_drawing(read_bytes(good));
    d.elements.insert(d.elements.begin(), SegmentElement{{}, {{0, 0}, {1, 1}}});
    std::get<MagistralElement>(d.elements[1]).step = 100;
    const auto bad = dir / "bad.tcgx";
    write_bytes(bad, encode_drawing(d));
    r = tcgx_run({"validate", bad});
    CHECK(r.code == 1);
    CHECK(r.out.find("element 1 (offset 35)") != std::string::npos);
    CHECK(r.out.find("1 violation") != std::string::npos);

    r = tcgx_run({"validate", "--json", bad});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["violations"].size() == 1);
    CHECK(j["violations"][0]["element"] == 1);
    CHECK(j["violations"][0]["offset"] == 35);
    CHECK(j["violations"][0]["field"] == "step");

    Bytes b = read_bytes(good);
    b.resize(b.size() - 5);
    const auto trunc = dir / "trunc.tcgx";
    write_bytes(trunc, b);
    r = tcgx_run({"validate", trunc});
    CHECK(r.code == 2);
    CHECK(r.err.find("byte") != std::string::npos);
    CHECK(tcgx_run({"validate", dir / "missing.tcgx"}).code == 2);
}

TEST_CASE("inspect")
{
    TempDir dir;
    const auto empty = dir / "empty.tcgx";
    write_bytes(empty, encode_drawing(Drawing{}));
    auto r = tcgx_run({"inspect", empty});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    CHECK(r.out.find("0 elements") != std::string::npos);

    const auto file = dir / "a.tcgx";
    REQUIRE(tcgx_run({"new-magistral", "-o", file, "--type", "4", "--seg", "0,0,100,0", "--step", "12.34"}).code == 0);
    REQUIRE(tcgx_run({"new-magistral", "-o", file, "--type", "9", "--seg", "0,0,100,0", "--text", "\xD0\x93\xD0\x90\xD0\x97"}).code == 0);
    r = tcgx_run({"inspect", "--json", file});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["elements"].size() == 2);
    CHECK(j["elements"][0]["magistral_key"] == "thin-with-zigzag");
    CHECK(j["elements"][0]["step_mm"].get<double>() == doctest::Approx(12.34));
    CHECK(j["elements"][0]["individual"]["zigzag_height_mm"].get<double>() == doctest::Approx(3.0));
    CHECK(j["elements"][1]["individual"]["text"] == "\xD0\x93\xD0\x90\xD0\x97");
    r = tcgx_run({"inspect", file});
    CHECK(r.out.find("#1 @59 magistral") != std::string::npos);
}

TEST_CASE("stats")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    Drawing d;
    d.elements.push_back(SegmentElement{{}, {{0, 0}, {1, 1}}});
    d.elements.push_back(ArcElement{{}, {{0, 0}, 1, 0, 1}});
    magistral::MagistralSpec spec;
    spec.type = 9;
    spec.carrier = Segment{{0, 0}, {600, 0}};
    spec.general = magistral::default_general(9);
    spec.individual = magistral::default_individual(9);
    spec.individual.values[1] = std::string("AB");
    d.elements.push_back(magistral::build(spec));
    write_bytes(file, encode_drawing(d));
    auto r = tcgx_run({"stats", "--json", file});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["size"] == 19);
    CHECK(j["rows"][1]["size"] == 23);
    CHECK(j["rows"][2]["size"] == 43);
    CHECK(j["rows"][2]["ratio"].get<double>() >= 5);
    CHECK(j["totals"]["bytes"].get<std::size_t>() == fs::file_size(file) - 16);
    r = tcgx_run({"stats", file});
    CHECK(r.code == 0);
    CHECK(r.out.find("85 bytes of records") != std::string::npos);
}

TEST_CASE("expand, roundtrip and svg")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    REQUIRE(tcgx_run({"new-magistral", "-o", file, "--type", "2", "--seg", "0,0,150,20"}).code == 0);
    REQUIRE(tcgx_run({"new-magistral", "-o", file, "--type", "14", "--arc", "100,100,60,10,200", "--text", "K"}).code == 0);
    const auto expanded = dir / "b.tcgx";
    auto r = tcgx_run({"expand", file, "-o", expanded});
    REQUIRE(r.code == 0);
    const Drawing in = decode_drawing(read_bytes(file));
    const Drawing out = decode_drawing(read_bytes(expanded));
    std::size_t n = 0;
    for (const auto& e : in.elements)
        n += magistral::tessellate(std::get<MagistralElement>(e)).size();
    CHECK(out.elements.size() == n);
    CHECK(fs::file_size(expanded) >= fs::file_size(file));
    CHECK(tcgx_run({"validate", expanded}).code == 0);
    CHECK(tcgx_run({"roundtrip", expanded}).code == 0);
    CHECK(tcgx_run({"roundtrip", file}).code == 0);

    const auto twice = dir / "c.tcgx";
    REQUIRE(tcgx_run({"expand", expanded, "-o", twice}).code == 0);
    CHECK(read_bytes(twice) == read_bytes(expanded));

    const auto svg = dir / "a.svg";
    REQUIRE(tcgx_run({"svg", file, "-o", svg}).code == 0);
    const std::string first = testing::read_text(svg);
    REQUIRE(tcgx_run({"svg", file, "-o", svg}).code == 0);
    CHECK(testing::read_text(svg) == first);
    CHECK(first.find("<svg") != std::string::npos);
}

TEST_CASE("roundtrip reports decode errors")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    TextElement t;
    t.text = "A";
    Drawing d;
    d.elements.push_back(t);
    Bytes b = encode_drawing(d);
    b[16 + 3] = 0x06; // 3 mm is not a standard size
    write_bytes(file, b);
    const auto r = tcgx_run({"roundtrip", file});
    CHECK(r.code == 2);
    CHECK(r.err.find("byte 19") != std::string::npos);
}

TEST_CASE("failures leave no output file")
{
    TempDir dir;
    const auto file = dir / "a.tcgx";
    Drawing d;
    MagistralElement m = testing::golden_magistral(4);
    m.step = 0;
    d.elements.push_back(m);
    write_bytes(file, encode_drawing(d));
    CHECK(tcgx_run({"expand", file, "-o", dir / "out.tcgx"}).code == 1);
    CHECK_FALSE(fs::exists(dir / "out.tcgx"));
    CHECK(tcgx_run({"svg", file, "-o", dir / "out.svg"}).code == 1);
    CHECK_FALSE(fs::exists(dir / "out.svg"));
    CHECK(tcgx_run({"stats", file}).code == 1);
}

TEST_CASE("usage errors")
{
    CHECK(tcgx_run({}).code == 2);
    CHECK(tcgx_run({"frobnicate"}).code == 2);
    CHECK(tcgx_run({"--help"}).code == 0);
}
