/**
 * @file test_io.cpp
 * @brief JSON/CSV serialization, sequence files, and preset resolution.
 */

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "lucanomial/binomials.hpp"
#include "lucanomial/presets.hpp"
#include "lucanomial/triangle_io.hpp"

using namespace lucanomial;

TEST_CASE("triangle json round-trips bit-exactly") {
    SequenceContext fib(LucasParams(Rational(1), Rational(-1)), SequenceKind::u());
    Triangle tri = build_triangle(fib, std::nullopt, 6);
    std::string text = triangle_to_json(tri);
    Triangle back = triangle_from_json(text);
    CHECK(back == tri);
    CHECK(triangle_to_json(back) == text);

    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["family"] == "u");
    CHECK(parsed["params"]["P"] == "1");
    CHECK(parsed["params"]["Q"] == "-1");
    CHECK(parsed["rule"] == "factorial");
    CHECK(parsed["rows"][5][2] == "15");
}

TEST_CASE("custom triangles omit the params object") {
    auto ctx = SequenceContext::custom(
        {Rational(1), Rational(1), Rational(2), Rational(3), Rational(5)});
    Triangle tri = build_triangle(ctx, CoeffRule::FonteneLeft, 4);
    std::string text = triangle_to_json(tri);
    auto parsed = nlohmann::json::parse(text);
    CHECK(!parsed.contains("params"));
    CHECK(triangle_from_json(text) == tri);
}

TEST_CASE("malformed triangle json is rejected") {
    CHECK_THROWS_AS(triangle_from_json("{}"), Error);
    CHECK_THROWS_AS(triangle_from_json("not json"), Error);
    CHECK_THROWS_AS(
        triangle_from_json(R"({"family":"u","rule":"factorial","rows":[["1","1"]]})"), Error);
    CHECK_THROWS_AS(triangle_from_json(R"({"family":"u","rule":"factorial","rows":[[1]]})"),
                    Error);
}

TEST_CASE("csv rows are ragged") {
    SequenceContext gauss2(LucasParams(Rational(3), Rational(2)), SequenceKind::u());
    Triangle tri = build_triangle(gauss2, std::nullopt, 2);
    CHECK(triangle_to_csv(tri) == "1\n1,1\n1,3,1\n");
}

TEST_CASE("report and summary json lines carry every key") {
    Report report;
    report.id = "eq5-u";
    report.p = Rational(1);
    report.q = Rational(-1);
    report.site = "n<=8";
    report.status = Report::Status::Pass;
    report.note = "ok";
    auto line = nlohmann::json::parse(report_to_json_line(report));
    CHECK(line["id"] == "eq5-u");
    CHECK(line["P"] == "1");
    CHECK(line["Q"] == "-1");
    CHECK(line["site"] == "n<=8");
    CHECK(line["status"] == "pass");
    CHECK(line["note"] == "ok");

    Summary summary;
    summary.add(report);
    auto tally = nlohmann::json::parse(summary_to_json_line("oracle-equivalence", summary));
    CHECK(tally["suite"] == "oracle-equivalence");
    CHECK(tally["reports"] == 1);
    CHECK(tally["pass"] == 1);
    CHECK(tally["fail"] == 0);
    CHECK(tally["expected_fail"] == 0);
    CHECK(tally["unexpected_fail"] == 0);
    CHECK(tally["skipped"] == 0);
}

TEST_CASE("sequence files accept line and json-array formats") {
    auto lines = parse_sequence_file("# header\n1\n4\n\n9/2\n");
    REQUIRE(lines.size() == 3);
    CHECK(lines[2].str() == "9/2");

    auto arr = parse_sequence_file(R"(["1", "4", "9/2"])");
    CHECK(arr == lines);

    CHECK_THROWS_AS(parse_sequence_file("1\nbanana\n"), Error);
    try {
        parse_sequence_file("1\nbanana\n");
        FAIL("malformed line must throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("presets resolve from built-ins and the gaussian family") {
    auto fib = resolve_preset("fibonacci");
    REQUIRE(fib.has_value());
    CHECK(fib->params.P().str() == "1");
    CHECK(fib->params.Q().str() == "-1");
    CHECK(fib->kind.label() == "u");

    auto lucas = resolve_preset("lucas");
    REQUIRE(lucas.has_value());
    CHECK(lucas->kind.label() == "v");

    auto gauss3 = resolve_preset("gaussian:3");
    REQUIRE(gauss3.has_value());
    CHECK(gauss3->params.P().str() == "4");
    CHECK(gauss3->params.Q().str() == "3");

    CHECK(!resolve_preset("nope").has_value());
    CHECK_THROWS_AS(resolve_preset("gaussian:1"), DegenerateDiscriminant);
}

TEST_CASE("preset files parse names, parameters, and kinds") {
    auto presets = parse_preset_file(
        "# local presets\n"
        "jacobsthal=1,-2,u\n"
        "skiplucas=1,-1,h:3:1\n"
        "half=1/2,-1/4,w:0:1\n");
    REQUIRE(presets.size() == 3);
    CHECK(presets[0].name == "jacobsthal");
    CHECK(presets[0].params.Q().str() == "-2");
    CHECK(presets[1].kind.label() == "horadam-h");
    CHECK(presets[1].kind.seed0().str() == "3");
    CHECK(presets[2].params.P().str() == "1/2");

    CHECK_THROWS_AS(parse_preset_file("bad line\n"), Error);
    try {
        parse_preset_file("ok=1,-1,u\nbad line\n");
        FAIL("malformed preset must throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    // user presets shadow built-ins
    auto shadow = parse_preset_file("fibonacci=2,-1,u\n");
    auto hit = resolve_preset("fibonacci", shadow);
    REQUIRE(hit.has_value());
    CHECK(hit->params.P().str() == "2");
}

TEST_CASE("the presets environment variable feeds resolution") {
    std::string path = "io_test_presets.cfg";
    {
        std::ofstream out(path);
        out << "answerseq=6,-7,u\n";
    }
    setenv("LUCANOMIAL_PRESETS", path.c_str(), 1);
    auto user = load_env_presets();
    unsetenv("LUCANOMIAL_PRESETS");
    std::remove(path.c_str());

    REQUIRE(user.size() == 1);
    CHECK(user[0].name == "answerseq");
    auto hit = resolve_preset("answerseq", user);
    REQUIRE(hit.has_value());
    CHECK(hit->params.P().str() == "6");
}

TEST_CASE("missing files raise a readable error") {
    CHECK_THROWS_AS(read_text_file("definitely-not-here.json"), Error);
}
