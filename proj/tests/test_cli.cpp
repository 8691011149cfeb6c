#include <doctest.h>

#include "cli_harness.hpp"
#include "tightcalc/json_io.hpp"

using namespace tightcalc;
using fixtures::data_file;
using fixtures::invoke;
using io::Json;

TEST_CASE("documented invocations") {
    auto seifert = invoke({"seifert", "--triple", "(1/3,1/6,-1/2)", "--kmax", "5"});
    CHECK(seifert.status == 0);
    CHECK(seifert.out.ends_with("verdict: torus-bundle candidate\n"));

    auto path = invoke({"farey", "path", "--from", "1/2", "--to", "inf"});
    CHECK(path.status == 0);
    CHECK(path.out == "1/2, 1/1, inf\n");

    auto solve = invoke({"--format", "json", "weights", "solve", "--input", data_file("abc.json"), "--max", "2", "--positive"});
    REQUIRE(solve.status == 0);
    Json j = Json::parse(solve.out);
    CHECK(j["count"] == 1);
    CHECK(io::weights_from_json(j["solutions"][0]) == branched::WeightFunction{{"A", 1}, {"B", 1}, {"C", 2}});

    auto text = invoke({"weights", "solve", "--input", data_file("abc.json"), "--max", "2", "--positive"});
    CHECK(text.status == 0);
    CHECK(text.out.find("1 solution(s)") != std::string::npos);
}

TEST_CASE("format flag is accepted after the subcommand") {
    auto a = invoke({"--format", "json", "farey", "path", "--from", "1/2", "--to", "inf"});
    auto b = invoke({"farey", "path", "--from", "1/2", "--to", "inf", "--format", "json"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("load_surface") {
    auto s = cli::load_surface(data_file("abc.json"));
    CHECK(s.sectors.size() == 3);
    CHECK(cli::load_surface(data_file("empty.json")).empty());

    auto kind_of = [](const std::string& name) {
        try {
            cli::load_surface(data_file(name));
        } catch (const cli::SurfaceLoadError& e) {
            return e.kind();
        }
        FAIL("expected SurfaceLoadError");
        return cli::SurfaceLoadError::Kind::io;
    };
    CHECK(kind_of("missing.json") == cli::SurfaceLoadError::Kind::io);
    CHECK(kind_of("malformed.json") == cli::SurfaceLoadError::Kind::parse);
    CHECK(kind_of("dangling.json") == cli::SurfaceLoadError::Kind::validation);
}

TEST_CASE("exit statuses for each failure mode") {
    struct Case {
        std::vector<std::string> args;
        int status;
        const char* diagnostic;
    };
    const std::vector<Case> corpus{
        {{"weights", "solve", "--input", data_file("missing.json"), "--max", "2"}, 2, "missing.json"},
        {{"weights", "solve", "--input", data_file("malformed.json"), "--max", "2"}, 2, "malformed.json"},
        {{"weights", "solve", "--input", data_file("dangling.json"), "--max", "2"}, 1, "'Z'"},
        {{"seifert", "--triple", "(1/2,1/2,1/2)"}, 1, "1/2"},
        {{"seifert", "--triple", "(1/2,1/1,1/2)"}, 1, nullptr},
        {{"seifert", "--triple", "(1/2,1/2)"}, 2, nullptr},
        {{"seifert", "--triple", "(1/3,1/6,-1/2)", "--kmax", "x"}, 2, nullptr},
        {{"weights", "check", "--input", data_file("abc.json"), "--weights", R"({"A":1,"B":1,"C":1})"}, 1, nullptr},
        {{"weights", "check", "--input", data_file("abc.json"), "--weights", R"({"A":1})"}, 1, nullptr},
        {{"weights", "check", "--input", data_file("abc.json"), "--weights", "{bad"}, 2, nullptr},
        {{"farey", "path", "--from", "1/2", "--to", "1/3"}, 1, nullptr},
        {{"farey", "mediant", "--a", "1/3", "--b", "2/3"}, 1, nullptr},
        {{"farey", "successor", "--slope", "1/0x"}, 2, nullptr},
        {{"farey", "path", "--from", "1/2"}, 2, nullptr},
        {{"farey", "path", "--from", "1/2", "--to", "inf", "--bogus"}, 2, nullptr},
        {{"multicurve", "--boundary", "1,2"}, 2, nullptr},
        {{"amputate", "--input", data_file("abc.json"), "--sectors", "Q"}, 1, nullptr},
        {{"--format", "yaml", "multicurve", "--boundary", "1,1,1"}, 2, nullptr},
        {{"frobnicate"}, 2, nullptr},
        {{}, 2, nullptr},
    };
    for (const auto& c : corpus) {
        auto r = invoke(c.args);
        std::string label = c.args.empty() ? "<no args>" : c.args.front();
        INFO(label);
        CHECK(r.status == c.status);
        CHECK_FALSE(r.err.empty());
        if (c.diagnostic) CHECK(r.err.find(c.diagnostic) != std::string::npos);
    }
}

TEST_CASE("empty surface is accepted") {
    auto r = invoke({"weights", "solve", "--input", data_file("empty.json"), "--max", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("1 solution(s)") != std::string::npos);
}

TEST_CASE("degree check reports violations as data") {
    auto r = invoke({"degree-check", "--input", data_file("annuli.json")});
    CHECK(r.status == 0);
    CHECK(r.out.find("violation: V2") != std::string::npos);
    CHECK(r.out.ends_with("inconsistent\n"));
}

TEST_CASE("structured reports re-parse to the values they were built from") {
    for (const char* triple : {"(1/3,1/6,-1/2)", "(1/2,1/2,-1/2)", "(1/3,2/3,-1/2)", "(4/3,1/6,-3/2)", "(1/5,2/5,-3/5)"}) {
        auto r = invoke({"--format", "json", "seifert", "--triple", triple, "--kmax", "2"});
        REQUIRE(r.status == 0);
        auto expected = seifert::analyze(seifert::SeifertTriple::parse(triple), 2);
        auto parsed = io::report_from_json(Json::parse(r.out));
        CHECK(parsed == expected);
        CHECK(io::report_to_json(parsed).dump(2) + "\n" == r.out);
    }

    auto amp = invoke({"--format", "json", "amputate", "--input", data_file("abc.json"), "--sectors", "C"});
    REQUIRE(amp.status == 0);
    auto surface = io::surface_from_json(Json::parse(amp.out));
    CHECK(surface == branched::amputate(cli::load_surface(data_file("abc.json")), {"C"}));

    auto mc = invoke({"--format", "json", "multicurve", "--boundary", "1,1,1", "--allow-bp"});
    REQUIRE(mc.status == 0);
    Json list = Json::parse(mc.out)["multicurves"];
    auto expected = multicurve::enumerate({1, 1, 1}, true);
    REQUIRE(list.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(io::multicurve_from_json(list[i]) == expected[i]);

    auto path = invoke({"--format", "json", "farey", "path", "--from", "1/5", "--to", "inf"});
    REQUIRE(path.status == 0);
    CHECK(io::path_from_json(Json::parse(path.out)["path"]) ==
          farey::shortest_increasing_path(Slope(1, 5), Slope::infinity()));
}

TEST_CASE("repeated invocations are byte-identical") {
    const std::vector<std::vector<std::string>> commands{
        {"seifert", "--triple", "(1/3,1/6,-1/2)", "--kmax", "5"},
        {"--format", "json", "seifert", "--triple", "(1/4,1/4,-1/2)", "--kmax", "3"},
        {"--format", "json", "weights", "solve", "--input", data_file("abc.json"), "--max", "4"},
        {"multicurve", "--boundary", "3,2,2", "--allow-bp"},
        {"--format", "json", "degree-check", "--input", data_file("annuli.json")},
    };
    for (const auto& args : commands) {
        auto first = invoke(args);
        for (int i = 0; i < 3; ++i) {
            auto again = invoke(args);
            CHECK(again.status == first.status);
            CHECK(again.out == first.out);
            CHECK(again.err == first.err);
        }
    }
}
