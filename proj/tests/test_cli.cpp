#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cantor/cli.hpp"
#include "cantor/errors.hpp"
#include "oracles.hpp"

using namespace cantor;
using cli::RunConfig;
using oracle::rat;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(const RunConfig& config) {
    std::ostringstream out, err;
    const int code = cli::run(config, out, err);
    return {code, out.str(), err.str()};
}

RunConfig verb(const std::string& name) {
    RunConfig c;
    c.verb = name;
    return c;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream cl(line);
        std::string cell;
        while (std::getline(cl, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("spec json") {
    const auto s = cli::parse_spec_json(R"({"r": 5, "kept_digits": [0, 2, 4]})");
    CHECK(s == CantorSpec::five_three());
    CHECK_THROWS(cli::parse_spec_json(R"({"r": 3})"));
    CHECK_THROWS(cli::parse_spec_json("not json"));
    CHECK_THROWS_AS(cli::parse_spec_json(R"({"r": 3, "kept_digits": [0, 1, 2]})"), DomainError);

    CHECK(cli::resolve_specs(verb("verify")).size() == 3);
    auto c = verb("dim");
    c.r = 4;
    c.digits = {0, 3};
    REQUIRE(cli::resolve_specs(c).size() == 1);
    CHECK(cli::resolve_specs(c)[0] == CantorSpec::four_outer());
}

TEST_CASE("set verb") {
    auto c = verb("set");
    c.level = 1;
    auto r = invoke(c);
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "level,index,lo_num,lo_den,hi_num,hi_den\n1,0,0,1,1,3\n1,1,2,3,1,1\n");

    c.level = 2;
    c.gaps = "merged";
    r = invoke(c);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[2] == std::vector<std::string>{"2", "1", "1", "3", "2", "3"});

    c.gaps = "none";
    c.format = "json";
    const auto j = nlohmann::json::parse(invoke(c).out);
    CHECK(j["schema_version"] == cli::kSchemaVersion);
    CHECK(j["intervals"].size() == 4);
    CHECK(j["deleted_length"] == "5/9");

    c.gaps = "sideways";
    CHECK(invoke(c).code == cli::kUsageError);
}

TEST_CASE("phi verb staircase") {
    auto c = verb("phi");
    c.samples = 5;
    const auto rows = csv_rows(invoke(c).out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"x_num", "x_den", "phi_num", "phi_den", "phi_float"});
    CHECK(rows[2][2] + "/" + rows[2][3] == "1/3");
    CHECK(rows[3][2] + "/" + rows[3][3] == "1/2");
    CHECK(rows[5][0] == "1");
    CHECK(rows[5][2] == "1");

    c.samples = 1000;
    const auto big = csv_rows(invoke(c).out);
    REQUIRE(big.size() == 1001);
    Rational prev(-1);
    for (std::size_t i = 1; i < big.size(); ++i) {
        const Rational v = Rational::parse(big[i][2] + "/" + big[i][3]);
        REQUIRE(prev <= v);
        prev = v;
    }

    c.format = "svg";
    const auto svg = invoke(c).out;
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);

    c.samples = 1;
    c.format.clear();
    CHECK(invoke(c).code == cli::kUsageError);
}

TEST_CASE("dim, measure, valuation, diagnose") {
    auto d = verb("dim");
    d.r = 4;
    d.digits = {0, 3};
    const auto dj = nlohmann::json::parse(invoke(d).out);
    CHECK(dj["s"] == 0.5);
    CHECK(dj["p"] == 2);

    auto m = verb("measure");
    m.cylinders = "0,2;2";
    const auto mj = nlohmann::json::parse(invoke(m).out);
    CHECK(mj["valued_exact"] == "3/4");
    CHECK(mj["hausdorff_at_dimension"] == "3/4");
    CHECK(mj["set_description"] == "[0,2];[2]");
    m.cylinders = "1";
    CHECK(invoke(m).code == cli::kUsageError);

    auto v = verb("valuation");
    v.x_tilde = "1/1000";
    v.epsilon = "1/10";
    v.level = 2;
    const auto vj = nlohmann::json::parse(invoke(v).out);
    CHECK(vj["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(vj["canonical"]["exact"] == "2");
    v.x_tilde = "1/5";
    CHECK(invoke(v).code == cli::kUsageError);

    auto g = verb("diagnose");
    g.x = "1/4";
    g.depth = 3;
    const auto rows = csv_rows(invoke(g).out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][1] == "0");
    CHECK(rows[1][2] == "1/3");
    CHECK(rows[3][9] == "0");
    g.x = "1/2";
    CHECK(invoke(g).code == cli::kUsageError);
}

TEST_CASE("verify verb and determinism") {
    auto c = verb("verify");
    c.depth = 4;
    c.samples = 40;
    c.seed = 11;
    const auto a = invoke(c), b = invoke(c);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["seed"] == 11);
    for (const auto& suite : j["suites"]) CHECK(suite["pass"] == true);

    c.seed = 12;
    CHECK(invoke(c).code == cli::kOk);

    c.r = 3;
    c.digits = {0, 1};
    CHECK(invoke(c).code == cli::kOk);
}

TEST_CASE("usage errors and output files") {
    CHECK(invoke(verb("frobnicate")).code == cli::kUsageError);
    auto bad = verb("dim");
    bad.r = 3;
    bad.digits = {0, 1, 2};
    const auto r = invoke(bad);
    CHECK(r.code == cli::kUsageError);
    CHECK_FALSE(r.err.empty());

    auto missing = verb("dim");
    missing.spec_file = "/nonexistent/spec.json";
    CHECK(invoke(missing).code == cli::kUsageError);

    const std::string path = "cli_test_output.csv";
    auto c = verb("set");
    c.level = 2;
    c.out = path;
    const auto to_file = invoke(c);
    CHECK(to_file.code == cli::kOk);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    c.out.clear();
    CHECK(text.str() == invoke(c).out);
    std::remove(path.c_str());
}
