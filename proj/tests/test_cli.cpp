#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "solenoid/cli.hpp"
#include "solenoid/numbers.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = solenoid::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json out_json(const RunResult& r) { return json::parse(r.out); }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("fixed-points emits the documented table")
{
    auto r = run_cli({"fixed-points", "--r", "2", "--s-set", "2", "--upto", "5"});
    REQUIRE_EQ(r.code, 0);
    CHECK_EQ(r.out, "n,F\n1,1\n2,3\n3,7\n4,15\n5,31\n");
    CHECK(r.err.empty());
}

TEST_CASE("entropy reports the exact record")
{
    auto r = run_cli({"entropy", "--r", "3/2"});
    REQUIRE_EQ(r.code, 0);
    CHECK(r.out.find("1.0986122886681098") != std::string::npos);
    auto doc = out_json(r);
    CHECK_EQ(doc["h"].get<double>(), std::log(3.0));
    CHECK_EQ(doc["exact_arg"].get<long>(), 3);
}

TEST_CASE("realizable verdicts and exit codes")
{
    auto bad = run_cli({"realizable", "--coeffs", "2,2,8,16"});
    CHECK_EQ(bad.code, 4);
    CHECK_EQ(out_json(bad), json({{"fail_at", 4}}));

    auto good = run_cli({"realizable", "--coeffs", "1,3,7,15,31"});
    CHECK_EQ(good.code, 0);
    CHECK_EQ(out_json(good), json({{"realizable", true}}));

    auto from_system = run_cli({"realizable", "--r", "2", "--s-set", "2,3", "--upto", "40"});
    CHECK_EQ(from_system.code, 0);

    auto neither = run_cli({"realizable"});
    CHECK_EQ(neither.code, 2);
    auto both = run_cli({"realizable", "--coeffs", "1,1", "--r", "2", "--s-set", "2"});
    CHECK_EQ(both.code, 2);
}

TEST_CASE("error paths map to the documented exit codes")
{
    CHECK_EQ(run_cli({"no-such-command"}).code, 2);
    CHECK_EQ(run_cli({"fixed-points", "--r", "2", "--s-set", "2", "--bogus", "1"}).code, 2);
    CHECK_EQ(run_cli({"fixed-points", "--r", "2"}).code, 2);
    CHECK_EQ(run_cli({"fixed-points", "--r", "2", "--s-set", "2", "--upto", "0"}).code, 2);
    CHECK_EQ(run_cli({"entropy", "--r", "1"}).code, 2);
    CHECK_EQ(run_cli({"lehmer-scan", "--max-degree", "20", "--max-height", "2",
                      "--threshold", "0.1"}).code, 3);
    CHECK_EQ(run_cli({"toral-zeta", "--matrix", "[[1,1],[0,1]]"}).code, 2);

    auto usage = run_cli({"no-such-command"});
    CHECK(usage.out.empty());
    CHECK(!usage.err.empty());

    auto help = run_cli({"--help"});
    CHECK_EQ(help.code, 0);
    CHECK(help.out.find("fixed-points") != std::string::npos);
}

TEST_CASE("SOLENOID_LAB_THREADS is validated")
{
    setenv("SOLENOID_LAB_THREADS", "junk", 1);
    CHECK_EQ(run_cli({"entropy", "--r", "2"}).code, 2);
    setenv("SOLENOID_LAB_THREADS", "4", 1);
    CHECK_EQ(run_cli({"entropy", "--r", "2"}).code, 0);
    unsetenv("SOLENOID_LAB_THREADS");
}

TEST_CASE("csv and json formats carry the same content")
{
    auto csv = run_cli({"orbits", "--r", "2", "--s-cofinite", "3", "--upto", "6"});
    auto js = run_cli({"orbits", "--r", "2", "--s-cofinite", "3", "--upto", "6",
                       "--format", "json"});
    REQUIRE_EQ(csv.code, 0);
    REQUIRE_EQ(js.code, 0);

    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK_EQ(header, "n,F,O");
    auto doc = out_json(js);
    for (const auto& row : doc["rows"]) {
        std::string line;
        REQUIRE(std::getline(lines, line));
        std::string expect = std::to_string(row["n"].get<long>()) + "," +
                             std::to_string(row["F"].get<long>()) + "," +
                             std::to_string(row["O"].get<long>());
        CHECK_EQ(line, expect);
    }
    std::string leftover;
    CHECK(!std::getline(lines, leftover));
}

TEST_CASE("output is byte deterministic")
{
    std::vector<std::vector<std::string>> fixtures = {
        {"fixed-points", "--r", "3/2", "--s-set", "2,3", "--upto", "12"},
        {"zeta", "--r", "2", "--s-set", "2", "--n", "10"},
        {"mertens", "--r", "2", "--s-set", "2,3", "--upto", "1500", "--format", "json"},
        {"poset", "--matrices", "[[3,10],[1,3]];[[3,5],[2,3]]", "--primes", "2,3"},
    };
    for (const auto& args : fixtures) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        REQUIRE_EQ(a.code, 0);
        CHECK_EQ(a.out, b.out);
        CHECK_EQ(a.code, b.code);
    }
}

TEST_CASE("zeta emits closed forms and series")
{
    auto closed = run_cli({"zeta", "--r", "2", "--s-set", ""});
    REQUIRE_EQ(closed.code, 0);
    auto doc = out_json(closed);
    CHECK_EQ(doc["num_coeffs"], json::array({1, -1}));
    CHECK_EQ(doc["den_coeffs"], json::array({1, -2}));

    auto neg = out_json(run_cli({"zeta", "--r", "-2", "--s-set", ""}));
    CHECK_EQ(neg["num_coeffs"], json::array({1, 1}));
    CHECK_EQ(neg["den_coeffs"], json::array({1, -2}));

    auto series = run_cli({"zeta", "--r", "2", "--s-set", "2", "--n", "5"});
    REQUIRE_EQ(series.code, 0);
    auto sdoc = out_json(series);
    CHECK_EQ(sdoc["coeffs"],
             json::array({"1", "1", "2", "4", "8", "16"}));

    auto series_csv = run_cli({"zeta", "--r", "2", "--s-set", "2", "--n", "5",
                               "--format", "csv"});
    CHECK_EQ(series_csv.out, "k,coeff\n0,1\n1,1\n2,2\n3,4\n4,8\n5,16\n");
}

TEST_CASE("toral-zeta reports the cat map form")
{
    auto r = run_cli({"toral-zeta", "--matrix", "[[2,1],[1,1]]"});
    REQUIRE_EQ(r.code, 0);
    auto doc = out_json(r);
    CHECK_EQ(doc["num_coeffs"], json::array({1, -2, 1}));
    CHECK_EQ(doc["den_coeffs"], json::array({1, -3, 1}));
}

TEST_CASE("mahler payloads")
{
    auto lehmer = out_json(run_cli({"mahler", "--coeffs", "1,1,0,-1,-1,-1,-1,-1,0,1,1"}));
    CHECK_EQ(lehmer["measure"].get<double>(),
             doctest::Approx(0.1623576).epsilon(1e-4));
    CHECK_FALSE(lehmer["is_cyclotomic_product"].get<bool>());

    auto cyclo = out_json(run_cli({"mahler", "--coeffs", "-1,1"}));
    CHECK_EQ(cyclo["measure"].get<double>(), doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cyclo["is_cyclotomic_product"].get<bool>());

    auto scaled = out_json(run_cli({"mahler", "--coeffs", "-3,2"}));
    CHECK_EQ(scaled["measure"].get<double>(),
             doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK_FALSE(scaled.contains("is_cyclotomic_product"));
}

TEST_CASE("lehmer-scan formats")
{
    auto csv = run_cli({"lehmer-scan", "--max-degree", "2", "--max-height", "1",
                        "--threshold", "0.49"});
    REQUIRE_EQ(csv.code, 0);
    CHECK(csv.out.rfind("polynomial,measure\n-1 -1 1,", 0) == 0);

    auto js = out_json(run_cli({"lehmer-scan", "--max-degree", "2", "--max-height", "1",
                                "--threshold", "0.49", "--format", "json"}));
    REQUIRE_EQ(js["hits"].size(), 1);
    CHECK_EQ(js["hits"][0]["coeffs"], json::array({-1, -1, 1}));
    CHECK_EQ(js["hits"][0]["measure"].get<double>(),
             doctest::Approx(0.4812118).epsilon(1e-6));

    auto empty = out_json(run_cli({"lehmer-scan", "--max-degree", "2", "--max-height", "1",
                                   "--threshold", "0.05", "--format", "json"}));
    CHECK(empty["hits"].empty());
}

TEST_CASE("conjugacy decisions")
{
    std::string pair = "[[3,10],[1,3]];[[3,5],[2,3]]";
    auto over_z = out_json(run_cli({"conjugacy", "--matrices", pair}));
    CHECK_EQ(over_z["status"], "obstructed");
    CHECK_EQ(over_z["modulus"].get<long>(), 5);

    auto over_half = out_json(run_cli({"conjugacy", "--matrices", pair, "--allowed", "2"}));
    CHECK_EQ(over_half["status"], "conjugate");
    CHECK_EQ(over_half["witness"].size(), 2);
    CHECK_EQ(over_half["witness"][0].size(), 2);
    long det = over_half["det"].get<long>();
    CHECK_NE(det, 0);

    auto bad = run_cli({"conjugacy", "--matrices", "[[1,0],[0,1]]"});
    CHECK_EQ(bad.code, 2);
}

TEST_CASE("poset dot output")
{
    auto r = run_cli({"poset", "--matrices", "[[3,10],[1,3]];[[3,5],[2,3]]",
                      "--primes", "2,3,5,7,11"});
    REQUIRE_EQ(r.code, 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("rank=same") != std::string::npos);
    CHECK(r.out.find("Z: {0}") != std::string::npos);
    CHECK(r.out.find("Z: {1}") != std::string::npos);
    CHECK(r.out.find("Z[1/2]: {0,1}") != std::string::npos);
    CHECK(r.out.find("n0_0 -> n1_0") != std::string::npos);
    CHECK(r.out.find("n0_1 -> n1_0") != std::string::npos);

    auto js = out_json(run_cli({"poset", "--matrices", "[[3,10],[1,3]];[[3,5],[2,3]]",
                                "--primes", "2,3", "--format", "json"}));
    REQUIRE_EQ(js["levels"].size(), 4);
    CHECK_EQ(js["levels"][0]["ring"], "Z");
    CHECK_EQ(js["levels"][0]["classes"].size(), 2);
    CHECK_EQ(js["levels"][1]["classes"].size(), 1);
}

TEST_CASE("mertens json summary")
{
    auto doc = out_json(run_cli({"mertens", "--r", "2", "--s-set", "2,3", "--upto",
                                 "20000", "--format", "json"}));
    CHECK_EQ(doc["h"].get<double>(), doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK_EQ(doc["density"], "5/8");
    CHECK_EQ(doc["slope"].get<double>(), doctest::Approx(0.625).epsilon(0.02));
    CHECK_EQ(doc["N"].get<long>(), 20000);
}

TEST_CASE("dirichlet reference column")
{
    auto ref = out_json(run_cli({"dirichlet", "--r", "2", "--s-cofinite", "3,5",
                                 "--s", "3", "--n", "4000", "--format", "json"}));
    REQUIRE_EQ(ref["rows"].size(), 1);
    const auto& row = ref["rows"][0];
    CHECK(!row["reference"].is_null());
    CHECK_EQ(row["partial"].get<double>(),
             doctest::Approx(row["reference"].get<double>()).epsilon(1e-2));

    auto other = out_json(run_cli({"dirichlet", "--r", "2", "--s-cofinite", "3",
                                   "--s", "3", "--n", "1000", "--format", "json"}));
    CHECK(other["rows"][0]["reference"].is_null());

    auto csv = run_cli({"dirichlet", "--r", "2", "--s-cofinite", "3", "--s", "3",
                        "--n", "1000"});
    std::istringstream lines(csv.out);
    std::string header, row1;
    std::getline(lines, header);
    std::getline(lines, row1);
    CHECK_EQ(header, "s,partial,reference,tail_bound");
    CHECK(row1.find(",,") != std::string::npos);
}

TEST_CASE("growth-construct surfaces amendments")
{
    std::string theta;
    for (long n = 2; n <= 12; ++n) {
        if (n > 2) theta += ",";
        theta += solenoid::pow_z(solenoid::ZZ(2), n * n).get_str();
    }
    auto doc = out_json(run_cli({"growth-construct", "--theta", theta}));
    CHECK_EQ(doc["multiplicities"],
             json::array({3, 1, 1, 1, 0, 2, 4, 0, 7, 0, 12}));
    CHECK_EQ(doc["amended_at"], json::array({6, 11}));
    for (const auto& row : doc["rows"]) {
        CHECK(row["sandwich_ok"].get<bool>());
        long n = row["n"].get<long>();
        CHECK_EQ(row["amended"].get<bool>(), n == 6 || n == 11);
        CHECK_EQ(row["sandwich_ok_original"].get<bool>(), !(n == 6 || n == 11));
    }
}

TEST_CASE("boundary-scan grid ordering")
{
    auto r = run_cli({"boundary-scan", "--r", "2", "--s-set", "3", "--radii",
                      "0.3,0.4", "--angles", "0,0.5", "--n", "300"});
    REQUIRE_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK_EQ(line, "radius,angle,re,im,magnitude");
    long rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK_EQ(rows, 4);
    CHECK(r.out.find("\n0.3,0.0,") != std::string::npos);
    CHECK(r.out.find("\n0.4,0.5,") != std::string::npos);
}

TEST_CASE("classify-type canonical forms")
{
    auto one = out_json(run_cli({"classify-type", "--chi", "default=1; 2:0"}));
    CHECK_EQ(one["canonical"], "default=1; 2:0");

    auto two = run_cli({"classify-type", "--chi", "default=1;2:0", "--chi",
                        "default=1;3:0"});
    REQUIRE_EQ(two.code, 0);
    auto doc = out_json(two);
    CHECK(doc["same_type"].get<bool>());

    auto diff = out_json(run_cli({"classify-type", "--chi", "default=0;2:inf", "--chi",
                                  "default=inf"}));
    CHECK_FALSE(diff["same_type"].get<bool>());

    CHECK_EQ(run_cli({"classify-type"}).code, 2);
}

TEST_CASE("pi table")
{
    auto r = run_cli({"pi", "--r", "2", "--s-cofinite", "3", "--upto", "8"});
    REQUIRE_EQ(r.code, 0);
    CHECK_EQ(r.out, "n,pi\n1,1\n2,2\n3,2\n4,2\n5,2\n6,3\n7,3\n8,3\n");
}

} // TEST_SUITE
