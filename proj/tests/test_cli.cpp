#include <doctest.h>

#include <fstream>
#include <sstream>

#include "omf/cli.hpp"
#include "omf/polyparse.hpp"
#include "schema_check.hpp"
#include "test_util.hpp"

using namespace omf;
using omftest::Rng;

namespace {

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    out = o.str();
    err = e.str();
    return code;
}

nlohmann::json load_schema() {
    std::ifstream in(std::string(OMF_SOURCE_ROOT) + "/docs/report.schema.json");
    REQUIRE(static_cast<bool>(in));
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("parse_poly") {
    CHECK(parse_poly("x^4+4*x^2+8*x+4") == IntPoly{4, 8, 4, 0, 1});
    CHECK(parse_poly("[4,8,4,0,1]") == IntPoly{4, 8, 4, 0, 1});
    CHECK(parse_poly("x^2-2") == IntPoly{-2, 0, 1});
    CHECK(parse_poly("(x+1)*(x+2)-2") == IntPoly{0, 3, 1});
    CHECK(parse_poly(" - x + 1 ") == IntPoly{1, -1});
    CHECK(parse_poly("[ ]").is_zero());
    CHECK_THROWS_AS((void)parse_poly("x^4 + "), om_error);
    CHECK_THROWS_AS((void)parse_poly("x*y"), om_error);
    CHECK_THROWS_WITH_AS((void)parse_poly("t^2"), doctest::Contains("NotUnivariate"), om_error);
}

TEST_CASE("parse/render round trip") {
    Rng rng(444);
    for (int it = 0; it < 300; ++it) {
        IntPoly P = omftest::random_poly(rng, 7, 1000);
        CHECK(parse_poly(render_poly(P)) == P);
    }
    CHECK(parse_poly(render_poly(IntPoly::zero())).is_zero());
}

TEST_CASE("factor subcommand, json output validates against the schema") {
    std::string out, err;
    int code = run({"factor", "-p", "2", "-f", "x^4+4*x^2+8*x+4", "--json"}, out, err);
    REQUIRE(code == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["schema"] == "om-factor/1");
    REQUIRE(doc["factors"].size() == 1);
    CHECK(doc["factors"][0]["e"] == "4");
    CHECK(doc["factors"][0]["f"] == "1");
    CHECK(doc["ind_total"] == "3");

    auto schema = load_schema();
    std::vector<std::string> errors;
    omftest::validate_against_schema(doc, schema, "$", errors);
    for (const auto& e : errors) MESSAGE(e);
    CHECK(errors.empty());

    // every golden case validates
    for (const char* poly : {"x^4+8*x^2+8*x+4", "x^4+4*x^2+8*x+28", "x^4+4*x^2+8*x+12"}) {
        code = run({"factor", "-p", "2", "-f", poly, "--json"}, out, err);
        REQUIRE(code == 0);
        errors.clear();
        omftest::validate_against_schema(nlohmann::json::parse(out), schema, "$", errors);
        CHECK(errors.empty());
    }
}

TEST_CASE("factor subcommand text and squarefree flag") {
    std::string out, err;
    int code = run({"factor", "-p", "2", "-f", "(x^2-2)*(x^2-2)*(x+1)", "--squarefree"}, out, err);
    REQUIRE(code == 0);
    CHECK(out.find("2 p-adic irreducible factors") != std::string::npos);
}

TEST_CASE("resultant subcommand") {
    std::string out, err;
    int code = run({"resultant", "-p", "2", "-f", "x+2", "-g", "x+6"}, out, err);
    REQUIRE(code == 0);
    CHECK(out.find("Res(P,Q) = 4") != std::string::npos);
    CHECK(out.find("v_2(Res) = 2") != std::string::npos);
    CHECK(out.find("Res_1 = 1 Res_2 = 1") != std::string::npos);
}

TEST_CASE("polygon subcommand") {
    std::string out, err;
    int code = run({"polygon", "-p", "2", "-f", "x^4+4*x^2+8*x+4", "--ascii"}, out, err);
    REQUIRE(code == 0);
    CHECK(out.find("slope -1/2") != std::string::npos);
    CHECK(out.find("(0,2)") != std::string::npos);
    CHECK(out.find("(4,0)") != std::string::npos);

    code = run({"polygon", "-p", "2", "-f", "x^4+4*x^2+8*x+4", "--type", "x:-1/2:y+1"}, out, err);
    REQUIRE(code == 0);
    CHECK(out.find("order 2 polygon") != std::string::npos);

    // a two-level spec pins phi_2 explicitly and renders the order-3 polygon
    code = run({"polygon", "-p", "2", "-f", "x^4+4*x^2+8*x+12", "--type",
                "x:-1/2:y+1;x^2-2:-1:y+1"},
               out, err);
    REQUIRE(code == 0);
    CHECK(out.find("order 3 polygon") != std::string::npos);
    CHECK(run({"polygon", "-p", "2", "-f", "x^2+1", "--type", "x:nonsense:y+1"}, out, err) == 1);

    std::string svg_path = "test_polygon_out.svg";
    code = run({"polygon", "-p", "2", "-f", "x^4+4*x^2+8*x+4", "--svg", svg_path}, out, err);
    REQUIRE(code == 0);
    std::ifstream in(svg_path);
    REQUIRE(static_cast<bool>(in));
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("<svg") != std::string::npos);
}

TEST_CASE("index subcommand") {
    std::string out, err;
    int code = run({"index", "-p", "2", "-f", "x^4+4*x^2+8*x+28"}, out, err);
    REQUIRE(code == 0);
    CHECK(out.find("ind(f) = 4") != std::string::npos);
    CHECK(out.find("ind_3(f) = 1") != std::string::npos);
}

TEST_CASE("reports are byte-stable across runs") {
    std::string out1, out2, err;
    REQUIRE(run({"factor", "-p", "2", "-f", "x^6+10*x^4+4*x^3+12*x^2+16", "--json"}, out1, err) == 0);
    REQUIRE(run({"factor", "-p", "2", "-f", "x^6+10*x^4+4*x^3+12*x^2+16", "--json"}, out2, err) == 0);
    auto strip_timings = [](std::string s) {
        auto d = nlohmann::json::parse(s);
        d.erase("timings");
        return d.dump();
    };
    CHECK(strip_timings(out1) == strip_timings(out2));
}

TEST_CASE("help exits cleanly") {
    std::string out, err;
    CHECK(run({"--help"}, out, err) == 0);
    CHECK(out.find("factor") != std::string::npos);
}

TEST_CASE("exit codes") {
    std::string out, err;
    CHECK(run({"factor", "-p", "15", "-f", "x+1"}, out, err) == 1);
    CHECK(err.find("NotPrime") != std::string::npos);
    CHECK(run({"factor", "-p", "2", "-f", "2*x+1"}, out, err) == 1);
    CHECK(err.find("NotMonic") != std::string::npos);
    CHECK(run({"factor", "-p", "2", "-f", "x^2+4*x+"}, out, err) == 1);
    CHECK(run({"nonsense"}, out, err) == 1);
    CHECK(run({"factor", "-p", "2", "-f", "(x+1)*(x+1)"}, out, err) == 1);
    CHECK(err.find("NotSeparable") != std::string::npos);
}

TEST_CASE("trace flag routes diagnostics to stderr") {
    std::string out, err;
    int code = run({"factor", "-p", "2", "-f", "x^4+4*x^2+8*x+4", "--trace"}, out, err);
    REQUIRE(code == 0);
    CHECK(err.find("[order 1]") != std::string::npos);
}
