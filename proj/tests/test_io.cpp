#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "helpers.hpp"
#include "steklov/errors.hpp"
#include "steklov/io.hpp"

using namespace steklov;
using io::json;
using th::pi;
using th::q;

namespace {

std::string fixture(const std::string& name) { return std::string(STEKLOV_FIXTURES) + "/" + name + ".json"; }

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(STEKLOV_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("fixtures round-trip through parse, compute and serialize") {
  for (const char* name : {"square", "rectangle_1_6", "rhombus", "equilateral", "regular_4", "regular_5",
                           "remark_pair_a", "remark_pair_b"}) {
    CAPTURE(name);
    PolygonData p = io::polygon_from_json(io::read_json_file(fixture(name)));
    CHECK(check_closure(p));
    json pj = io::to_json(p);
    PolygonData back = io::polygon_from_json(json::parse(pj.dump()));
    CHECK(congruent(p, back, 0));
    TrigPoly P = char_poly(p);
    json j = io::to_json(P);
    TrigPoly R = io::poly_from_json(json::parse(j.dump()));
    PolyComparison c = compare_polys(P, R, 0);
    CHECK(c.equal);
    CHECK(io::to_json(R).dump() == j.dump());
  }
}

TEST_CASE("golden polynomials") {
  TrigPoly sq = char_poly(io::polygon_from_json(io::read_json_file(fixture("square"))));
  CHECK(io::to_json(sq).dump() == R"({"terms":[{"freq":"1/2","coef":"4"},{"freq":"1","coef":"1"}],"const":"3"})");
  TrigPoly eq = char_poly(io::polygon_from_json(io::read_json_file(fixture("equilateral"))));
  CHECK(io::to_json(eq).dump() == R"({"terms":[{"freq":"1","coef":"1"}],"const":"1"})");
  CHECK(io::to_csv(sq) == "kind,freq,coef\nterm,1/2,4\nterm,1,1\nconst,0,3\n");
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(R"({"n":3})")), SchemaError);
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(R"({"n":2,"edges":[],"angles":[]})")), SchemaError);
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(
                      R"({"n":1,"edges":[{"len":"x/y"}],"angles":[{"pi_mult":"1/2"}]})")),
                  SchemaError);
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(
                      R"({"n":1,"edges":[{"len":"1"}],"angles":[{"deg":90}]})")),
                  SchemaError);
  CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"terms":[{"freq":1}]})")), SchemaError);
  PolygonData z = io::polygon_from_json(json::parse(R"({"n":0,"edges":[],"angles":[],"perimeter":"1"})"));
  CHECK(z.is_zero_gon());
}

TEST_CASE("floats keep full precision") {
  PolygonData p = make_triangle(pi(1, 3), pi(1, 15), pi(3, 5));
  PolygonData back = io::polygon_from_json(json::parse(io::to_json(p).dump()));
  for (std::size_t i = 0; i < 3; ++i) CHECK(back.length(i).to_double() == p.length(i).to_double());
}

TEST_CASE("cli: charpoly and exit codes") {
  Run r = cli("charpoly " + fixture("square"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"terms":[{"freq":"1/2","coef":"4"},{"freq":"1","coef":"1"}],"const":"3"})"));
  r = cli("charpoly " + fixture("equilateral"));
  CHECK(json::parse(r.out) == json::parse(R"({"terms":[{"freq":"1","coef":"1"}],"const":"1"})"));
  CHECK(cli("charpoly " + fixture("malformed_angle_sum")).code == 3);
  CHECK(cli("charpoly /nonexistent.json").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("reconstruct " + fixture("square") + " --family hexagon").code == 2);
  CHECK(cli("reconstruct " + fixture("square")).code == 2);
}

TEST_CASE("cli: compare, reconstruct, search, roots, smoothcheck") {
  Run r = cli("compare " + fixture("remark_pair_a") + " " + fixture("remark_pair_b") + " --format pretty");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("equal", 0) == 0);
  CHECK(cli("compare " + fixture("square") + " " + fixture("rhombus")).code == 1);

  r = cli("reconstruct " + fixture("regular_5") + " --family regular");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["candidates"][0]["n"] == 5);
  CHECK(cli("reconstruct " + fixture("regular_5") + " --family rectangle").code == 1);

  r = cli("search pentagons --qmax 14");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).size() == 11);
  r = cli("search triangles --qmax 15 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find(",1/15,1/3,3/5,") != std::string::npos);

  r = cli("roots " + fixture("square") + " --T 50 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("index,root,tangential\n0,6.28318530717", 0) == 0);
  CHECK(cli("roots " + fixture("square") + " --T 50 --step 2").code == 2);

  r = cli("smoothcheck " + fixture("regular_5"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passes"] == false);
}

TEST_CASE("cli output is deterministic") {
  for (const std::string& args : std::vector<std::string>{"search triangles --qmax 18", "search quadvseq --indexmax 3",
                                  "charpoly " + fixture("remark_pair_a")}) {
    Run a = cli(args), b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("config file from the environment") {
  std::string path = std::string(STEKLOV_BUILD_DIR) + "/test_config.json";
  std::ofstream(path) << R"({"format": "csv", "q_max": 14})";
  std::string cmd = "STEKLOV_CONFIG=" + path + " " + std::string(STEKLOV_CLI) + " search pentagons > " + path + ".out";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(path + ".out");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("pattern,curved,lengths,lstar_size\n", 0) == 0);
  std::ofstream(path) << R"({"tolerances": {"poly": -1}})";
  cmd = "STEKLOV_CONFIG=" + path + " " + std::string(STEKLOV_CLI) + " search pentagons > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 2);
}
