#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "helpers.hpp"
#include "uslev/cli.hpp"
#include "uslev/io.hpp"

using namespace uslev;

namespace {

const std::string kData = USLEV_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

io::Json parsed(const Run& r) { return io::Json::parse(r.out); }

}  // namespace

TEST_CASE("set files") {
  const SetExpr o = io::read_set_file(kData + "/orthant.json");
  CHECK(o.dim() == 2);
  CHECK(contains(o, V({1, 2})));
  CHECK_FALSE(contains(o, V({-1, 2})));
  const SetExpr s = io::read_set_file(kData + "/shifted_cone.json");
  CHECK(contains(s, V({4, 4})));
  CHECK(contains(s, V({3, 0})));
  CHECK_FALSE(contains(s, V({5, 0})));
  CHECK(io::set_to_json(s) == io::Json::parse(R"({"kind":"shift","offset":[4.0,4.0],"base":{"kind":"negate","base":{"kind":"orthant","dim":2,"sign":"nonneg"}}})"));
  CHECK_THROWS_WITH_AS(io::read_set_file(kData + "/mismatch.json"), doctest::Contains("/offsets"), InputError);
  CHECK_THROWS_AS(io::set_from_json(io::Json::parse(R"({"kind":"ball"})")), InputError);
  CHECK_THROWS_AS(io::read_set_file(kData + "/missing.json"), InputError);
}

TEST_CASE("vectors and point files") {
  CHECK(io::parse_vector("1,-2.5") == V({1, -2.5}));
  CHECK_THROWS_AS(io::parse_vector("1,,2"), InputError);
  CHECK_THROWS_AS(io::parse_vector("a"), InputError);
  const PointCloud f = io::read_points_file(kData + "/F.csv");
  CHECK(f.size() == 4);
  CHECK(f[3] == V({2, 2}));
  CHECK(io::parse_points_csv("1,2\n\n3,4\n").size() == 2);
  CHECK_THROWS_AS(io::parse_points_csv("1,2\n3\n"), InputError);
  CHECK_THROWS_AS(io::parse_points_csv("x,y\n"), InputError);
}

TEST_CASE("extended value encoding") {
  CHECK(io::to_json(ExtScalar::nu()) == "nu");
  CHECK(io::to_json(ExtScalar::neg_inf()) == "-inf");
  CHECK(io::to_json(ExtScalar::real(0.5)) == 0.5);
  CHECK(io::round12(0.1 + 0.2) == 0.3);
  CHECK(io::dump(io::Json{{"b", 1}, {"a", 0.30000000000000004}}) == "{\"a\":0.3,\"b\":1}\n");
}

TEST_CASE("phi and norm commands") {
  Run r = run({"phi", "--set", kData + "/nonpos_orthant.json", "--k", "1,1", "--point", "-1,-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"class\":\"real\",\"phi\":-1.0}\n");
  r = run({"phi", "--set", kData + "/hyperbola.json", "--k", "-1,0", "--point", "0,2", "--oracle"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["phi"].get<double>() == doctest::Approx(0.5));
  r = run({"phi", "--set", kData + "/hyperbola.json", "--k", "0,-1", "--point", "0,2", "--oracle"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not monotone") != std::string::npos);
  r = run({"phi", "--set", kData + "/nonpos_orthant.json", "--k", "1,1", "--dump-grid", "-1,1,-1,1,3"});
  CHECK(r.code == 0);
  r = run({"norm", "--cone", kData + "/orthant.json", "--k", "1,1", "--point", "1,-2"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["norm"].get<double>() == 2.0);
}

TEST_CASE("filter and driver commands") {
  const std::string f = kData + "/F.csv", d = kData + "/orthant.json";
  Run r = run({"eff", "--points", f, "--set", d});
  CHECK(r.code == 0);
  CHECK(parsed(r)["indices"] == io::Json::parse("[0,1,2]"));
  r = run({"min", "--points", f, "--set", d});
  CHECK(parsed(r)["indices"] == io::Json::parse("[0,1,2]"));
  r = run({"characterize", "--points", f, "--set", d, "--k", "1,1", "--weak"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["seed"] == 42);
  r = run({"scalarize", "--points", f, "--set", d, "--ref", "4,4", "--k", "1,1", "--dom", d});
  CHECK(r.code == 0);
  CHECK(parsed(r)["argmin"] == io::Json::parse("[1]"));
  r = run({"bound", "--points", f, "--set", d, "--ref", "4,4", "--orientation", "below"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["weakly_efficient"] == io::Json::parse("[0,1,2]"));
  r = run({"bound", "--points", f, "--set", d, "--ref", "3,3", "--orientation", "below"});
  CHECK(r.code == 1);
  r = run({"separate", "--set", kData + "/nonpos_orthant.json", "--k", "1,1", "--points", kData + "/D.csv"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["verdict"] == "disjoint");
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"phi", "--set", kData + "/mismatch.json", "--k", "1,1", "--point", "0,0"}).code == 2);
  CHECK(run({"phi", "--set", kData + "/orthant.json", "--k", "1,1,1", "--point", "0,0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eff", "--points", kData + "/F.csv", "--set", kData + "/orthant.json", "--bogus"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"characterize", "--points", kData + "/F.csv", "--set",
                                      kData + "/orthant.json", "--k", "1,1", "--seed", "7"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const std::vector<std::string> chk{"check", "--suite", "all", "--seed", "3", "--size", "50"};
  const Run c = run(chk), d = run(chk);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("check command") {
  Run r = run({"check", "--suite", "phi", "--size", "0"});
  CHECK(r.code == 0);
  CHECK_FALSE(parsed(r)["warnings"].empty());
  r = run({"check", "--suite", "phi", "--size", "100", "--inject-fault", "phi-sign"});
  CHECK(r.code == 1);
  CHECK(r.out.find("translation") != std::string::npos);
  CHECK(run({"check", "--suite", "nope"}).code == 2);
}

TEST_CASE("tolerance from the environment") {
  setenv("USLEV_TOL", "1e-6", 1);
  const Run r = run({"phi", "--set", kData + "/nonpos_orthant.json", "--k", "1,1", "--point", "-2,0"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["phi"] == 0.0);
  setenv("USLEV_TOL", "abc", 1);
  CHECK(run({"phi", "--set", kData + "/nonpos_orthant.json", "--k", "1,1", "--point", "-2,0"}).code == 2);
  unsetenv("USLEV_TOL");
}
