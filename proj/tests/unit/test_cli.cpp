#include <doctest.h>

#include <sstream>

#include "hodgealg/cli.hpp"
#include "hodgealg/io.hpp"

using namespace hodgealg;

#ifndef HODGEALG_FIXTURES
#error "HODGEALG_FIXTURES must point at the fixtures directory"
#endif

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(HODGEALG_FIXTURES) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("even-rank on the torus fixture with --expect") {
  auto r = cli({"check", "even-rank", "--algebra", fx("torus6"), "--classes", fx("torus6_classes"), "-l", "1",
                "--expect", "obstructed"});
  CHECK(r.code == 0);
  CHECK(r.out.find("OBSTRUCTED") != std::string::npos);
  auto w = cli({"check", "even-rank", "--algebra", fx("torus6"), "--classes", fx("torus6_classes"), "-l", "1",
                "--expect", "clear"});
  CHECK(w.code == 1);
}

TEST_CASE("lefschetz and hr-check on the torus") {
  auto l = cli({"check", "lefschetz", "--algebra", fx("torus6"), "--omega", fx("torus6_omega"), "--json"});
  REQUIRE(l.code == 0);
  auto j = Json::parse(l.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["certificates"]["primitive_dims"] == Json::parse("[1,6,14,14]"));
  auto h = cli({"check", "hr-check", "--algebra", fx("torus6"), "--omega", fx("torus6_omega"), "--hodge",
                fx("torus_hodge"), "--json"});
  REQUIRE(h.code == 0);
  CHECK(Json::parse(h.out)["verdict"] == "POLARIZED");
}

TEST_CASE("validate exit codes") {
  CHECK(cli({"validate", fx("torus6")}).code == 0);
  auto b = cli({"validate", fx("broken_duality"), "--json"});
  CHECK(b.code == 0);
  CHECK(Json::parse(b.out)["verdict"] == "FAIL");
  CHECK(cli({"validate", fx("no_such_file")}).code == 2);
  CHECK(cli({"validate", fx("torus6"), "--expect", "fail"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli({"check", "bogus"}).code == 2);
  CHECK(cli({"check", "even-rank", "--algebra", fx("torus6")}).code == 2);
  CHECK(cli({"gallery", "nope"}).code == 2);
  CHECK(cli({"gallery", "torus-rank11", "--params", "x=1"}).code == 2);
  CHECK(cli({"--no-such-flag"}).code == 2);
  CHECK(cli({"check", "lefschetz", "--algebra", fx("torus6"), "--omega", fx("torus6_omega"), "--cap", "3"}).code == 2);
  CHECK(cli({"--dump-spec", "nope"}).code == 2);
}

TEST_CASE("gallery through the CLI") {
  auto r = cli({"gallery", "torus-rank11", "--json", "--expect", "obstructed"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["certificates"]["rank"] == 11);
  auto s = cli({"gallery", "fibered-projector", "--skip-heavy", "--json", "--expect", "clear"});
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["certificates"]["P_wedge_P"] == "SKIPPED");
  auto p = cli({"gallery", "blowup-rangpair", "--params", "N=4,eps=2", "--json", "--expect", "obstructed"});
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["parameters"]["N"] == "4");
}

TEST_CASE("dump-spec output matches the shipped fixture files") {
  auto list = cli({"--list-specs"});
  REQUIRE(list.code == 0);
  std::istringstream names(list.out);
  std::string name;
  std::size_t n = 0;
  while (std::getline(names, name)) {
    auto d = cli({"--dump-spec", name});
    REQUIRE(d.code == 0);
    CHECK_MESSAGE(Json::parse(d.out) == read_json_file(fx(name)), name);
    ++n;
  }
  CHECK(n > 10);
}
