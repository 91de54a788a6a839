#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/json_io.hpp"
#include "cli/render.hpp"
#include "mtile/errors.hpp"
#include "support/generators.hpp"

using namespace mtile;
using namespace mtile::cli;

namespace {

const std::string kData = MTILE_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mtile_cli_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("decide exit codes") {
  Result r = invoke({"decide", data("square.json")});
  CHECK(r.code == kTilesOrPass);
  Json j = Json::parse(r.out);
  CHECK(j["tiles"] == true);
  CHECK(j["level"] == 1);

  r = invoke({"decide", data("rational_octagon.json")});
  CHECK(r.code == kTilesOrPass);
  CHECK(Json::parse(r.out)["level"] == 7);

  r = invoke({"decide", data("regular_octagon.json")});
  CHECK(r.code == kDoesNotTile);
  j = Json::parse(r.out);
  CHECK(j["tiles"] == false);
  CHECK(j["class"].is_null());
  CHECK(j["rejections"].size() >= 4);

  r = invoke({"decide", data("broken.json")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("OddVertexCount") != std::string::npos);

  r = invoke({"decide", data("malformed.json")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(invoke({"decide", data("does_not_exist.json")}).code == kInvalidInput);
  CHECK(invoke({"decide"}).code == kInvalidInput);
  CHECK(invoke({}).code == kInvalidInput);
  CHECK(invoke({"bogus"}).code == kInvalidInput);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("diagnostics name the offending field") {
  Result r = invoke({"decide", write_temp("badlit.json", R"({"vertices": [["0","0"], ["1.5","0"]]})")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.rfind("vertices[1][0]:", 0) == 0);

  r = invoke({"decide", write_temp("badfield.json",
                                   R"({"field": {"degree": 2, "minpoly": ["-2","0","1"], "root_interval": ["2","3"]},
                                       "vertices": []})")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.rfind("field:", 0) == 0);

  r = invoke({"decide", write_temp("badelem.json",
                                   R"({"field": {"degree": 2, "minpoly": ["-2","0","1"], "root_interval": ["1","2"]},
                                       "vertices": [[["1","2","3"], "0"]]})")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.rfind("vertices[0][0]:", 0) == 0);

  r = invoke({"decide", write_temp("novertices.json", R"({"lattice": [["1","0"],["0","1"]]})")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.rfind("vertices: missing", 0) == 0);

  r = invoke({"decide", write_temp("reducible.json",
                                   R"({"field": {"degree": 2, "minpoly": ["-4","0","1"], "root_interval": ["1","3"]},
                                       "vertices": []})")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("reducible") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  Result r = invoke({"verify", data("rational_octagon.json")});
  CHECK(r.code == kTilesOrPass);
  Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["samples"] == 1000);
  CHECK(j["seed"] == 0);

  r = invoke({"verify", data("square_wrong_level.json"), "--samples", "10", "--seed", "4"});
  CHECK(r.code == kVerificationFailure);
  j = Json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["first_mismatch"] == 0);
  CHECK(j["seed"] == 4);

  // No lattice: the decided witness is verified.
  r = invoke({"verify", data("hexagon.json"), "--samples", "50"});
  CHECK(r.code == kTilesOrPass);

  // Lattice given, level omitted and not integral (area 1, covolume 2).
  r = invoke({"verify", write_temp("half.json", R"({"vertices": [["0","0"],["1","0"],["1","1"],["0","1"]],
                                                    "lattice": [["2","0"],["0","1"]]})")});
  CHECK(r.code == kVerificationFailure);

  CHECK(invoke({"verify", data("regular_octagon.json")}).code == kDoesNotTile);
  CHECK(invoke({"verify", data("broken.json")}).code == kInvalidInput);
  CHECK(invoke({"verify", data("square.json"), "--samples", "x"}).code == kInvalidInput);
}

TEST_CASE("select exit codes") {
  Result r = invoke({"select", data("select_hexagon.json")});
  CHECK(r.code == kTilesOrPass);
  Json j = Json::parse(r.out);
  CHECK(j["J"] == Json::array());
  CHECK(j["certificate"]["coefficients"].size() == 3);

  r = invoke({"select", data("select_irrational.json")});
  CHECK(r.code == kDoesNotTile);
  CHECK(Json::parse(r.out)["J"] == "none");

  r = invoke({"select", write_temp("parallel.json", R"({"e": [["1","0"],["2","0"]], "tau": [["1","0"],["0","1"]]})")});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.rfind("e/tau:", 0) == 0);
  CHECK(invoke({"select", data("square.json")}).code == kInvalidInput);
}

TEST_CASE("subgroup exit codes") {
  Result r = invoke({"subgroup", data("subgroup_lattice.json")});
  CHECK(r.code == kTilesOrPass);
  CHECK(Json::parse(r.out)["rank"] == 2);
  r = invoke({"subgroup", data("subgroup_dense.json")});
  CHECK(r.code == kDoesNotTile);
  CHECK(Json::parse(r.out)["discrete"] == false);
  CHECK(invoke({"subgroup", data("square.json")}).code == kInvalidInput);
}

TEST_CASE("render") {
  Result r = invoke({"render", data("square_z2.json"), "--window=-2,-2,2,2"});
  CHECK(r.code == kTilesOrPass);
  const auto g0 = r.out.find("<g "), g1 = r.out.find("</g>");
  REQUIRE(g0 != std::string::npos);
  CHECK(count(r.out.substr(g0, g1 - g0), "<polygon") == 25);

  r = invoke({"render", data("square.json")});
  CHECK(r.code == kTilesOrPass);
  CHECK(r.out.find("<g ") == std::string::npos);
  CHECK(count(r.out, "marker-end") == 4);  // e_1, e_2, tau_1, tau_2

  r = invoke({"render", data("hexagon.json"), "--witness"});
  CHECK(r.code == kTilesOrPass);
  CHECK(r.out == slurp(data("hexagon_witness.svg")));
  CHECK(invoke({"render", data("hexagon.json"), "--witness"}).out == r.out);

  CHECK(invoke({"render", data("regular_octagon.json"), "--witness"}).code == kDoesNotTile);
  CHECK(invoke({"render", data("square.json"), "--window", "1,2"}).code == kInvalidInput);
  CHECK(invoke({"render", data("square.json"), "--window", "1,1,0,2"}).code == kInvalidInput);
  CHECK(invoke({"render", data("broken.json")}).code == kInvalidInput);

  const std::string out = (std::filesystem::temp_directory_path() / "mtile_cli_out.svg").string();
  r = invoke({"render", data("square_z2.json"), "--out", out});
  CHECK(r.code == kTilesOrPass);
  CHECK(r.out.empty());
  CHECK(slurp(out).rfind("<?xml", 0) == 0);
}

TEST_CASE("fixed six-decimal formatting and windows") {
  CHECK(fixed6(Rational(1, 3)) == "0.333333");
  CHECK(fixed6(Rational(2, 3)) == "0.666667");
  CHECK(fixed6(Rational(-1, 2)) == "-0.500000");
  CHECK(fixed6(Rational(-1, 10000000)) == "0.000000");
  CHECK(fixed6(Rational(12345)) == "12345.000000");
  const Window w = parse_window("-2.5,-1/2,3,.25");
  CHECK(w.xmin == Rational(-5, 2));
  CHECK(w.ymin == Rational(-1, 2));
  CHECK(w.ymax == Rational(1, 4));
  CHECK_THROWS_AS(parse_window("a,b,c,d"), ParseError);
}

TEST_CASE("JSON reports re-parse into the objects that produced them") {
  using namespace mtile::testing;
  Gen gen(8);
  const Field f = sqrt2_field();
  CHECK(parse_field(to_json(f), "field")->same_as(*f));
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = static_cast<std::size_t>(gen.between(2, 5));
    const Polygon p = random_polygon(gen, f, n, Style::Mixed);
    const Verdict v = decide(p);
    const Json j = to_json(v);
    const Verdict back = parse_verdict(Json::parse(j.dump()), f);
    CHECK(back.tiles == v.tiles);
    CHECK(back.J == v.J);
    CHECK(back.level == v.level);
    CHECK(back.pairs.size() == v.pairs.size());
    CHECK(back.rejections.size() == v.rejections.size());
    if (v.lattice) {
      CHECK(back.lattice->b1() == v.lattice->b1());
      CHECK(back.lattice->b2() == v.lattice->b2());
    }
    CHECK(to_json(back) == j);

    const PlanarVector vtx = p.vertex(0);
    CHECK(parse_vector(to_json(vtx), f, "v") == vtx);

    std::vector<PlanarVector> gens = edge_pairs(p).tau;
    gens.push_back(p.edge(1));
    const DiscretenessResult d = is_discrete(gens);
    const Json dj = to_json(d);
    CHECK(to_json(parse_discreteness(Json::parse(dj.dump()), f)) == dj);

    if (v.tiles) {
      const MultiplicityReport r = sample_verify(p, *v.lattice, v.level, 10, 5);
      const Json rj = to_json(r);
      const MultiplicityReport rb = parse_report(Json::parse(rj.dump()));
      CHECK(rb.multiplicities == r.multiplicities);
      CHECK(to_json(rb) == rj);
    }
  }
}
