#include "cli/app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/json_io.hpp"
#include "cli/render.hpp"
#include "mtile/errors.hpp"

namespace mtile::cli {

namespace {

struct Options {
  std::string file;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string window;
  bool witness = false;
};

// An input problem the command cannot use; printed as "field: message".
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw InputError("--out: cannot write " + opt.out);
  f << text;
}

void emit_json(const Json& j, const Options& opt, std::ostream& out) { emit(j.dump(2) + "\n", opt, out); }

template <class T>
const T& require(const std::optional<T>& v, const char* key) {
  if (!v) throw InputError(std::string(key) + ": missing");
  return *v;
}

Polygon load_polygon(const ProblemFile& p) {
  try {
    return validate_polygon(require(p.vertices, "vertices"));
  } catch (const PolygonError& e) {
    throw InputError(std::string("vertices: ") + e.what());
  }
}

int cmd_decide(const Options& opt, std::ostream& out) {
  const ProblemFile p = parse_problem(read_input(opt.file));
  const Polygon poly = load_polygon(p);
  const Verdict v = decide(poly);
  emit_json(to_json(v), opt, out);
  return v.tiles ? kTilesOrPass : kDoesNotTile;
}

int cmd_verify(const Options& opt, bool samples_set, bool seed_set, std::ostream& out,
               std::ostream& err) {
  const ProblemFile p = parse_problem(read_input(opt.file));
  const Polygon poly = load_polygon(p);
  std::optional<LatticeBasis> lattice = p.lattice;
  if (!lattice) {
    const Verdict v = decide(poly);
    if (!v.tiles) {
      err << "verify: no lattice given and the polygon does not tile\n";
      emit_json(to_json(v), opt, out);
      return kDoesNotTile;
    }
    lattice = v.lattice;
  }

  Integer k;
  if (p.level) {
    k = *p.level;
  } else {
    const FieldElement q = area(poly) / covolume(*lattice);
    if (!q.is_rational() || !is_integer(q.to_rational()) || sgn(q.to_rational()) <= 0) {
      err << "verify: area / covolume is not a positive integer\n";
      return kVerificationFailure;
    }
    k = q.to_rational().get_num();
  }
  const std::size_t n = samples_set ? opt.samples : p.samples.value_or(opt.samples);
  const std::uint64_t seed = seed_set ? opt.seed : p.seed.value_or(opt.seed);
  const MultiplicityReport r = sample_verify(poly, *lattice, k, n, seed);
  emit_json(to_json(r), opt, out);
  return r.pass ? kTilesOrPass : kVerificationFailure;
}

int cmd_select(const Options& opt, std::ostream& out) {
  const ProblemFile p = parse_problem(read_input(opt.file));
  std::optional<SelectorInstance> inst;
  try {
    inst.emplace(require(p.e, "e"), require(p.tau, "tau"));
  } catch (const SpecificationError& e) {
    throw InputError(std::string("e/tau: ") + e.what());
  }
  const auto s = select_j(*inst);
  emit_json(to_json(s, *inst), opt, out);
  return s ? kTilesOrPass : kDoesNotTile;
}

int cmd_subgroup(const Options& opt, std::ostream& out) {
  const ProblemFile p = parse_problem(read_input(opt.file));
  const DiscretenessResult r = is_discrete(require(p.vectors, "vectors"));
  emit_json(to_json(r), opt, out);
  return r.discrete() ? kTilesOrPass : kDoesNotTile;
}

int cmd_render(const Options& opt, std::ostream& out, std::ostream& err) {
  const ProblemFile p = parse_problem(read_input(opt.file));
  const Polygon poly = load_polygon(p);
  std::optional<LatticeBasis> lattice = p.lattice;
  if (opt.witness && !lattice) {
    const Verdict v = decide(poly);
    if (!v.tiles) {
      err << "render: --witness requested but the polygon does not tile\n";
      return kDoesNotTile;
    }
    lattice = v.lattice;
  }
  const Window w = opt.window.empty() ? default_window(poly) : parse_window(opt.window);
  emit(render_svg(poly, lattice, w), opt, out);
  return kTilesOrPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide multiple lattice tilings of centrally symmetric convex polygons", "mtile"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "problem file (JSON), - for stdin")->required();
    sub->add_option("--out", opt.out, "write the report here instead of stdout");
  };
  CLI::App* decide_cmd = app.add_subcommand("decide", "decide whether the polygon multi-tiles");
  CLI::App* verify_cmd = app.add_subcommand("verify", "sample covering multiplicities against a lattice");
  CLI::App* select_cmd = app.add_subcommand("select", "find J for an e/tau instance");
  CLI::App* subgroup_cmd = app.add_subcommand("subgroup", "test whether vectors generate a discrete group");
  CLI::App* render_cmd = app.add_subcommand("render", "draw the polygon or its lattice translates as SVG");
  for (CLI::App* sub : {decide_cmd, verify_cmd, select_cmd, subgroup_cmd, render_cmd}) add_common(sub);
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", opt.seed, "sampler seed")->capture_default_str();
  CLI::Option* samples_opt =
      verify_cmd->add_option("--samples", opt.samples, "number of sample points")->capture_default_str();
  render_cmd->add_option("--window", opt.window, "xmin,ymin,xmax,ymax (default: 3x the bounding box)");
  render_cmd->add_flag("--witness", opt.witness, "without a lattice in the file, draw the decided witness");

  std::vector<const char*> argv{"mtile"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*decide_cmd) return cmd_decide(opt, out);
    if (*verify_cmd) return cmd_verify(opt, samples_opt->count() > 0, seed_opt->count() > 0, out, err);
    if (*select_cmd) return cmd_select(opt, out);
    if (*subgroup_cmd) return cmd_subgroup(opt, out);
    if (*render_cmd) return cmd_render(opt, out, err);
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {  // InputError, ParseError, SpecificationError
    err << e.what() << "\n";
    return kInvalidInput;
  } catch (const ReducibleMinpoly& e) {
    err << "field: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DivisionByZero& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace mtile::cli
