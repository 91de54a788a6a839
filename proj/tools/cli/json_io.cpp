#include "cli/json_io.hpp"

#include "mtile/errors.hpp"

namespace mtile::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const char* key) {
  auto it = j.find(key);
  return (it == j.end() || it->is_null()) ? nullptr : &*it;
}

const Json& array_of(const Json& j, const std::string& path, std::size_t expected = 0) {
  if (!j.is_array()) fail(path, "expected an array");
  if (expected && j.size() != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

std::uint64_t parse_count(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  fail(path, "expected a nonnegative integer");
}

}  // namespace

// ---------------------------------------------------------------------------
// Encoding

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Json to_json(const Field& field) {
  Json poly = Json::array();
  for (const auto& c : field->minpoly()) poly.push_back(to_json(c));
  return Json{{"degree", field->degree()},
              {"minpoly", std::move(poly)},
              {"root_interval", Json::array({to_json(field->root_interval().lo),
                                             to_json(field->root_interval().hi)})}};
}

Json to_json(const FieldElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const PlanarVector& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Json to_json(const std::vector<PlanarVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const LatticeBasis& l) { return Json::array({to_json(l.b1()), to_json(l.b2())}); }

Json to_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t j : s) out.push_back(j);
  return out;
}

Json to_json(const Verdict& v) {
  Json pairs = Json::array();
  for (const auto& p : v.pairs) {
    pairs.push_back({{"j", p.j}, {"status", to_string(p.status)}, {"t", p.t ? to_json(*p.t) : Json()}});
  }
  Json rejections = Json::array();
  for (const auto& r : v.rejections) {
    rejections.push_back(
        {{"stage", to_string(r.stage)}, {"candidate", to_json(r.candidate)}, {"reason", r.reason}});
  }
  return Json{{"tiles", v.tiles},
              {"class", v.tiling_class ? Json(to_string(*v.tiling_class)) : Json()},
              {"J", to_json(v.J)},
              {"lattice", v.lattice ? to_json(*v.lattice) : Json()},
              {"base_lattice", v.base_lattice ? to_json(*v.base_lattice) : Json()},
              {"level", v.tiles ? to_json(v.level) : Json()},
              {"pairs", std::move(pairs)},
              {"rejections", std::move(rejections)}};
}

Json to_json(const MultiplicityReport& r) {
  Json mults = Json::array();
  for (const auto& m : r.multiplicities) mults.push_back(to_json(m));
  return Json{{"pass", r.pass},
              {"samples", r.samples},
              {"expected_level", to_json(r.expected_level)},
              {"seed", r.seed},
              {"boundary_resamples", r.boundary_resamples},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json()},
              {"multiplicities", std::move(mults)}};
}

Json to_json(const DiscretenessResult& r) {
  return Json{{"discrete", r.discrete()},
              {"rank", r.rank},
              {"basis", r.basis ? to_json(*r.basis) : Json()},
              {"generator", r.generator ? to_json(*r.generator) : Json()},
              {"witness", r.witness ? to_json(*r.witness) : Json()}};
}

Json to_json(const std::optional<Selection>& s, const SelectorInstance& inst) {
  if (!s) return Json{{"J", "none"}, {"certificate", Json()}};
  Json cert = to_json(s->certificate);
  Json coeffs = Json::array();
  if (s->certificate.basis) {
    for (const auto& g : mixed_generators(inst, s->J)) {
      const auto c = rational_coords(g, *s->certificate.basis);
      if (!c) throw InternalError("select certificate: generator not rational in its basis");
      coeffs.push_back(Json::array({to_json(c->first), to_json(c->second)}));
    }
  }
  cert["coefficients"] = std::move(coeffs);
  return Json{{"J", to_json(s->J)}, {"certificate", std::move(cert)}};
}

// ---------------------------------------------------------------------------
// Decoding

Rational parse_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>()), 10));
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return mtile::parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Integer parse_integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
  const Rational q = parse_rational(j, path);
  if (!is_integer(q)) fail(path, "expected an integer");
  return q.get_num();
}

Field parse_field(const Json& j, const std::string& path) {
  const Json& poly = array_of(member(j, "minpoly", path), dot(path, "minpoly"));
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    coeffs.push_back(parse_rational(poly[i], at(dot(path, "minpoly"), i)));
  }
  if (const Json* d = optional_member(j, "degree")) {
    if (!d->is_number_integer() || d->get<std::int64_t>() + 1 != static_cast<std::int64_t>(coeffs.size())) {
      fail(dot(path, "degree"), "does not match the length of minpoly");
    }
  }
  const std::string ipath = dot(path, "root_interval");
  const Json& iv = array_of(member(j, "root_interval", path), ipath, 2);
  try {
    return FieldSpec::make(std::move(coeffs), parse_rational(iv[0], at(ipath, 0)),
                           parse_rational(iv[1], at(ipath, 1)));
  } catch (const SpecificationError& e) {
    fail(path, e.what());
  } catch (const ReducibleMinpoly& e) {
    fail(path, e.what());
  }
}

FieldElement parse_element(const Json& j, const Field& f, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return FieldElement(f, parse_rational(j, path));
  const Json& arr = array_of(j, path, static_cast<std::size_t>(f->degree()));
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < arr.size(); ++i) coords.push_back(parse_rational(arr[i], at(path, i)));
  return FieldElement(f, std::move(coords));
}

PlanarVector parse_vector(const Json& j, const Field& f, const std::string& path) {
  const Json& arr = array_of(j, path, 2);
  return {parse_element(arr[0], f, at(path, 0)), parse_element(arr[1], f, at(path, 1))};
}

std::vector<PlanarVector> parse_vectors(const Json& j, const Field& f, const std::string& path) {
  const Json& arr = array_of(j, path);
  std::vector<PlanarVector> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_vector(arr[i], f, at(path, i)));
  return out;
}

LatticeBasis parse_lattice(const Json& j, const Field& f, const std::string& path) {
  const Json& arr = array_of(j, path, 2);
  PlanarVector b1 = parse_vector(arr[0], f, at(path, 0));
  PlanarVector b2 = parse_vector(arr[1], f, at(path, 1));
  try {
    return LatticeBasis(std::move(b1), std::move(b2));
  } catch (const SpecificationError& e) {
    fail(path, e.what());
  }
}

IndexSet parse_index_set(const Json& j, const std::string& path) {
  const Json& arr = array_of(j, path);
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::uint64_t k = parse_count(arr[i], at(path, i));
    if (k == 0) fail(at(path, i), "indices are 1-based");
    items.push_back(static_cast<std::size_t>(k));
  }
  return IndexSet(std::move(items));
}

namespace {

PairStatus parse_status(const Json& j, const std::string& path) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  for (PairStatus st : {PairStatus::A1, PairStatus::B, PairStatus::Fail}) {
    if (s == to_string(st)) return st;
  }
  fail(path, "expected \"A1\", \"B\" or \"Fail\"");
}

TilingClass parse_class(const Json& j, const std::string& path) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "A") return TilingClass::A;
  if (s == "B") return TilingClass::B;
  fail(path, "expected \"A\" or \"B\"");
}

}  // namespace

Verdict parse_verdict(const Json& j, const Field& f) {
  Verdict v;
  const Json& tiles = member(j, "tiles", "");
  if (!tiles.is_boolean()) fail("tiles", "expected a boolean");
  v.tiles = tiles.get<bool>();
  if (const Json* c = optional_member(j, "class")) v.tiling_class = parse_class(*c, "class");
  v.J = parse_index_set(member(j, "J", ""), "J");
  if (const Json* l = optional_member(j, "lattice")) v.lattice = parse_lattice(*l, f, "lattice");
  if (const Json* l = optional_member(j, "base_lattice")) v.base_lattice = parse_lattice(*l, f, "base_lattice");
  if (const Json* k = optional_member(j, "level")) v.level = parse_integer(*k, "level");
  const Json& pairs = array_of(member(j, "pairs", ""), "pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string p = at("pairs", i);
    PairCondition pc;
    pc.j = static_cast<std::size_t>(parse_count(member(pairs[i], "j", p), dot(p, "j")));
    pc.status = parse_status(member(pairs[i], "status", p), dot(p, "status"));
    if (const Json* t = optional_member(pairs[i], "t")) pc.t = parse_element(*t, f, dot(p, "t"));
    v.pairs.push_back(std::move(pc));
  }
  if (const Json* rs = optional_member(j, "rejections")) {
    array_of(*rs, "rejections");
    for (std::size_t i = 0; i < rs->size(); ++i) {
      const std::string p = at("rejections", i);
      const Json& r = (*rs)[i];
      const Json& reason = member(r, "reason", p);
      if (!reason.is_string()) fail(dot(p, "reason"), "expected a string");
      v.rejections.push_back({parse_class(member(r, "stage", p), dot(p, "stage")),
                              parse_index_set(member(r, "candidate", p), dot(p, "candidate")),
                              reason.get<std::string>()});
    }
  }
  return v;
}

MultiplicityReport parse_report(const Json& j) {
  MultiplicityReport r;
  const Json& pass = member(j, "pass", "");
  if (!pass.is_boolean()) fail("pass", "expected a boolean");
  r.pass = pass.get<bool>();
  r.samples = static_cast<std::size_t>(parse_count(member(j, "samples", ""), "samples"));
  r.expected_level = parse_integer(member(j, "expected_level", ""), "expected_level");
  r.seed = parse_count(member(j, "seed", ""), "seed");
  r.boundary_resamples =
      static_cast<std::size_t>(parse_count(member(j, "boundary_resamples", ""), "boundary_resamples"));
  if (const Json* m = optional_member(j, "first_mismatch")) {
    r.first_mismatch = static_cast<std::size_t>(parse_count(*m, "first_mismatch"));
  }
  const Json& mults = array_of(member(j, "multiplicities", ""), "multiplicities");
  for (std::size_t i = 0; i < mults.size(); ++i) {
    r.multiplicities.push_back(parse_integer(mults[i], at("multiplicities", i)));
  }
  return r;
}

DiscretenessResult parse_discreteness(const Json& j, const Field& f) {
  DiscretenessResult r;
  const Json& d = member(j, "discrete", "");
  if (!d.is_boolean()) fail("discrete", "expected a boolean");
  r.verdict = d.get<bool>() ? Discreteness::Discrete : Discreteness::Dense;
  r.rank = static_cast<int>(parse_count(member(j, "rank", ""), "rank"));
  if (const Json* b = optional_member(j, "basis")) r.basis = parse_lattice(*b, f, "basis");
  if (const Json* g = optional_member(j, "generator")) r.generator = parse_vector(*g, f, "generator");
  if (const Json* w = optional_member(j, "witness")) r.witness = parse_element(*w, f, "witness");
  return r;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

ProblemFile parse_problem(const std::string& text) {
  const Json j = parse_json_text(text);
  if (!j.is_object()) fail("(root)", "expected an object");
  ProblemFile p;
  const Json* field = optional_member(j, "field");
  p.field = field ? parse_field(*field, "field") : FieldSpec::rationals();
  if (const Json* v = optional_member(j, "vertices")) p.vertices = parse_vectors(*v, p.field, "vertices");
  if (const Json* l = optional_member(j, "lattice")) p.lattice = parse_lattice(*l, p.field, "lattice");
  if (const Json* k = optional_member(j, "level")) p.level = parse_integer(*k, "level");
  if (const Json* e = optional_member(j, "e")) p.e = parse_vectors(*e, p.field, "e");
  if (const Json* t = optional_member(j, "tau")) p.tau = parse_vectors(*t, p.field, "tau");
  if (const Json* v = optional_member(j, "vectors")) p.vectors = parse_vectors(*v, p.field, "vectors");
  if (const Json* s = optional_member(j, "samples")) p.samples = parse_count(*s, "samples");
  if (const Json* s = optional_member(j, "seed")) p.seed = parse_count(*s, "seed");
  return p;
}

}  // namespace mtile::cli
