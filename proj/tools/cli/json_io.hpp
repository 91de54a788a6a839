#pragma once

// JSON encoding of the domain types. Rationals are always strings ("p/q"),
// field elements are arrays of d rational strings (a bare string is
// accepted on input as a rational element), vectors are [x, y].
//
// Every parse_* function throws ParseError whose message starts with the
// path of the offending value, e.g. "vertices[2][1]: expected a string".

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtile/decider.hpp"
#include "mtile/oracle.hpp"
#include "mtile/selector.hpp"
#include "mtile/subgroup.hpp"

namespace mtile::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const Field& field);
Json to_json(const FieldElement& x);
Json to_json(const PlanarVector& v);
Json to_json(const std::vector<PlanarVector>& vs);
Json to_json(const LatticeBasis& l);
Json to_json(const IndexSet& s);
Json to_json(const Verdict& v);
Json to_json(const MultiplicityReport& r);
Json to_json(const DiscretenessResult& r);
/// Output of `select`: {"J": [...] | "none", "certificate": {...} | null}.
Json to_json(const std::optional<Selection>& s, const SelectorInstance& inst);

Rational parse_rational(const Json& j, const std::string& path);
Integer parse_integer(const Json& j, const std::string& path);
Field parse_field(const Json& j, const std::string& path);
FieldElement parse_element(const Json& j, const Field& f, const std::string& path);
PlanarVector parse_vector(const Json& j, const Field& f, const std::string& path);
std::vector<PlanarVector> parse_vectors(const Json& j, const Field& f, const std::string& path);
LatticeBasis parse_lattice(const Json& j, const Field& f, const std::string& path);
IndexSet parse_index_set(const Json& j, const std::string& path);
Verdict parse_verdict(const Json& j, const Field& f);
MultiplicityReport parse_report(const Json& j);
DiscretenessResult parse_discreteness(const Json& j, const Field& f);

/// One input file. Every key except "field" is optional here; commands
/// check for what they need. A missing "field" means Q.
struct ProblemFile {
  Field field;
  std::optional<std::vector<PlanarVector>> vertices;
  std::optional<LatticeBasis> lattice;
  std::optional<Integer> level;
  std::optional<std::vector<PlanarVector>> e;
  std::optional<std::vector<PlanarVector>> tau;
  std::optional<std::vector<PlanarVector>> vectors;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

/// Parses JSON text; syntax errors report line and column.
ProblemFile parse_problem(const std::string& text);
Json parse_json_text(const std::string& text);

}  // namespace mtile::cli
