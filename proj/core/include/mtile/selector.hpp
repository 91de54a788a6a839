#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mtile/subgroup.hpp"

namespace mtile {

/// Sorted, duplicate-free set of 1-based pair indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  explicit IndexSet(std::vector<std::size_t> indices);

  static IndexSet full(std::size_t n);

  bool contains(std::size_t j) const;
  void insert(std::size_t j);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool is_subset_of(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<std::size_t>& items() const { return items_; }

  std::string to_string() const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> items_;
};

/// Nonzero, pairwise non-parallel e_1..e_n and tau_1..tau_n.
class SelectorInstance {
 public:
  /// Throws SpecificationError on size mismatch, zero or parallel vectors.
  SelectorInstance(std::vector<PlanarVector> e, std::vector<PlanarVector> tau);

  std::size_t n() const { return e_.size(); }
  const std::vector<PlanarVector>& e() const { return e_; }
  const std::vector<PlanarVector>& tau() const { return tau_; }
  const PlanarVector& e(std::size_t j) const { return e_[j - 1]; }
  const PlanarVector& tau(std::size_t j) const { return tau_[j - 1]; }

 private:
  std::vector<PlanarVector> e_;
  std::vector<PlanarVector> tau_;
};

/// {tau_j : j in J}.
std::vector<PlanarVector> translation_generators(const SelectorInstance& inst, const IndexSet& J);

/// {tau_j : j in J} together with {e_j : j not in J}.
std::vector<PlanarVector> mixed_generators(const SelectorInstance& inst, const IndexSet& J);

/// The unique maximal J containing a two-element seed with T(J) discrete.
IndexSet grow_maximal(const SelectorInstance& inst, const IndexSet& seed);

/// All maximal J (|J| >= 2) with T(J) discrete, sorted lexicographically.
/// Distinct results share at most one index.
std::vector<IndexSet> enumerate_maximal_sets(const SelectorInstance& inst);

struct Selection {
  IndexSet J;
  DiscretenessResult certificate;
};

/// Some J with span_Z{tau_j (j in J), e_j (j not in J)} discrete, or nothing
/// if no subset works. Tries the empty set, singletons, then each maximal
/// set in lexicographic order.
std::optional<Selection> select_j(const SelectorInstance& inst);

}  // namespace mtile
