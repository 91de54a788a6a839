#include "mtile/selector.hpp"

#include <algorithm>
#include <set>

#include "mtile/errors.hpp"

namespace mtile {

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet::IndexSet(std::vector<std::size_t> indices) : items_(std::move(indices)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  if (!items_.empty() && items_.front() == 0) {
    throw SpecificationError("index sets are 1-based");
  }
}

IndexSet IndexSet::full(std::size_t n) {
  IndexSet s;
  for (std::size_t j = 1; j <= n; ++j) s.items_.push_back(j);
  return s;
}

bool IndexSet::contains(std::size_t j) const {
  return std::binary_search(items_.begin(), items_.end(), j);
}

void IndexSet::insert(std::size_t j) {
  if (j == 0) throw SpecificationError("index sets are 1-based");
  auto it = std::lower_bound(items_.begin(), items_.end(), j);
  if (it == items_.end() || *it != j) items_.insert(it, j);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  IndexSet r;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(r.items_));
  return r;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(items_[i]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------

SelectorInstance::SelectorInstance(std::vector<PlanarVector> e, std::vector<PlanarVector> tau)
    : e_(std::move(e)), tau_(std::move(tau)) {
  if (e_.size() != tau_.size()) throw SpecificationError("e and tau must have the same length");
  if (e_.size() < 2) throw SpecificationError("selector needs n >= 2");
  for (std::size_t j = 0; j < e_.size(); ++j) {
    if (e_[j].is_zero() || tau_[j].is_zero()) {
      throw SpecificationError("zero vector at index " + std::to_string(j + 1));
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (parallel(e_[j], e_[k])) {
        throw SpecificationError("e_" + std::to_string(k + 1) + " and e_" +
                                 std::to_string(j + 1) + " are parallel");
      }
      if (parallel(tau_[j], tau_[k])) {
        throw SpecificationError("tau_" + std::to_string(k + 1) + " and tau_" +
                                 std::to_string(j + 1) + " are parallel");
      }
    }
  }
}

std::vector<PlanarVector> translation_generators(const SelectorInstance& inst, const IndexSet& J) {
  std::vector<PlanarVector> g;
  for (std::size_t j : J) g.push_back(inst.tau(j));
  return g;
}

std::vector<PlanarVector> mixed_generators(const SelectorInstance& inst, const IndexSet& J) {
  std::vector<PlanarVector> g = translation_generators(inst, J);
  for (std::size_t j = 1; j <= inst.n(); ++j) {
    if (!J.contains(j)) g.push_back(inst.e(j));
  }
  return g;
}

IndexSet grow_maximal(const SelectorInstance& inst, const IndexSet& seed) {
  if (seed.size() != 2) throw SpecificationError("growth seed must have two elements");
  // Once T(J + k) is dense every larger set stays dense, so one ascending
  // pass reaches the maximal set.
  IndexSet J = seed;
  std::vector<PlanarVector> gens = translation_generators(inst, J);
  for (std::size_t j = 1; j <= inst.n(); ++j) {
    if (J.contains(j)) continue;
    // Seed pair first (a real basis), candidate next, so a dense candidate
    // fails after a single coefficient test.
    std::vector<PlanarVector> trial;
    trial.reserve(gens.size() + 1);
    trial.push_back(gens[0]);
    trial.push_back(gens[1]);
    trial.push_back(inst.tau(j));
    trial.insert(trial.end(), gens.begin() + 2, gens.end());
    if (generates_discrete(trial)) {
      J.insert(j);
      gens.push_back(inst.tau(j));
    }
  }
  return J;
}

std::vector<IndexSet> enumerate_maximal_sets(const SelectorInstance& inst) {
  std::set<IndexSet> found;
  const std::size_t n = inst.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 1; k <= n; ++k) {
      // The maximal set through {i, k} is unique; skip seeds already covered.
      const bool covered = std::any_of(found.begin(), found.end(), [&](const IndexSet& s) {
        return s.contains(i) && s.contains(k);
      });
      if (covered) continue;
      found.insert(grow_maximal(inst, IndexSet{i, k}));
    }
  }
  return {found.begin(), found.end()};
}

std::optional<Selection> select_j(const SelectorInstance& inst) {
  auto attempt = [&](const IndexSet& J) -> std::optional<Selection> {
    DiscretenessResult r = is_discrete(mixed_generators(inst, J));
    if (!r.discrete()) return std::nullopt;
    return Selection{J, std::move(r)};
  };

  if (auto s = attempt(IndexSet{})) return s;
  for (std::size_t j = 1; j <= inst.n(); ++j) {
    if (auto s = attempt(IndexSet{j})) return s;
  }
  for (const IndexSet& J : enumerate_maximal_sets(inst)) {
    if (auto s = attempt(J)) return s;
  }
  return std::nullopt;
}

}  // namespace mtile
