#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rowmotion/element_set.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

/// Immutable finite poset over element indices 0..size()-1.
///
/// The reflexive-transitive order is stored as per-element up-sets and
/// down-sets, so `leq` is a single bit test.
class Poset {
public:
  Poset() = default;

  /// Builds from named elements and (lower, upper) cover pairs. The order is
  /// the reflexive-transitive closure; redundant pairs are dropped from the
  /// stored cover list.
  static Poset from_cover_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& covers);
  static Poset from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers);

  /// Builds from an order predicate `leq(x, y)` that must already be a
  /// partial order; covers are its transitive reduction.
  static Poset from_order(std::vector<std::string> labels,
                          const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  ElementSet all() const { return ElementSet::range(size()); }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  /// {y | x <= y}, x included.
  const ElementSet& up_set(std::size_t x) const { return up_[x]; }
  /// {y | y <= x}, x included.
  const ElementSet& down_set(std::size_t x) const { return down_[x]; }
  /// Elements incomparable with x.
  ElementSet incomparable_to(std::size_t x) const { return all() - (up_[x] | down_[x]); }

  const std::vector<Cover>& covers() const { return covers_; }
  bool is_cover(std::size_t lower, std::size_t upper) const { return upper_covers_[lower].contains(upper); }
  const ElementSet& upper_covers(std::size_t x) const { return upper_covers_[x]; }
  const ElementSet& lower_covers(std::size_t x) const { return lower_covers_[x]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool owns(const ElementSet& s) const { return s.is_subset_of(all()); }
  bool is_antichain(const ElementSet& s) const;

private:
  void init_from_closure();

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> upper_covers_;
  std::vector<ElementSet> lower_covers_;
  std::vector<Cover> covers_;
  std::unordered_map<std::string, std::size_t> by_label_;
};

// --- ideals and the reverse operator -------------------------------------

ElementSet upper_ideal(const Poset& p, const ElementSet& gens);
ElementSet lower_ideal(const Poset& p, const ElementSet& gens);
ElementSet minimal_elements(const Poset& p, const ElementSet& s);
ElementSet maximal_elements(const Poset& p, const ElementSet& s);

/// Maximal elements of the complement of the upper ideal generated by `a`.
ElementSet rowmotion(const Poset& p, const ElementSet& a);
/// Minimal elements of the complement of the lower ideal generated by `a`.
ElementSet inverse_rowmotion(const Poset& p, const ElementSet& a);
/// Applies rowmotion `power` times; negative powers use the inverse.
ElementSet rowmotion_power(const Poset& p, ElementSet a, long long power);

// --- enumeration ---------------------------------------------------------

/// All antichains in canonical (lexicographic) order, with reverse lookup.
class AntichainSet {
public:
  AntichainSet() = default;
  explicit AntichainSet(std::vector<ElementSet> ordered);

  std::size_t size() const { return list_.size(); }
  const ElementSet& operator[](std::size_t i) const { return list_[i]; }
  const std::vector<ElementSet>& list() const { return list_; }
  std::optional<std::size_t> find(const ElementSet& a) const;
  std::size_t index_of(const ElementSet& a) const;

  auto begin() const { return list_.begin(); }
  auto end() const { return list_.end(); }

private:
  std::vector<ElementSet> list_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

AntichainSet enumerate_antichains(const Poset& p);

struct Orbit {
  /// Cyclic sequence starting at the canonical representative; each entry's
  /// rowmotion image is the next entry, the last wraps to the first.
  std::vector<ElementSet> antichains;
  /// Indices into the AntichainSet the orbit was computed from.
  std::vector<std::size_t> indices;

  std::size_t size() const { return antichains.size(); }
  const ElementSet& representative() const { return antichains.front(); }
  std::size_t total_cardinality() const;
  Rational mean_size() const;
};

/// Orbits sorted by (size, canonical representative).
std::vector<Orbit> all_orbits(const Poset& p, const AntichainSet& ans);
std::vector<Orbit> all_orbits(const Poset& p);
Orbit orbit_of(const Poset& p, const ElementSet& a);

std::uint64_t rowmotion_order(const std::vector<Orbit>& orbits);
std::uint64_t rowmotion_order(const Poset& p);

// --- gradings ------------------------------------------------------------

struct Grading {
  int level = 0;
  std::vector<int> rank;  // per element, in 1..level
  /// d^{-1}(1) equals the set of minimal elements.
  bool bottom_is_minimal = false;
  /// d^{-1}(level) equals the set of maximal elements.
  bool top_is_maximal = false;

  bool standard_orbit_hypotheses() const { return bottom_is_minimal && top_is_maximal; }
  ElementSet level_set(int r) const;
};

/// The rank function in which every cover raises rank by exactly one, each
/// connected component normalized to minimum rank 1. Absent when no such
/// function exists or the poset is empty.
std::optional<Grading> grading_of(const Poset& p);

/// The orbit {empty, P(r), ..., P(1)} through the rank levels; requires a
/// grading whose bottom and top levels are the minimal and maximal elements.
Orbit standard_orbit(const Poset& p);

// --- removal index and weighted invariant ---------------------------------

/// #(I minus {g})_min - #I_min + 1 for I the upper ideal of `a`.
int removal_index(const Poset& p, const ElementSet& a, std::size_t g);
/// Sum of weight[g] * removal_index over g in `a`; zero for the empty set.
long long weighted_oy(const Poset& p, const ElementSet& a, const std::vector<int>& weight);

// --- antichain lattice -----------------------------------------------------

/// Sum of antichain cardinalities over all antichains.
std::uint64_t antichain_lattice_edge_count(const Poset& p, const AntichainSet& ans);
std::uint64_t antichain_lattice_edge_count(const Poset& p);
/// Counts covering pairs I subset J of upper ideals with #J = #I + 1 by
/// growing each ideal one element at a time.
std::uint64_t antichain_lattice_cover_count(const Poset& p, const AntichainSet& ans);

// --- isomorphism -----------------------------------------------------------

inline constexpr std::size_t kDefaultIsomorphismLimit = 64;

/// A bijection f (indexed by elements of `a`) with x covered-by y in `a` iff
/// f(x) covered-by f(y) in `b`; absent if none exists.
std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& a, const Poset& b,
                                                         std::size_t max_elements = kDefaultIsomorphismLimit);

}  // namespace rowmotion
