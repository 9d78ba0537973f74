#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rowmotion/element_set.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

enum class CartanType { A, B, C, D, E, F, G };

char to_char(CartanType t);

/// Coefficients of a root over the simple roots (Bourbaki numbering).
using RootVector = std::vector<int>;

/// An irreducible reduced root system with its positive roots generated from
/// the Cartan data. Immutable once built.
class RootSystem {
public:
  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  /// "A3", "F4", ...
  std::string name() const;

  std::size_t num_positive() const { return roots_.size(); }
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  const RootVector& root(std::size_t i) const { return roots_[i]; }
  int height(std::size_t i) const { return heights_[i]; }
  bool is_short(std::size_t i) const { return short_[i]; }
  bool two_lengths() const;
  std::optional<std::size_t> find(const RootVector& v) const;
  /// Index of the simple root alpha_{i+1} (i is 0-based).
  std::size_t simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }

  int coxeter_number() const { return coxeter_number_; }
  const std::vector<int>& exponents() const { return exponents_; }
  std::size_t theta() const { return theta_; }
  /// Highest short root; absent in simply-laced types.
  std::optional<std::size_t> theta_s() const { return theta_s_; }
  /// Height of the highest short root (h*(dual) - 1); requires two lengths.
  int short_level() const;
  int dual_coxeter_of_dual() const { return short_level() + 1; }
  std::size_t num_simple_short() const;

  /// Permutation of simple-root indices induced by -w0 (0-based).
  const std::vector<int>& minus_w0() const { return minus_w0_; }
  bool w0_is_minus_one() const;

  /// Scaled Gram matrix of the simple roots.
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  friend RootSystem build_root_system(CartanType type, int rank);

private:
  RootSystem() = default;

  CartanType type_ = CartanType::A;
  int rank_ = 0;
  std::vector<std::vector<int>> gram_;
  std::vector<RootVector> roots_;
  std::vector<int> heights_;
  std::vector<bool> short_;
  std::vector<std::size_t> simple_;
  std::map<RootVector, std::size_t> lookup_;
  int coxeter_number_ = 0;
  std::vector<int> exponents_;
  std::size_t theta_ = 0;
  std::optional<std::size_t> theta_s_;
  std::vector<int> minus_w0_;
};

/// Valid pairs: A_n (n>=1), B_n and C_n (n>=2), D_n (n>=4), E6-E8, F4, G2.
RootSystem build_root_system(CartanType type, int rank);
/// Parses names such as "A3", "e8", "F4".
RootSystem build_root_system(std::string_view name);

struct PosetVariant {
  enum class Kind { full, no_simple, short_roots, short_no_simple, height_geq, parabolic };

  Kind kind = Kind::full;
  int min_height = 1;            // height_geq only
  std::vector<int> simple_subset;  // parabolic only, 0-based simple indices

  static PosetVariant full() { return {Kind::full, 1, {}}; }
  static PosetVariant no_simple() { return {Kind::no_simple, 1, {}}; }
  static PosetVariant short_roots() { return {Kind::short_roots, 1, {}}; }
  static PosetVariant short_no_simple() { return {Kind::short_no_simple, 1, {}}; }
  static PosetVariant height_geq(int j) { return {Kind::height_geq, j, {}}; }
  static PosetVariant parabolic(std::vector<int> simple) { return {Kind::parabolic, 1, std::move(simple)}; }

  /// "full", "no-simple", "short", "short-no-simple", "height-geq-3", "parabolic-1,2" (1-based).
  std::string name() const;
  static PosetVariant parse(std::string_view text);
};

/// A subposet of the positive roots with the induced root order.
struct RootPoset {
  Poset poset;
  /// Root-system index of each poset element.
  std::vector<std::size_t> roots;
  /// Element i has rank height(roots[i]) - height_offset in the attached grading.
  int height_offset = 0;
  int level = 0;

  std::optional<std::size_t> element_of_root(std::size_t root_index) const;
  /// Elementwise image of a set under a root permutation; throws if the
  /// subposet is not closed under it.
  ElementSet map_roots(const ElementSet& s, const std::vector<std::size_t>& root_perm) const;
  /// height - height_offset per element.
  std::vector<int> attached_rank(const RootSystem& rs) const;
};

RootPoset root_poset(const RootSystem& rs, const PosetVariant& variant);

/// Closed-form antichain count (full, no_simple, short); exact and checked
/// to be integral.
std::uint64_t expected_antichain_count(const RootSystem& rs, const PosetVariant& variant);

/// gamma -> -w0(gamma) on positive roots, as root-index permutation.
std::vector<std::size_t> minus_w0_root_permutation(const RootSystem& rs);
/// Elementwise -w0 on an antichain of a -w0-stable root poset.
ElementSet minus_w0_on_antichain(const RootSystem& rs, const RootPoset& rp, const ElementSet& a);

/// Two-colouring of the Dynkin diagram into mutually orthogonal simple roots,
/// normalized so alpha_1 is in the first class. 0-based simple indices.
std::pair<std::vector<int>, std::vector<int>> orthogonal_bipartition(const RootSystem& rs);

enum class Convention { bourbaki, paper_f4, interval_a };

/// Coefficient string (bourbaki), the F4 reversed-numbering string
/// (paper_f4), or "(i,j)" for alpha_i + ... + alpha_j in type A.
std::string print_root(const RootSystem& rs, std::size_t root, Convention convention);
/// Inverse of print_root. Interval input also accepts "i-j".
std::size_t parse_root(const RootSystem& rs, std::string_view text, Convention convention);

}  // namespace rowmotion
