#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rowmotion/element_set.hpp"
#include "rowmotion/root_system.hpp"

namespace rowmotion::type_a {

/// Antichain of Delta+(A_n) as two increasing rows; column s is the root
/// alpha_{i_s} + ... + alpha_{j_s}.
struct TwoRowArray {
  int n = 0;
  std::vector<int> i_seq;
  std::vector<int> j_seq;

  std::size_t size() const { return i_seq.size(); }
  /// 1 <= i_1 < ... < i_k, j_1 < ... < j_k <= n, i_s <= j_s.
  bool valid() const;

  friend bool operator==(const TwoRowArray&, const TwoRowArray&) = default;
};

/// Delta+(A_n) with the interval bookkeeping needed to move between
/// element sets and two-row arrays.
class RootPosetA {
public:
  explicit RootPosetA(int n);
  /// Throws NotTypeA unless `rs` is of type A.
  explicit RootPosetA(const RootSystem& rs);

  int n() const { return rs_.rank(); }
  const RootSystem& roots() const { return rs_; }
  const RootPoset& root_poset() const { return rp_; }
  const Poset& poset() const { return rp_.poset; }

  std::size_t element(int i, int j) const;
  std::pair<int, int> interval(std::size_t element) const;

  TwoRowArray to_array(const ElementSet& a) const;
  ElementSet from_array(const TwoRowArray& arr) const;

private:
  RootSystem rs_;
  RootPoset rp_;
  std::vector<std::pair<int, int>> intervals_;
  std::vector<std::vector<std::size_t>> by_interval_;
};

/// chi(a) = 1 if a >= 2, 0 if a == 1.
inline int chi(int a) { return a >= 2 ? 1 : 0; }

/// Sum of removal indices over the antichain (upper-ideal definition).
int oy_ideal_form(const RootPosetA& ra, const ElementSet& a);
/// Number of essential consecutive differences in (0, i_1..i_k) and
/// (j_1..j_k, n+1).
int oy_difference_form(const TwoRowArray& arr);

/// Rowmotion by shifting rows and deleting columns that are not roots.
TwoRowArray rowmotion_array(const TwoRowArray& arr);
/// Inverse rowmotion by the column-creation procedure.
TwoRowArray inverse_rowmotion_array(const TwoRowArray& arr);
/// Duality: i* = [n] \ j, j* = [n] \ i.
TwoRowArray star(const TwoRowArray& arr);

ElementSet rowmotion_array(const RootPosetA& ra, const ElementSet& a);
ElementSet inverse_rowmotion_array(const RootPosetA& ra, const ElementSet& a);
ElementSet star(const RootPosetA& ra, const ElementSet& a);

/// sum_s chi(i_s - i_{s-1}) with i_0 = 0, for an increasing sequence in [n].
int lower_chi_sum(const std::vector<int>& seq);
/// sum_s chi(j_{s+1} - j_s) with j_{k+1} = n + 1.
int upper_chi_sum(const std::vector<int>& seq, int n);
/// (#connected components of seq + {0}) - 1.
int lower_components(const std::vector<int>& seq);
/// (#connected components of seq + {n+1}) - 1.
int upper_components(const std::vector<int>& seq, int n);
/// [n] minus an increasing sequence, increasing.
std::vector<int> complement(const std::vector<int>& seq, int n);

}  // namespace rowmotion::type_a
