#include "rowmotion/type_a.hpp"

#include <algorithm>

#include "rowmotion/errors.hpp"

namespace rowmotion::type_a {

bool TwoRowArray::valid() const {
  if (i_seq.size() != j_seq.size())
    return false;
  for (std::size_t s = 0; s < i_seq.size(); ++s) {
    if (i_seq[s] < 1 || j_seq[s] > n || i_seq[s] > j_seq[s])
      return false;
    if (s > 0 && (i_seq[s] <= i_seq[s - 1] || j_seq[s] <= j_seq[s - 1]))
      return false;
  }
  return true;
}

RootPosetA::RootPosetA(int n) : RootPosetA(build_root_system(CartanType::A, n)) {}

RootPosetA::RootPosetA(const RootSystem& rs) : rs_(rs) {
  if (rs.type() != CartanType::A)
    throw NotTypeA(rs.name() + " is not of type A");
  rp_ = rowmotion::root_poset(rs_, PosetVariant::full());
  const int n = rs_.rank();
  by_interval_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0));
  for (std::size_t e = 0; e < rp_.roots.size(); ++e) {
    const auto& v = rs_.root(rp_.roots[e]);
    int i = 0;
    while (v[static_cast<std::size_t>(i)] == 0)
      ++i;
    int j = i;
    while (j + 1 < n && v[static_cast<std::size_t>(j + 1)] != 0)
      ++j;
    intervals_.emplace_back(i + 1, j + 1);
    by_interval_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = e;
  }
}

std::size_t RootPosetA::element(int i, int j) const {
  if (i < 1 || i > j || j > n())
    throw ParseError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a positive root of A" +
                     std::to_string(n()));
  return by_interval_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::pair<int, int> RootPosetA::interval(std::size_t element) const { return intervals_.at(element); }

TwoRowArray RootPosetA::to_array(const ElementSet& a) const {
  if (!poset().is_antichain(a))
    throw NotAnAntichain("two-row arrays encode antichains only");
  std::vector<std::pair<int, int>> cols;
  a.for_each([&](std::size_t e) { cols.push_back(intervals_[e]); });
  std::sort(cols.begin(), cols.end());
  TwoRowArray arr{n(), {}, {}};
  for (auto [i, j] : cols) {
    arr.i_seq.push_back(i);
    arr.j_seq.push_back(j);
  }
  return arr;
}

ElementSet RootPosetA::from_array(const TwoRowArray& arr) const {
  if (arr.n != n() || !arr.valid())
    throw NotAnAntichain("array does not describe an antichain of A" + std::to_string(n()));
  ElementSet out;
  for (std::size_t s = 0; s < arr.size(); ++s)
    out.insert(element(arr.i_seq[s], arr.j_seq[s]));
  return out;
}

int oy_ideal_form(const RootPosetA& ra, const ElementSet& a) {
  int total = 0;
  a.for_each([&](std::size_t g) { total += removal_index(ra.poset(), a, g); });
  return total;
}

int oy_difference_form(const TwoRowArray& arr) {
  return lower_chi_sum(arr.i_seq) + upper_chi_sum(arr.j_seq, arr.n);
}

TwoRowArray rowmotion_array(const TwoRowArray& arr) {
  const int n = arr.n;
  const std::size_t k = arr.size();
  // Shifted array: i-row (1, i_1+1, ..., i_k+1), j-row (j_1-1, ..., j_k-1, n).
  std::vector<int> ti{1}, tj;
  for (std::size_t s = 0; s < k; ++s) {
    ti.push_back(arr.i_seq[s] + 1);
    tj.push_back(arr.j_seq[s] - 1);
  }
  tj.push_back(n);
  TwoRowArray out{n, {}, {}};
  for (std::size_t c = 0; c < ti.size(); ++c) {
    if (ti[c] < 1 || ti[c] > tj[c] || tj[c] > n)
      continue;  // bad column
    out.i_seq.push_back(ti[c]);
    out.j_seq.push_back(tj[c]);
  }
  if (!out.valid())
    throw Error("array rowmotion produced a non-antichain");
  return out;
}

TwoRowArray inverse_rowmotion_array(const TwoRowArray& arr) {
  const int n = arr.n;
  const std::size_t m = arr.size();
  TwoRowArray out{n, {}, {}};
  auto diagonal = [&](int from, int to) {
    for (int t = from; t <= to; ++t) {
      out.i_seq.push_back(t);
      out.j_seq.push_back(t);
    }
  };
  if (m == 0) {
    diagonal(1, n);
    return out;
  }
  if (arr.i_seq.front() >= 2)
    diagonal(1, arr.i_seq.front() - 1);
  for (std::size_t s = 0; s + 1 < m; ++s) {
    const int top = arr.i_seq[s + 1] - 1;
    const int bottom = arr.j_seq[s] + 1;
    if (top <= bottom) {
      out.i_seq.push_back(top);
      out.j_seq.push_back(bottom);
    } else {
      diagonal(bottom, top);
    }
  }
  if (arr.j_seq.back() < n)
    diagonal(arr.j_seq.back() + 1, n);
  if (!out.valid())
    throw Error("array inverse rowmotion produced a non-antichain");
  return out;
}

TwoRowArray star(const TwoRowArray& arr) {
  return {arr.n, complement(arr.j_seq, arr.n), complement(arr.i_seq, arr.n)};
}

ElementSet rowmotion_array(const RootPosetA& ra, const ElementSet& a) {
  return ra.from_array(rowmotion_array(ra.to_array(a)));
}

ElementSet inverse_rowmotion_array(const RootPosetA& ra, const ElementSet& a) {
  return ra.from_array(inverse_rowmotion_array(ra.to_array(a)));
}

ElementSet star(const RootPosetA& ra, const ElementSet& a) { return ra.from_array(star(ra.to_array(a))); }

int lower_chi_sum(const std::vector<int>& seq) {
  int total = 0, prev = 0;
  for (int x : seq) {
    total += chi(x - prev);
    prev = x;
  }
  return total;
}

int upper_chi_sum(const std::vector<int>& seq, int n) {
  int total = 0;
  for (std::size_t s = 0; s < seq.size(); ++s) {
    const int next = s + 1 < seq.size() ? seq[s + 1] : n + 1;
    total += chi(next - seq[s]);
  }
  return total;
}

namespace {

int count_runs(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  int runs = 0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (k == 0 || values[k] != values[k - 1] + 1)
      ++runs;
  return runs;
}

}  // namespace

int lower_components(const std::vector<int>& seq) {
  auto v = seq;
  v.push_back(0);
  return count_runs(std::move(v)) - 1;
}

int upper_components(const std::vector<int>& seq, int n) {
  auto v = seq;
  v.push_back(n + 1);
  return count_runs(std::move(v)) - 1;
}

std::vector<int> complement(const std::vector<int>& seq, int n) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int x = 1; x <= n; ++x) {
    if (k < seq.size() && seq[k] == x)
      ++k;
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace rowmotion::type_a
