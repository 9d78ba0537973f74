#include "rowmotion/poset.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>

#include "rowmotion/errors.hpp"
#include "rowmotion/kernels.hpp"

namespace rowmotion {

namespace {

void check_capacity(std::size_t n) {
  if (n > ElementSet::kCapacity)
    throw SizeLimitExceeded("poset has " + std::to_string(n) + " elements; capacity is " +
                            std::to_string(ElementSet::kCapacity));
}

std::unordered_map<std::string, std::size_t> label_index(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!idx.emplace(labels[i], i).second)
      throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
  return idx;
}

}  // namespace

Poset Poset::from_cover_relations(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>>& covers) {
  auto idx = label_index(labels);
  std::vector<Cover> ic;
  ic.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo);
    if (a == idx.end())
      throw UnknownLabel("unknown element '" + lo + "'");
    auto b = idx.find(hi);
    if (b == idx.end())
      throw UnknownLabel("unknown element '" + hi + "'");
    ic.emplace_back(a->second, b->second);
  }
  return from_covers(std::move(labels), ic);
}

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers) {
  const std::size_t n = labels.size();
  check_capacity(n);
  Poset p;
  p.by_label_ = label_index(labels);
  p.labels_ = std::move(labels);

  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw UnknownLabel("cover references element index out of range");
    if (lo == hi)
      throw CycleDetected("element '" + p.labels_[lo] + "' covers itself");
    succ[lo].push_back(hi);
    ++indeg[hi];
  }

  // Kahn's algorithm; leftovers lie on a directed cycle.
  std::vector<std::size_t> topo;
  topo.reserve(n);
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0)
      ready.push_back(i);
  while (!ready.empty()) {
    auto x = ready.front();
    ready.pop_front();
    topo.push_back(x);
    for (auto y : succ[x])
      if (--indeg[y] == 0)
        ready.push_back(y);
  }
  if (topo.size() != n) {
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] != 0)
        throw CycleDetected("cover relations contain a directed cycle through '" + p.labels_[i] + "'");
  }

  p.up_.assign(n, ElementSet{});
  p.down_.assign(n, ElementSet{});
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    auto x = *it;
    p.up_[x].insert(x);
    for (auto y : succ[x])
      p.up_[x] |= p.up_[y];
  }
  for (std::size_t x = 0; x < n; ++x)
    p.up_[x].for_each([&](std::size_t y) { p.down_[y].insert(x); });
  p.init_from_closure();
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels,
                        const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = labels.size();
  check_capacity(n);
  Poset p;
  p.by_label_ = label_index(labels);
  p.labels_ = std::move(labels);
  p.up_.assign(n, ElementSet{});
  p.down_.assign(n, ElementSet{});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x == y || leq(x, y)) {
        p.up_[x].insert(y);
        p.down_[y].insert(x);
      }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y)
      if (p.up_[x].contains(y) && p.up_[y].contains(x))
        throw NotAPartialOrder("relation is not antisymmetric on '" + p.labels_[x] + "', '" +
                               p.labels_[y] + "'");
    p.up_[x].for_each([&](std::size_t y) {
      if (!p.up_[y].is_subset_of(p.up_[x]))
        throw NotAPartialOrder("relation is not transitive through '" + p.labels_[y] + "'");
    });
  }
  p.init_from_closure();
  return p;
}

void Poset::init_from_closure() {
  const std::size_t n = size();
  upper_covers_.assign(n, ElementSet{});
  lower_covers_.assign(n, ElementSet{});
  covers_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet strict_up = up_[x];
    strict_up.erase(x);
    strict_up.for_each([&](std::size_t y) {
      ElementSet between = strict_up & down_[y];
      between.erase(y);
      if (between.empty()) {
        upper_covers_[x].insert(y);
        lower_covers_[y].insert(x);
        covers_.emplace_back(x, y);
      }
    });
  }
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end())
    return std::nullopt;
  return it->second;
}

bool Poset::is_antichain(const ElementSet& s) const {
  if (!owns(s))
    return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    ElementSet others = s;
    others.erase(x);
    if (up_[x].intersects(others))
      ok = false;
  });
  return ok;
}

// --- ideals and the reverse operator -------------------------------------

namespace {

void require_owned(const Poset& p, const ElementSet& s) {
  if (!p.owns(s))
    throw ForeignElement("element set references indices outside the poset");
}

}  // namespace

ElementSet upper_ideal(const Poset& p, const ElementSet& gens) {
  require_owned(p, gens);
  ElementSet out;
  gens.for_each([&](std::size_t g) { out |= p.up_set(g); });
  return out;
}

ElementSet lower_ideal(const Poset& p, const ElementSet& gens) {
  require_owned(p, gens);
  ElementSet out;
  gens.for_each([&](std::size_t g) { out |= p.down_set(g); });
  return out;
}

ElementSet minimal_elements(const Poset& p, const ElementSet& s) {
  require_owned(p, s);
  ElementSet out;
  s.for_each([&](std::size_t x) {
    ElementSet below = p.down_set(x) & s;
    below.erase(x);
    if (below.empty())
      out.insert(x);
  });
  return out;
}

ElementSet maximal_elements(const Poset& p, const ElementSet& s) {
  require_owned(p, s);
  ElementSet out;
  s.for_each([&](std::size_t x) {
    ElementSet above = p.up_set(x) & s;
    above.erase(x);
    if (above.empty())
      out.insert(x);
  });
  return out;
}

ElementSet rowmotion(const Poset& p, const ElementSet& a) {
  return maximal_elements(p, p.all() - upper_ideal(p, a));
}

ElementSet inverse_rowmotion(const Poset& p, const ElementSet& a) {
  return minimal_elements(p, p.all() - lower_ideal(p, a));
}

ElementSet rowmotion_power(const Poset& p, ElementSet a, long long power) {
  for (; power > 0; --power)
    a = rowmotion(p, a);
  for (; power < 0; ++power)
    a = inverse_rowmotion(p, a);
  return a;
}

// --- enumeration ---------------------------------------------------------

AntichainSet::AntichainSet(std::vector<ElementSet> ordered) : list_(std::move(ordered)) {
  index_.reserve(list_.size());
  for (std::size_t i = 0; i < list_.size(); ++i)
    index_.emplace(list_[i], i);
}

std::optional<std::size_t> AntichainSet::find(const ElementSet& a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t AntichainSet::index_of(const ElementSet& a) const {
  auto i = find(a);
  if (!i)
    throw NotAnAntichain("set is not an antichain of this poset");
  return *i;
}

namespace {

// Preorder DFS extending by increasing index yields lexicographic order on
// sorted member lists.
void extend_antichains(const std::vector<ElementSet>& incomparable, ElementSet current,
                       const ElementSet& allowed, std::size_t from, std::vector<ElementSet>& out) {
  out.push_back(current);
  for (auto i = allowed.next_at_or_above(from); i != ElementSet::kCapacity;
       i = allowed.next_at_or_above(i + 1)) {
    ElementSet next = current;
    next.insert(i);
    extend_antichains(incomparable, next, allowed & incomparable[i], i + 1, out);
  }
}

}  // namespace

AntichainSet enumerate_antichains(const Poset& p) {
  std::vector<ElementSet> incomparable(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    incomparable[i] = p.incomparable_to(i);
  std::vector<ElementSet> out;
  extend_antichains(incomparable, ElementSet{}, p.all(), 0, out);
  return AntichainSet(std::move(out));
}

std::size_t Orbit::total_cardinality() const {
  std::size_t t = 0;
  for (const auto& a : antichains)
    t += a.size();
  return t;
}

Rational Orbit::mean_size() const {
  return Rational(static_cast<std::int64_t>(total_cardinality()), static_cast<std::int64_t>(size()));
}

std::vector<Orbit> all_orbits(const Poset& p, const AntichainSet& ans) {
  auto table = kernels::rowmotion_table(p, ans);
  std::vector<Orbit> out;
  for (auto& cyc : kernels::cycles(table)) {
    Orbit o;
    o.antichains.reserve(cyc.size());
    for (auto i : cyc)
      o.antichains.push_back(ans[i]);
    o.indices = std::move(cyc);
    out.push_back(std::move(o));
  }
  // Cycles start at their smallest index, i.e. at the canonical representative.
  std::stable_sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.indices.front() < b.indices.front();
  });
  return out;
}

std::vector<Orbit> all_orbits(const Poset& p) { return all_orbits(p, enumerate_antichains(p)); }

Orbit orbit_of(const Poset& p, const ElementSet& a) {
  if (!p.is_antichain(a))
    throw NotAnAntichain("orbit_of requires an antichain");
  std::vector<ElementSet> seq{a};
  for (auto x = rowmotion(p, a); !(x == a); x = rowmotion(p, x))
    seq.push_back(x);
  auto rep = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), rep, seq.end());
  Orbit o;
  o.antichains = std::move(seq);
  return o;
}

std::uint64_t rowmotion_order(const std::vector<Orbit>& orbits) {
  std::uint64_t l = 1;
  for (const auto& o : orbits)
    l = std::lcm(l, static_cast<std::uint64_t>(o.size()));
  return l;
}

std::uint64_t rowmotion_order(const Poset& p) { return rowmotion_order(all_orbits(p)); }

// --- gradings ------------------------------------------------------------

ElementSet Grading::level_set(int r) const {
  ElementSet s;
  for (std::size_t i = 0; i < rank.size(); ++i)
    if (rank[i] == r)
      s.insert(i);
  return s;
}

std::optional<Grading> grading_of(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0)
    return std::nullopt;
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> rank(n, kUnset);
  for (std::size_t root = 0; root < n; ++root) {
    if (rank[root] != kUnset)
      continue;
    std::vector<std::size_t> component{root};
    rank[root] = 0;
    for (std::size_t k = 0; k < component.size(); ++k) {
      auto x = component[k];
      bool consistent = true;
      auto visit = [&](std::size_t y, int want) {
        if (rank[y] == kUnset) {
          rank[y] = want;
          component.push_back(y);
        } else if (rank[y] != want) {
          consistent = false;
        }
      };
      p.upper_covers(x).for_each([&](std::size_t y) { visit(y, rank[x] + 1); });
      p.lower_covers(x).for_each([&](std::size_t y) { visit(y, rank[x] - 1); });
      if (!consistent)
        return std::nullopt;
    }
    int lo = rank[component.front()];
    for (auto x : component)
      lo = std::min(lo, rank[x]);
    for (auto x : component)
      rank[x] += 1 - lo;
  }
  Grading g;
  g.rank = std::move(rank);
  g.level = *std::max_element(g.rank.begin(), g.rank.end());
  g.bottom_is_minimal = g.level_set(1) == minimal_elements(p, p.all());
  g.top_is_maximal = g.level_set(g.level) == maximal_elements(p, p.all());
  return g;
}

Orbit standard_orbit(const Poset& p) {
  auto g = grading_of(p);
  if (!g)
    throw HypothesesNotMet("poset is not graded");
  if (!g->standard_orbit_hypotheses())
    throw HypothesesNotMet("bottom/top rank levels differ from the minimal/maximal elements");
  Orbit o;
  o.antichains.push_back(ElementSet{});
  for (int r = g->level; r >= 1; --r)
    o.antichains.push_back(g->level_set(r));
  for (std::size_t i = 0; i < o.antichains.size(); ++i) {
    const auto& next = o.antichains[(i + 1) % o.antichains.size()];
    if (!(rowmotion(p, o.antichains[i]) == next))
      throw HypothesesNotMet("rank levels do not form a rowmotion orbit");
  }
  return o;
}

// --- removal index and weighted invariant ---------------------------------

int removal_index(const Poset& p, const ElementSet& a, std::size_t g) {
  if (g >= p.size() || !a.contains(g))
    throw NotAMember("element is not a member of the antichain");
  ElementSet ideal = upper_ideal(p, a);
  ideal.erase(g);
  return static_cast<int>(minimal_elements(p, ideal).size()) - static_cast<int>(a.size()) + 1;
}

long long weighted_oy(const Poset& p, const ElementSet& a, const std::vector<int>& weight) {
  long long total = 0;
  a.for_each([&](std::size_t g) { total += static_cast<long long>(weight.at(g)) * removal_index(p, a, g); });
  return total;
}

// --- antichain lattice -----------------------------------------------------

std::uint64_t antichain_lattice_edge_count(const Poset& p, const AntichainSet& ans) {
  (void)p;
  std::uint64_t total = 0;
  for (const auto& a : ans)
    total += a.size();
  return total;
}

std::uint64_t antichain_lattice_edge_count(const Poset& p) {
  return antichain_lattice_edge_count(p, enumerate_antichains(p));
}

std::uint64_t antichain_lattice_cover_count(const Poset& p, const AntichainSet& ans) {
  std::uint64_t count = 0;
  for (const auto& a : ans) {
    ElementSet ideal = upper_ideal(p, a);
    (p.all() - ideal).for_each([&](std::size_t x) {
      ElementSet strict_up = p.up_set(x);
      strict_up.erase(x);
      if (!strict_up.is_subset_of(ideal))
        return;
      ElementSet grown = ideal;
      grown.insert(x);
      if (ans.find(minimal_elements(p, grown)))
        ++count;
    });
  }
  return count;
}

// --- isomorphism -----------------------------------------------------------

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, int, int>;

std::vector<Signature> signatures(const Poset& p) {
  const std::size_t n = p.size();
  // Longest chain ending at / starting from each element, in a linear
  // extension given by down-set size.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return p.down_set(a).size() < p.down_set(b).size(); });
  std::vector<int> depth(n, 0), height(n, 0);
  for (auto x : order)
    p.lower_covers(x).for_each([&](std::size_t y) { depth[x] = std::max(depth[x], depth[y] + 1); });
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    p.upper_covers(*it).for_each([&](std::size_t y) { height[*it] = std::max(height[*it], height[y] + 1); });
  std::vector<Signature> sig(n);
  for (std::size_t x = 0; x < n; ++x)
    sig[x] = {p.lower_covers(x).size(), p.upper_covers(x).size(), p.down_set(x).size(),
              p.up_set(x).size(), depth[x], height[x]};
  return sig;
}

struct IsoSearch {
  const Poset& a;
  const Poset& b;
  std::vector<Signature> sa, sb;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;
  std::vector<bool> used;

  bool extend(std::size_t k) {
    if (k == order.size())
      return true;
    auto x = order[k];
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (used[y] || sa[x] != sb[y])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        auto xp = order[j];
        auto yp = image[xp];
        ok = a.leq(xp, x) == b.leq(yp, y) && a.leq(x, xp) == b.leq(y, yp);
      }
      if (!ok)
        continue;
      image[x] = y;
      used[y] = true;
      if (extend(k + 1))
        return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& a, const Poset& b,
                                                         std::size_t max_elements) {
  if (a.size() > max_elements || b.size() > max_elements)
    throw SizeLimitExceeded("isomorphism search limited to " + std::to_string(max_elements) + " elements");
  if (a.size() != b.size() || a.covers().size() != b.covers().size())
    return std::nullopt;
  IsoSearch s{a, b, signatures(a), signatures(b), {}, std::vector<std::size_t>(a.size()),
              std::vector<bool>(b.size(), false)};
  auto ma = s.sa, mb = s.sb;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  if (ma != mb)
    return std::nullopt;
  // Place elements bottom-up so comparabilities constrain early.
  s.order.resize(a.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](auto x, auto y) { return std::get<4>(s.sa[x]) < std::get<4>(s.sa[y]); });
  if (!s.extend(0))
    return std::nullopt;
  return s.image;
}

}  // namespace rowmotion
