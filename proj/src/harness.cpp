#include "rowmotion/harness.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>

#include "rowmotion/errors.hpp"
#include "rowmotion/kernels.hpp"
#include "rowmotion/poset_io.hpp"
#include "rowmotion/rational.hpp"
#include "rowmotion/type_a.hpp"

namespace rowmotion::harness {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::unsupported: return "UNSUPPORTED";
  }
  return "?";
}

void Report::fail(const std::string& reason, const std::string& poset, const Poset& p, const ElementSet& a) {
  if (status != Status::fail) {
    evidence["witness"] = Json{{"poset", poset}, {"antichain", antichain_labels(p, a)}, {"reason", reason}};
  }
  status = Status::fail;
  evidence["failures"].push_back(reason);
}

void Report::fail(const std::string& reason) {
  if (status != Status::fail)
    evidence["witness"] = Json{{"poset", scope.dump()}, {"antichain", Json::array()}, {"reason", reason}};
  status = Status::fail;
  evidence["failures"].push_back(reason);
}

Json Report::to_json() const {
  Json j;
  j["claim_id"] = claim_id;
  j["scope"] = scope;
  j["status"] = std::string(to_string(status));
  j["evidence"] = evidence;
  return j;
}

std::string poset_id(const RootSystem& rs, const PosetVariant& v) { return rs.name() + "/" + v.name(); }

std::vector<std::string> antichain_labels(const Poset& p, const ElementSet& a) {
  std::vector<std::string> out;
  a.for_each([&](std::size_t e) { out.push_back(p.label(e)); });
  return out;
}

namespace {

struct Analysis {
  AntichainSet ans;
  std::vector<std::size_t> table;
  std::vector<Orbit> orbits;
  std::uint64_t order = 1;
};

Analysis analyze(const Poset& p) {
  Analysis a;
  a.ans = enumerate_antichains(p);
  a.table = kernels::rowmotion_table(p, a.ans);
  a.orbits = all_orbits(p, a.ans);
  a.order = rowmotion_order(a.orbits);
  return a;
}

Json size_histogram(const std::vector<Orbit>& orbits) {
  std::map<std::size_t, int> hist;
  for (const auto& o : orbits)
    ++hist[o.size()];
  Json j = Json::object();
  for (auto [size, count] : hist)
    j[std::to_string(size)] = count;
  return j;
}

Json distinct_means(const std::vector<Orbit>& orbits) {
  std::set<Rational> means;
  for (const auto& o : orbits)
    means.insert(o.mean_size());
  Json j = Json::array();
  for (const auto& m : means)
    j.push_back(rowmotion::to_string(m));
  return j;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::uint64_t catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

Json type_scope(const RootSystem& rs, const PosetVariant& v) { return Json{{"type", rs.name()}, {"variant", v.name()}}; }

// Shared shape of the order/mean claims on root posets.
struct PeriodicTarget {
  std::string claim_id;
  PosetVariant variant;
  std::uint64_t period;        // expected order when -w0 acts trivially
  bool w0_doubles_period;      // when -w0 != id: order 2*period, period-th power = -w0
  Rational target_mean;
};

Report periodic_claim(const RootSystem& rs, const PeriodicTarget& want) {
  Report r{want.claim_id, type_scope(rs, want.variant)};
  const RootPoset rp = root_poset(rs, want.variant);
  const Poset& p = rp.poset;
  const std::string id = poset_id(rs, want.variant);
  const Analysis an = analyze(p);
  const bool twist = want.w0_doubles_period && !rs.w0_is_minus_one();

  r.evidence["antichains"] = an.ans.size();
  r.evidence["elements"] = p.size();
  r.evidence["period"] = want.period;
  r.evidence["w0_is_minus_one"] = rs.w0_is_minus_one();
  r.evidence["order"] = an.order;
  r.evidence["orbit_count"] = an.orbits.size();
  r.evidence["orbit_sizes"] = size_histogram(an.orbits);
  r.evidence["target_mean"] = rowmotion::to_string(want.target_mean);
  r.evidence["orbit_means"] = distinct_means(an.orbits);

  const std::uint64_t expected_order = twist ? 2 * want.period : want.period;
  r.evidence["expected_order"] = expected_order;
  if (an.order != expected_order) {
    // Prefer an orbit whose size does not divide the expected order.
    const Orbit* bad = &an.orbits.back();
    for (const auto& o : an.orbits)
      if (expected_order % o.size() != 0) {
        bad = &o;
        break;
      }
    r.fail("order " + std::to_string(an.order) + " differs from " + std::to_string(expected_order), id, p,
           bad->representative());
  }

  if (twist) {
    const auto perm = minus_w0_root_permutation(rs);
    const auto power = kernels::table_power(an.table, want.period);
    for (std::size_t i = 0; i < an.ans.size(); ++i) {
      auto image = rp.map_roots(an.ans[i], perm);
      if (an.ans.index_of(image) != power[i]) {
        r.fail("rowmotion^" + std::to_string(want.period) + " differs from -w0", id, p, an.ans[i]);
        break;
      }
    }
    r.evidence["power_equals_minus_w0"] = r.status != Status::fail;
  }

  for (const auto& o : an.orbits)
    if (o.mean_size() != want.target_mean) {
      r.fail("orbit mean " + rowmotion::to_string(o.mean_size()) + " differs from " +
                 rowmotion::to_string(want.target_mean),
             id, p, o.representative());
      break;
    }

  // The standard orbit through the rank levels.
  if (!p.empty()) {
    auto g = grading_of(p);
    if (g && g->standard_orbit_hypotheses()) {
      auto so = standard_orbit(p);
      r.evidence["standard_orbit_size"] = so.size();
      if (so.size() != want.period)
        r.fail("standard orbit has size " + std::to_string(so.size()), id, p, ElementSet{});
    } else {
      r.fail("rank levels do not give a standard orbit", id, p, ElementSet{});
    }
  }
  return r;
}

ElementSet support_of(const RootSystem& rs, const RootPoset& rp, const ElementSet& a) {
  ElementSet s;
  a.for_each([&](std::size_t e) {
    const auto& v = rs.root(rp.roots[e]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0)
        s.insert(i);
  });
  return s;
}

bool is_chain(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y)
      if (!p.comparable(x, y))
        return false;
  return true;
}

ElementSet parse_antichain_f4(const RootSystem& rs, const RootPoset& rp, std::string_view text) {
  ElementSet out;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    auto root = parse_root(rs, tok, Convention::paper_f4);
    auto e = rp.element_of_root(root);
    if (!e)
      throw ParseError("root " + std::string(tok) + " is not in the subposet");
    out.insert(*e);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return out;
}

// Replays a printed chain a_0 -> a_1 -> ... ; every arrow must be rowmotion.
void replay_chain(Report& r, const std::string& table, const RootSystem& rs, const PosetVariant& v,
                  const RootPoset& rp, const std::vector<std::string_view>& chain) {
  const std::string id = poset_id(rs, v);
  int arrows = 0;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    auto from = parse_antichain_f4(rs, rp, chain[k]);
    auto to = parse_antichain_f4(rs, rp, chain[k + 1]);
    if (!rp.poset.is_antichain(from)) {
      r.fail(table + ": {" + std::string(chain[k]) + "} is not an antichain", id, rp.poset, from);
      return;
    }
    if (!(rowmotion(rp.poset, from) == to)) {
      r.fail(table + ": arrow {" + std::string(chain[k]) + "} -> {" + std::string(chain[k + 1]) + "} fails", id,
             rp.poset, from);
      return;
    }
    ++arrows;
  }
  r.evidence["arrows_checked"] = r.evidence.value("arrows_checked", 0) + arrows;
}

}  // namespace

// --- fixtures ---------------------------------------------------------------

const std::string_view kPosetP1 =
    "# level-3 poset shaped like the positive roots of A3\n"
    "b1 < m1\nb2 < m1\nb2 < m2\nb3 < m2\nm1 < t\nm2 < t\n";

const std::string_view kPosetP2 =
    "# level-3 poset: three bottom, three middle, one top; m1 is maximal\n"
    "b1 < m1\nb1 < m2\nb2 < m2\nb2 < m3\nb3 < m3\nm2 < t\nm3 < t\n";

// --- individual checks -----------------------------------------------------

Report check_full_root_poset(const RootSystem& rs) {
  const auto h = static_cast<std::uint64_t>(rs.coxeter_number());
  return periodic_claim(rs, {"conj-2.1", PosetVariant::full(), h, true, Rational(rs.rank(), 2)});
}

Report check_no_simple_root_poset(const RootSystem& rs) {
  const std::int64_t h = rs.coxeter_number();
  const std::int64_t n = rs.rank();
  auto r = periodic_claim(rs, {"conj-2.2", PosetVariant::no_simple(), static_cast<std::uint64_t>(h - 1), true,
                               Rational(n * (h - 2), 2 * (h - 1))});
  // With w0 = -1 and h - 1 prime every orbit must have size h - 1.
  bool prime = h - 1 >= 2;
  for (std::int64_t d = 2; d * d <= h - 1; ++d)
    if ((h - 1) % d == 0)
      prime = false;
  if (rs.w0_is_minus_one() && prime) {
    const auto& sizes = r.evidence["orbit_sizes"];
    bool equal = sizes.size() == 1 && sizes.begin().key() == std::to_string(h - 1);
    r.evidence["equal_orbit_sizes"] = equal;
    if (!equal)
      r.fail("h-1 is prime but orbit sizes differ");
  }
  return r;
}

Report check_short_root_poset(const RootSystem& rs) {
  const auto variant = PosetVariant::short_roots();
  if (!rs.two_lengths()) {
    Report r{"conj-2.3", type_scope(rs, variant), Status::unsupported};
    r.evidence["reason"] = rs.name() + " has a single root length";
    return r;
  }
  const auto period = static_cast<std::uint64_t>(rs.dual_coxeter_of_dual());
  std::int64_t short_count = 0;
  for (std::size_t i = 0; i < rs.num_positive(); ++i)
    short_count += rs.is_short(i) ? 1 : 0;
  auto r = periodic_claim(
      rs, {"conj-2.3", variant, period, false, Rational(short_count, static_cast<std::int64_t>(period))});
  std::optional<std::size_t> expected_orbits;
  if (rs.type() == CartanType::B || rs.type() == CartanType::G)
    expected_orbits = 1;
  else if (rs.type() == CartanType::F)
    expected_orbits = 3;
  if (expected_orbits) {
    r.evidence["expected_orbit_count"] = *expected_orbits;
    if (r.evidence["orbit_count"].get<std::size_t>() != *expected_orbits)
      r.fail("orbit count differs from " + std::to_string(*expected_orbits));
  }
  return r;
}

Report check_cn_short_orbits(int n) {
  Report r{"conj-2.4", Json{{"type", "C" + std::to_string(n)}, {"variant", "short"}}};
  const auto rs = build_root_system(CartanType::C, n);
  const auto rp = root_poset(rs, PosetVariant::short_roots());
  const Poset& p = rp.poset;
  const std::string id = poset_id(rs, PosetVariant::short_roots());
  const Analysis an = analyze(p);
  const auto un = static_cast<std::uint64_t>(n);

  r.evidence["antichains"] = an.ans.size();
  r.evidence["expected_antichains"] = binomial(2 * un - 1, un);
  r.evidence["orbit_sizes"] = size_histogram(an.orbits);
  r.evidence["orbit_count"] = an.orbits.size();
  r.evidence["catalan"] = catalan(un - 1);

  if (an.ans.size() != binomial(2 * un - 1, un))
    r.fail("antichain count differs from binomial(2n-1, n)");
  for (const auto& o : an.orbits)
    if (o.size() != 2 * un - 1) {
      r.fail("orbit of size " + std::to_string(o.size()), id, p, o.representative());
      break;
    }
  if (an.orbits.size() != catalan(un - 1))
    r.fail("orbit count differs from Catalan(n-1)");

  // Antichains supported on alpha_1..alpha_{n-2}.
  ElementSet allowed;
  for (int i = 0; i + 2 < n; ++i)
    allowed.insert(static_cast<std::size_t>(i));
  Json reps = Json::array();
  for (const auto& o : an.orbits) {
    int hits = 0;
    const ElementSet* hit = nullptr;
    for (const auto& a : o.antichains)
      if (support_of(rs, rp, a).is_subset_of(allowed)) {
        ++hits;
        hit = &a;
      }
    if (hits != 1) {
      r.fail("orbit meets the A_{n-2} antichains " + std::to_string(hits) + " times", id, p, o.representative());
      break;
    }
    reps.push_back(antichain_labels(p, *hit));
  }
  r.evidence["parabolic_representatives"] = reps;
  return r;
}

Report check_short_no_simple(const RootSystem& rs) {
  const auto variant = PosetVariant::short_no_simple();
  Report r{"short-no-simple", type_scope(rs, variant)};
  if (!rs.two_lengths()) {
    r.status = Status::unsupported;
    r.evidence["reason"] = rs.name() + " has a single root length";
    return r;
  }
  const auto rp = root_poset(rs, variant);
  const Poset& p = rp.poset;
  const std::string id = poset_id(rs, variant);
  const Analysis an = analyze(p);
  r.evidence["elements"] = p.size();
  r.evidence["antichains"] = an.ans.size();
  r.evidence["orbit_sizes"] = size_histogram(an.orbits);
  switch (rs.type()) {
    case CartanType::F:
      if (an.ans.size() != 16)
        r.fail("expected 16 antichains");
      if (an.orbits.size() != 2 || an.orbits[0].size() != 8 || an.orbits[1].size() != 8)
        r.fail("expected two orbits of size 8", id, p, an.orbits.front().representative());
      break;
    case CartanType::B:
    case CartanType::G:
      r.evidence["case"] = "chain";
      if (!is_chain(p) || an.orbits.size() != 1)
        r.fail("expected a chain with a single orbit", id, p, ElementSet{});
      break;
    case CartanType::C: {
      const auto smaller = rs.rank() == 2 ? build_root_system(CartanType::A, 1)
                                          : build_root_system(CartanType::C, rs.rank() - 1);
      r.evidence["reduces_to"] = smaller.name() + "/full";
      auto full = root_poset(smaller, PosetVariant::full());
      if (!poset_isomorphic(p, full.poset))
        r.fail("not isomorphic to " + smaller.name() + "/full");
      break;
    }
    default: break;
  }
  return r;
}

Report check_height_geq_3_f4() {
  const auto rs = build_root_system(CartanType::F, 4);
  const auto variant = PosetVariant::height_geq(3);
  Report r{"height-geq-3", type_scope(rs, variant)};
  const auto rp = root_poset(rs, variant);
  const std::string id = poset_id(rs, variant);
  const Analysis an = analyze(rp.poset);
  std::set<std::size_t> sizes;
  for (const auto& o : an.orbits)
    sizes.insert(o.size());
  r.evidence["antichains"] = an.ans.size();
  r.evidence["orbit_sizes"] = size_histogram(an.orbits);
  r.evidence["order"] = an.order;
  r.evidence["orbit_means"] = distinct_means(an.orbits);
  r.evidence["h_minus_2"] = rs.coxeter_number() - 2;
  if (sizes != std::set<std::size_t>{8, 10})
    r.fail("orbit sizes are not {8, 10}", id, rp.poset, an.orbits.front().representative());
  if (an.order != 40)
    r.fail("order is not 40");
  if (r.evidence["orbit_means"].size() < 2)
    r.fail("orbit means are all equal");
  return r;
}

Report check_alpha1_orbit(int n) {
  Report r{"alpha1-orbit", Json{{"type", "A" + std::to_string(n)}, {"variant", "full"}}};
  if (n < 3) {
    r.status = Status::unsupported;
    r.evidence["reason"] = "requires n >= 3";
    return r;
  }
  const type_a::RootPosetA ra(n);
  const Poset& p = ra.poset();
  const std::string id = "A" + std::to_string(n) + "/full";
  const ElementSet start{ra.element(1, 1)};
  ElementSet cur = start;
  for (int k = 1; k <= n; ++k) {
    cur = rowmotion(p, cur);
    ElementSet expected;
    // Roots of A_{n-1} = Delta(alpha_1..alpha_{n-1}) of height n+1-k.
    for (int i = 1; i <= n - 1; ++i) {
      int j = i + (n + 1 - k) - 1;
      if (j <= n - 1)
        expected.insert(ra.element(i, j));
    }
    if (k < n)
      expected.insert(ra.element(k + 1, n));
    if (!(cur == expected)) {
      r.fail("closed form fails at k=" + std::to_string(k), id, p, cur);
      return r;
    }
  }
  cur = rowmotion(p, cur);
  if (!(cur == ElementSet{ra.element(n, n)}))
    r.fail("power n+1 is not {alpha_n}", id, p, cur);
  const Orbit o = orbit_of(p, start);
  r.evidence["orbit_size"] = o.size();
  r.evidence["orbit_mean"] = rowmotion::to_string(o.mean_size());
  if (o.size() != static_cast<std::size_t>(2 * n + 2))
    r.fail("orbit size is not 2n+2", id, p, start);
  if (o.mean_size() != Rational(n, 2))
    r.fail("orbit mean is not n/2", id, p, start);
  return r;
}

Report check_modified_poset() {
  Report r{"modified-poset", Json{{"posets", {"P1", "P2"}}}};
  const Poset p1 = parse_poset(kPosetP1);
  const Poset p2 = parse_poset(kPosetP2);
  const Analysis a1 = analyze(p1);
  const Analysis a2 = analyze(p2);

  auto sizes = [](const Analysis& a) {
    std::vector<std::size_t> s;
    for (const auto& o : a.orbits)
      s.push_back(o.size());
    return s;
  };
  r.evidence["P1"] = Json{{"antichains", a1.ans.size()},
                          {"orbit_sizes", sizes(a1)},
                          {"order", a1.order},
                          {"orbit_means", distinct_means(a1.orbits)}};
  auto g2 = grading_of(p2);
  r.evidence["P2"] = Json{{"antichains", a2.ans.size()},
                          {"orbit_sizes", sizes(a2)},
                          {"order", a2.order},
                          {"orbit_means", distinct_means(a2.orbits)},
                          {"graded_level", g2 ? g2->level : 0},
                          {"bottom_is_minimal", g2 && g2->bottom_is_minimal},
                          {"top_is_maximal", g2 && g2->top_is_maximal}};

  const auto a3 = root_poset(build_root_system(CartanType::A, 3), PosetVariant::full());
  if (!poset_isomorphic(p1, a3.poset))
    r.fail("P1 is not isomorphic to A3/full");
  if (sizes(a1) != std::vector<std::size_t>{2, 4, 8})
    r.fail("P1 orbit sizes are not {8, 4, 2}", "custom:P1", p1, a1.orbits.front().representative());
  for (const auto& o : a1.orbits)
    if (o.mean_size() != Rational(3, 2))
      r.fail("P1 orbit mean is not 3/2", "custom:P1", p1, o.representative());
  if (sizes(a2) != std::vector<std::size_t>{7, 16})
    r.fail("P2 orbit sizes are not {16, 7}", "custom:P2", p2, a2.orbits.front().representative());
  if (a2.order != 112)
    r.fail("P2 order is not 112");
  if (a2.orbits.size() == 2 && a2.orbits[0].mean_size() == a2.orbits[1].mean_size())
    r.fail("P2 orbit means coincide");
  if (!g2 || g2->level != 3)
    r.fail("P2 is not graded of level 3");
  return r;
}

Report check_edge_identity(const RootSystem& rs, const PosetVariant& v) {
  Report r{"edge-identity", type_scope(rs, v)};
  const auto rp = root_poset(rs, v);
  const auto ans = enumerate_antichains(rp.poset);
  const auto sum = antichain_lattice_edge_count(rp.poset, ans);
  const auto covers = antichain_lattice_cover_count(rp.poset, ans);
  const auto denom = static_cast<std::int64_t>(rp.level + 1);
  const Rational predicted(static_cast<std::int64_t>(ans.size() * rp.poset.size()), denom);
  r.evidence["antichains"] = ans.size();
  r.evidence["elements"] = rp.poset.size();
  r.evidence["denominator"] = denom;
  r.evidence["sum_of_sizes"] = sum;
  r.evidence["lattice_covers"] = covers;
  r.evidence["predicted"] = rowmotion::to_string(predicted);
  if (Rational(static_cast<std::int64_t>(sum)) != predicted)
    r.fail("sum of sizes differs from #AN * #P / (level + 1)");
  if (covers != sum)
    r.fail("cover count of the antichain lattice differs from the sum of sizes");
  return r;
}

namespace {

Report f4_table_report(const std::string& table) {
  return Report{"appendix-f4", Json{{"type", "F4"}, {"table", table}, {"convention", "paper-f4"}}};
}

}  // namespace

Report check_f4_table_i() {
  Report r = f4_table_report("I");
  const auto rs = build_root_system(CartanType::F, 4);
  if (print_root(rs, rs.theta(), Convention::paper_f4) != "2432" ||
      print_root(rs, *rs.theta_s(), Convention::paper_f4) != "2321")
    r.fail("highest roots do not print as 2432 / 2321");
  {
    const auto rp = root_poset(rs, PosetVariant::full());
    const Analysis an = analyze(rp.poset);
    std::map<std::size_t, std::size_t> orbit_index;  // antichain index -> orbit
    for (std::size_t k = 0; k < an.orbits.size(); ++k)
      for (auto i : an.orbits[k].indices)
        orbit_index[i] = k;
    const std::vector<std::pair<std::string_view, std::size_t>> reps = {
        {"1000", 12}, {"0100", 12}, {"0010", 12},      {"0001", 12},       {"0011", 12}, {"1100", 12},
        {"1111", 12}, {"2432", 12}, {"1000,0010", 2}, {"0110", 3}, {"0001,1110", 4}};
    std::set<std::size_t> seen_orbits;
    for (auto [text, size] : reps) {
      auto a = parse_antichain_f4(rs, rp, text);
      auto idx = an.ans.find(a);
      if (!idx) {
        r.fail("I: {" + std::string(text) + "} is not an antichain", "F4/full", rp.poset, a);
        continue;
      }
      const auto& o = an.orbits[orbit_index[*idx]];
      seen_orbits.insert(orbit_index[*idx]);
      if (o.size() != size)
        r.fail("I: {" + std::string(text) + "} lies in an orbit of size " + std::to_string(o.size()), "F4/full",
               rp.poset, a);
    }
    r.evidence["I"] = Json{{"antichains", an.ans.size()},
                           {"orbit_sizes", size_histogram(an.orbits)},
                           {"distinct_orbits_hit", seen_orbits.size()}};
    if (an.ans.size() != 105 || an.orbits.size() != 11)
      r.fail("I: expected 105 antichains in 11 orbits");
    if (size_histogram(an.orbits) != Json{{"2", 1}, {"3", 1}, {"4", 1}, {"12", 8}})
      r.fail("I: orbit sizes are not 12 x 8, 4, 3, 2");
    if (seen_orbits.size() != reps.size())
      r.fail("I: representatives do not hit eleven distinct orbits");
    // {1000, 0010} -> {0100, 0001}
    replay_chain(r, "I", rs, PosetVariant::full(), rp, {"1000,0010", "0100,0001", "1000,0010"});
  }
  return r;
}

Report check_f4_table_ii() {
  Report r = f4_table_report("II");
  const auto rs = build_root_system(CartanType::F, 4);
  {
    const auto rp = root_poset(rs, PosetVariant::no_simple());
    const Analysis an = analyze(rp.poset);
    r.evidence["II"] = Json{{"antichains", an.ans.size()}, {"orbit_sizes", size_histogram(an.orbits)}};
    if (an.ans.size() != 66 || size_histogram(an.orbits) != Json{{"11", 6}})
      r.fail("II: expected 66 antichains in six orbits of 11");
    replay_chain(r, "II", rs, PosetVariant::no_simple(), rp, {"2432", "2431"});
    replay_chain(r, "II", rs, PosetVariant::no_simple(), rp, {"", "2432"});
    const std::vector<std::vector<std::string_view>> chains = {
        {"1321", "2221", "1321,2211", "1221,2210", "0221,1211", "0211,1111,2210", "0111,1210", "0011,0210,1110",
         "0110,1100", "0011", "2210", "1321"},
        {"1221", "0221,2211", "1211,2210", "0221,1111,1210", "0211,1110", "0111,0210,1100", "0011,0110", "1100",
         "0221", "2211", "1321,2210", "1221"},
        {"1211", "0221,1111,2210", "0211,1210", "1111,0210", "0111,1110", "0011,0210,1100", "0110", "0011,1100",
         "0210", "1111", "0221,2210", "1211"},
        {"1210", "0221,1111", "0211,2210", "1111,1210", "0221,1110", "0211,1100", "0111,0210", "0011,1110",
         "0210,1100", "0111", "0011,2210", "1210"},
        {"1110", "0221,1100", "0211", "1111,2210", "0221,1210", "0211,1111", "0111,2210", "0011,1210", "0210,1110",
         "0111,1100", "0011,0210", "1110"},
    };
    for (const auto& c : chains)
      replay_chain(r, "II", rs, PosetVariant::no_simple(), rp, c);
    // Height-2 level maps to the empty antichain.
    ElementSet level2;
    for (std::size_t e = 0; e < rp.roots.size(); ++e)
      if (rs.height(rp.roots[e]) == 2)
        level2.insert(e);
    if (!rowmotion(rp.poset, level2).empty())
      r.fail("II: the height-2 level does not map to the empty antichain", "F4/no-simple", rp.poset, level2);
  }
  return r;
}

Report check_f4_table_iii() {
  Report r = f4_table_report("III");
  const auto rs = build_root_system(CartanType::F, 4);
  {
    const auto rp = root_poset(rs, PosetVariant::short_roots());
    const Analysis an = analyze(rp.poset);
    r.evidence["III"] = Json{{"antichains", an.ans.size()}, {"orbit_sizes", size_histogram(an.orbits)}};
    if (an.ans.size() != 21 || size_histogram(an.orbits) != Json{{"3", 1}, {"9", 2}})
      r.fail("III: expected 21 antichains in orbits of sizes 9, 9, 3");
    replay_chain(r, "III", rs, PosetVariant::short_roots(), rp, {"2321", "1321"});
    replay_chain(r, "III", rs, PosetVariant::short_roots(), rp, {"1000,0100", "", "2321"});
    replay_chain(r, "III", rs, PosetVariant::short_roots(), rp,
                 {"0100", "1000", "0111", "1210", "1111", "0111,1210", "1110", "0111,1100", "0110,1000", "0100"});
    replay_chain(r, "III", rs, PosetVariant::short_roots(), rp, {"1100", "0111,1000", "0110", "1100"});
    auto so = standard_orbit(rp.poset);
    if (so.size() != 9)
      r.fail("III: standard orbit does not have size 9");
  }
  return r;
}

Report check_oy_suite(int n) {
  Report r{"oy-suite", Json{{"type", "A" + std::to_string(n)}, {"variant", "full"}}};
  const type_a::RootPosetA ra(n);
  const Poset& p = ra.poset();
  const std::string id = "A" + std::to_string(n) + "/full";
  const Analysis an = analyze(p);
  const auto inverse = kernels::inverse_rowmotion_table(p, an.ans);
  r.evidence["antichains"] = an.ans.size();

  std::vector<int> oy(an.ans.size());
  for (std::size_t i = 0; i < an.ans.size(); ++i) {
    const auto& a = an.ans[i];
    const auto arr = ra.to_array(a);
    if (!(ra.from_array(arr) == a)) {
      r.fail("array round trip", id, p, a);
      return r;
    }
    oy[i] = type_a::oy_ideal_form(ra, a);
    if (oy[i] != type_a::oy_difference_form(arr))
      r.fail("ideal and difference forms disagree", id, p, a);
    bool range_ok = true;
    a.for_each([&](std::size_t g) {
      int ri = removal_index(p, a, g);
      range_ok = range_ok && ri >= 0 && ri <= 2;
    });
    if (!range_ok)
      r.fail("removal index outside {0,1,2}", id, p, a);
    if (!(type_a::rowmotion_array(ra, a) == an.ans[an.table[i]]))
      r.fail("array rowmotion disagrees with the generic operator", id, p, a);
    if (!(type_a::inverse_rowmotion_array(ra, a) == an.ans[inverse[i]]))
      r.fail("array inverse disagrees with the generic inverse", id, p, a);
    const auto dual = type_a::star(ra, a);
    if (!(type_a::star(ra, dual) == a))
      r.fail("duality is not an involution", id, p, a);
    if (a.size() + dual.size() != static_cast<std::size_t>(n))
      r.fail("#G + #G* != n", id, p, a);
    if (!(type_a::star(ra, an.ans[an.table[i]]) == inverse_rowmotion(p, dual)))
      r.fail("X(G)* != X^-1(G*)", id, p, a);
    if (type_a::oy_ideal_form(ra, dual) != oy[i])
      r.fail("Y(G) != Y(G*)", id, p, a);
  }
  for (std::size_t i = 0; i < an.ans.size(); ++i)
    if (oy[an.table[i]] != oy[i]) {
      r.fail("OY is not rowmotion-invariant", id, p, an.ans[i]);
      break;
    }

  // Duality on subsets of simple roots and on height levels.
  ElementSet simple;
  for (int t = 1; t <= n; ++t)
    simple.insert(ra.element(t, t));
  for (const auto& a : an.ans)
    if (a.is_subset_of(simple) && !(type_a::star(ra, a) == simple - a))
      r.fail("simple-root subset dual is not the complement", id, p, a);
  auto level = [&](int ht) {
    ElementSet s;
    for (int i = 1; i + ht - 1 <= n; ++i)
      s.insert(ra.element(i, i + ht - 1));
    return s;
  };
  for (int i = 1; i <= n + 1; ++i)
    if (!(type_a::star(ra, level(i)) == level(n + 2 - i)))
      r.fail("Delta(i)* != Delta(n+2-i) at i=" + std::to_string(i), id, p, level(i));

  // Extremes of Y: 0 exactly on the standard orbit, n-1 exactly on the
  // alternating simple-root pair.
  const auto [min_it, max_it] = std::minmax_element(oy.begin(), oy.end());
  r.evidence["min_oy"] = *min_it;
  r.evidence["max_oy"] = *max_it;
  if (*min_it != 0 || *max_it != n - 1)
    r.fail("OY range is not [0, n-1]");
  std::set<ElementSet, std::less<>> zero, top, standard, alternating;
  for (std::size_t i = 0; i < oy.size(); ++i) {
    if (oy[i] == 0)
      zero.insert(an.ans[i]);
    if (oy[i] == n - 1)
      top.insert(an.ans[i]);
  }
  for (const auto& a : standard_orbit(p).antichains)
    standard.insert(a);
  ElementSet odd, even;
  for (int t = 1; t <= n; ++t)
    (t % 2 ? odd : even).insert(ra.element(t, t));
  alternating = {odd, even};
  if (zero != standard)
    r.fail("OY = 0 set differs from the standard orbit");
  if (top != alternating)
    r.fail("OY = n-1 set differs from the alternating simple roots");

  // Component counts match the chi sums on all subsets of [n].
  bool components_ok = true;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> seq;
    for (int t = 1; t <= n; ++t)
      if (mask & (1U << (t - 1)))
        seq.push_back(t);
    const auto comp = type_a::complement(seq, n);
    components_ok = components_ok && type_a::lower_chi_sum(seq) == type_a::lower_components(seq) &&
                    type_a::upper_chi_sum(seq, n) == type_a::upper_components(seq, n) &&
                    type_a::lower_chi_sum(seq) == type_a::upper_chi_sum(comp, n);
  }
  if (!components_ok)
    r.fail("connected-component identity fails");
  r.evidence["orbits"] = an.orbits.size();
  return r;
}

Report check_weighted_oy_cn(int n) {
  Report r{"weighted-oy-cn", Json{{"type", "C" + std::to_string(n)}, {"variant", "full"}}};
  const auto rs = build_root_system(CartanType::C, n);
  const auto rp = root_poset(rs, PosetVariant::full());
  const Poset& p = rp.poset;
  const std::string id = poset_id(rs, PosetVariant::full());
  std::vector<int> weighted(p.size()), unit(p.size(), 1);
  for (std::size_t e = 0; e < p.size(); ++e)
    weighted[e] = rs.is_short(rp.roots[e]) ? 2 : 1;
  const Analysis an = analyze(p);
  std::optional<ElementSet> unweighted_witness;
  std::size_t constant_orbits = 0;
  for (const auto& o : an.orbits) {
    const auto w0 = weighted_oy(p, o.representative(), weighted);
    const auto u0 = weighted_oy(p, o.representative(), unit);
    bool w_const = true;
    for (const auto& a : o.antichains) {
      if (weighted_oy(p, a, weighted) != w0) {
        if (w_const)
          r.fail("weighted sum " + std::to_string(weighted_oy(p, a, weighted)) + " differs from " +
                     std::to_string(w0) + " at the orbit representative",
                 id, p, a);
        w_const = false;
      }
      if (!unweighted_witness && weighted_oy(p, a, unit) != u0)
        unweighted_witness = a;
    }
    constant_orbits += w_const ? 1 : 0;
  }
  r.evidence["orbits"] = an.orbits.size();
  r.evidence["weighted_constant_orbits"] = constant_orbits;
  if (unweighted_witness)
    r.evidence["unweighted_not_invariant_at"] = antichain_labels(p, *unweighted_witness);
  else
    r.fail("no witness that the unweighted sum is not invariant");
  return r;
}

Report check_counts(const RootSystem& rs) {
  Report r{"counting", Json{{"type", rs.name()}}};
  std::vector<PosetVariant> variants = {PosetVariant::full(), PosetVariant::no_simple()};
  if (rs.two_lengths())
    variants.push_back(PosetVariant::short_roots());
  for (const auto& v : variants) {
    const auto rp = root_poset(rs, v);
    const auto count = enumerate_antichains(rp.poset).size();
    const auto expected = expected_antichain_count(rs, v);
    r.evidence[v.name()] = Json{{"enumerated", count}, {"formula", expected}};
    if (count != expected)
      r.fail(v.name() + ": enumerated " + std::to_string(count) + " != " + std::to_string(expected));
  }
  if (rs.type() == CartanType::F) {
    const auto count = enumerate_antichains(root_poset(rs, PosetVariant::short_no_simple()).poset).size();
    r.evidence["short-no-simple"] = Json{{"enumerated", count}, {"expected", 16}};
    if (count != 16)
      r.fail("short-no-simple: enumerated " + std::to_string(count) + " != 16");
  }
  return r;
}

Report check_isomorphisms() {
  Report r{"isomorphisms", Json::object()};
  Json facts = Json::array();
  auto expect_iso = [&](const std::string& name, const Poset& a, const Poset& b) {
    bool iso = poset_isomorphic(a, b).has_value();
    facts.push_back(Json{{"fact", name}, {"isomorphic", iso}});
    if (!iso)
      r.fail(name + " not isomorphic");
  };
  auto rp = [](CartanType t, int n, const PosetVariant& v) { return root_poset(build_root_system(t, n), v).poset; };
  for (int n = 2; n <= 5; ++n)
    expect_iso("B" + std::to_string(n) + "/full ~ C" + std::to_string(n) + "/full",
               rp(CartanType::B, n, PosetVariant::full()), rp(CartanType::C, n, PosetVariant::full()));
  for (int n = 1; n <= 6; ++n)
    expect_iso("A" + std::to_string(n + 1) + "/no-simple ~ A" + std::to_string(n) + "/full",
               rp(CartanType::A, n + 1, PosetVariant::no_simple()), rp(CartanType::A, n, PosetVariant::full()));
  for (int n = 2; n <= 5; ++n)
    expect_iso("C" + std::to_string(n) + "/short ~ C" + std::to_string(n) + "/no-simple",
               rp(CartanType::C, n, PosetVariant::short_roots()), rp(CartanType::C, n, PosetVariant::no_simple()));
  for (int n = 3; n <= 5; ++n)
    expect_iso("C" + std::to_string(n) + "/short-no-simple ~ C" + std::to_string(n - 1) + "/full",
               rp(CartanType::C, n, PosetVariant::short_no_simple()), rp(CartanType::C, n - 1, PosetVariant::full()));
  // Control: a chain is not an antichain.
  auto chain = Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto flat = Poset::from_covers({"a", "b", "c"}, {});
  bool separated = !poset_isomorphic(chain, flat);
  facts.push_back(Json{{"fact", "chain(3) !~ antichain(3)"}, {"isomorphic", !separated}});
  if (!separated)
    r.fail("chain and antichain reported isomorphic");
  r.evidence["facts"] = facts;
  return r;
}

Report check_engine(const RootSystem& rs) {
  Report r{"engine", Json{{"type", rs.name()}}};
  std::vector<PosetVariant> variants = {PosetVariant::full(), PosetVariant::no_simple(), PosetVariant::height_geq(3)};
  if (rs.two_lengths()) {
    variants.push_back(PosetVariant::short_roots());
    variants.push_back(PosetVariant::short_no_simple());
  }
  Json per_variant = Json::object();
  for (const auto& v : variants) {
    const auto rp = root_poset(rs, v);
    const Poset& p = rp.poset;
    const std::string id = poset_id(rs, v);
    const auto ans = enumerate_antichains(p);
    const auto table = kernels::rowmotion_table(p, ans);
    const auto inverse = kernels::inverse_rowmotion_table(p, ans);
    if (table != kernels::rowmotion_table_serial(p, ans) ||
        inverse != kernels::inverse_rowmotion_table_serial(p, ans))
      r.fail(id + ": parallel and serial kernels disagree");
    for (std::size_t i = 0; i < ans.size(); ++i) {
      const auto& a = ans[i];
      if (!p.is_antichain(a) || !p.is_antichain(rowmotion(p, a)) || !p.is_antichain(inverse_rowmotion(p, a)))
        r.fail(id + ": non-antichain encountered", id, p, a);
      if (inverse[table[i]] != i || table[inverse[i]] != i)
        r.fail(id + ": rowmotion is not inverted", id, p, a);
      if (!(minimal_elements(p, upper_ideal(p, a)) == a))
        r.fail(id + ": minimal elements of the generated ideal differ", id, p, a);
    }
    const auto orbits = all_orbits(p, ans);
    std::size_t total = 0;
    for (const auto& o : orbits)
      total += o.size();
    if (total != ans.size())
      r.fail(id + ": orbit sizes do not sum to #AN");

    Json facts{{"antichains", ans.size()}};
    if (!p.empty()) {
      auto g = grading_of(p);
      if (!g || g->rank != rp.attached_rank(rs) || g->level != rp.level) {
        r.fail(id + ": computed grading differs from the height grading");
      } else if (g->standard_orbit_hypotheses()) {
        auto so = standard_orbit(p);
        facts["standard_orbit"] = so.size();
        bool found = std::any_of(orbits.begin(), orbits.end(), [&](const Orbit& o) {
          return o.antichains == so.antichains;
        });
        if (so.size() != static_cast<std::size_t>(g->level + 1) || !found)
          r.fail(id + ": standard orbit malformed");
      }
    }
    per_variant[v.name()] = facts;
  }
  r.evidence["variants"] = per_variant;
  return r;
}

// --- registry ----------------------------------------------------------------

std::vector<std::string> default_matrix(bool include_large) {
  std::vector<std::string> m;
  for (int n = 1; n <= 7; ++n) m.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) m.push_back("B" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) m.push_back("C" + std::to_string(n));
  m.push_back("D4");
  m.push_back("D5");
  m.push_back("E6");
  if (include_large) {
    m.push_back("E7");
    m.push_back("E8");
  }
  m.push_back("F4");
  m.push_back("G2");
  return m;
}

namespace {

using Job = std::function<Report()>;

std::vector<std::string> types_for(const Scope& s, const std::function<bool(const std::string&)>& keep) {
  if (s.type)
    return {*s.type};
  std::vector<std::string> out;
  for (auto& t : default_matrix(s.include_large))
    if (keep(t))
      out.push_back(t);
  return out;
}

bool two_length_name(const std::string& t) {
  return !t.empty() && (t[0] == 'B' || t[0] == 'C' || t[0] == 'F' || t[0] == 'G');
}

// Rank-parameterized claims: explicit --n wins, then a matching --type.
std::vector<int> ranks_for(const Scope& s, char family, int lo, int hi) {
  if (s.n)
    return {*s.n};
  if (s.type) {
    auto rs = build_root_system(*s.type);
    if (to_char(rs.type()) != family)
      return {};
    return {rs.rank()};
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n)
    out.push_back(n);
  return out;
}

bool single_applies(const Scope& s, const std::string& type) { return !s.type || *s.type == type; }

std::vector<Job> by_type(const Scope& s, const std::function<bool(const std::string&)>& keep,
                         Report (*check)(const RootSystem&)) {
  std::vector<Job> jobs;
  for (auto& t : types_for(s, keep))
    jobs.push_back([t, check] { return check(build_root_system(t)); });
  return jobs;
}

struct ClaimDef {
  std::string id;
  std::string description;
  std::function<std::vector<Job>(const Scope&)> jobs;
};

const std::vector<ClaimDef>& definitions() {
  static const std::vector<ClaimDef> defs = {
      {"counting", "antichain counts match the closed-form products",
       [](const Scope& s) { return by_type(s, [](auto&) { return true; }, check_counts); }},
      {"conj-2.1", "full root poset: order h (or 2h with -w0), orbit means n/2",
       [](const Scope& s) { return by_type(s, [](auto&) { return true; }, check_full_root_poset); }},
      {"conj-2.2", "roots minus simple roots: order h-1 (or 2h-2 with -w0), means n(h-2)/(2(h-1))",
       [](const Scope& s) {
         // A1 and A2 leave at most one element; excluded from the default run.
         return by_type(s, [](const std::string& t) { return t != "A1" && t != "A2"; },
                        check_no_simple_root_poset);
       }},
      {"conj-2.3", "short roots: order hot(theta_s)+1, means #short/(hot(theta_s)+1)",
       [](const Scope& s) { return by_type(s, two_length_name, check_short_root_poset); }},
      {"conj-2.4", "short roots of C_n: orbits of size 2n-1, Catalan(n-1) of them, unique A_{n-2} member",
       [](const Scope& s) {
         std::vector<Job> jobs;
         for (int n : ranks_for(s, 'C', 2, 5))
           jobs.push_back([n] { return check_cn_short_orbits(n); });
         return jobs;
       }},
      {"short-no-simple", "short roots minus short simple roots",
       [](const Scope& s) { return by_type(s, two_length_name, check_short_no_simple); }},
      {"height-geq-3", "F4 roots of height >= 3: orbits 10 and 8, order 40, unequal means",
       [](const Scope& s) {
         return single_applies(s, "F4") ? std::vector<Job>{check_height_geq_3_f4} : std::vector<Job>{};
       }},
      {"alpha1-orbit", "closed form for the orbit of {alpha_1} in A_n",
       [](const Scope& s) {
         std::vector<Job> jobs;
         for (int n : ranks_for(s, 'A', 3, 7))
           jobs.push_back([n] { return check_alpha1_orbit(n); });
         return jobs;
       }},
      {"modified-poset", "level-3 posets: {8,4,2} versus {16,7}",
       [](const Scope& s) { return s.type ? std::vector<Job>{} : std::vector<Job>{check_modified_poset}; }},
      {"edge-identity", "sum of antichain sizes versus #AN * #P / (level + 1)",
       [](const Scope& s) {
         std::vector<Job> jobs;
         for (auto& t : types_for(s, [](auto&) { return true; }))
           for (auto v : {PosetVariant::full(), PosetVariant::no_simple()})
             jobs.push_back([t, v] { return check_edge_identity(build_root_system(t), v); });
         return jobs;
       }},
      {"appendix-f4", "F4 orbit tables: sizes, representatives, chains",
       [](const Scope& s) {
         return single_applies(s, "F4") ? std::vector<Job>{check_f4_table_i, check_f4_table_ii, check_f4_table_iii}
                                        : std::vector<Job>{};
       }},
      {"oy-suite", "OY-invariant, array rowmotion and duality on A_n",
       [](const Scope& s) {
         std::vector<Job> jobs;
         for (int n : ranks_for(s, 'A', 1, 7))
           jobs.push_back([n] { return check_oy_suite(n); });
         return jobs;
       }},
      {"weighted-oy-cn", "short-weighted removal-index sum on C_n orbits",
       [](const Scope& s) {
         std::vector<Job> jobs;
         for (int n : ranks_for(s, 'C', 2, 5))
           jobs.push_back([n] { return check_weighted_oy_cn(n); });
         return jobs;
       }},
      {"isomorphisms", "isomorphisms between root-poset variants",
       [](const Scope& s) { return s.type ? std::vector<Job>{} : std::vector<Job>{check_isomorphisms}; }},
      {"engine", "bijectivity, antichain outputs, standard orbits, kernel agreement",
       [](const Scope& s) { return by_type(s, [](auto&) { return true; }, check_engine); }},
  };
  return defs;
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    for (const auto& d : definitions()) {
      auto jobs = d.jobs;
      auto id = d.id;
      out.push_back({d.id, d.description, [jobs, id](const Scope& s) {
                       auto list = jobs(s);
                       std::vector<Report> reports;
                       for (auto& j : list)
                         reports.push_back(j());
                       return reports;
                     }});
    }
    return out;
  }();
  return claims;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id)
      return &c;
  return nullptr;
}

std::vector<Report> run_claims(const std::vector<const Claim*>& claims, const Scope& scope) {
  // Flatten every claim into independent jobs, run them in parallel, and
  // keep the registry/scope ordering for output.
  std::vector<std::pair<std::string, Job>> jobs;
  for (const auto* c : claims) {
    for (const auto& d : definitions()) {
      if (d.id != c->id)
        continue;
      std::vector<Job> list;
      try {
        list = d.jobs(scope);
      } catch (const std::exception& e) {
        const std::string msg = e.what();
        list.push_back([msg] {
          Report r;
          r.fail(std::string("invalid scope: ") + msg);
          return r;
        });
      }
      for (auto& j : list)
        jobs.emplace_back(d.id, std::move(j));
    }
  }
  std::vector<Report> out(jobs.size());
  const auto n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    auto& [id, job] = jobs[static_cast<std::size_t>(k)];
    Report rep;
    try {
      rep = job();
    } catch (const std::exception& e) {
      rep = Report{id};
      rep.fail(std::string("exception: ") + e.what());
    }
    rep.claim_id = id;
    out[static_cast<std::size_t>(k)] = std::move(rep);
  }
  return out;
}

}  // namespace rowmotion::harness
