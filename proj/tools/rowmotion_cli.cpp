// rowmotion: command-line front end for the rowmotion engine.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rowmotion/errors.hpp"
#include "rowmotion/harness.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/poset_io.hpp"
#include "rowmotion/rational.hpp"
#include "rowmotion/root_system.hpp"
#include "rowmotion/type_a.hpp"

namespace {

using namespace rowmotion;
using harness::Json;

constexpr int kArgumentError = 2;
constexpr int kFileFormatError = 3;

// Raised for bad user input; carries the exit code.
struct UsageError : std::runtime_error {
  int code;
  UsageError(const std::string& what, int c = kArgumentError) : std::runtime_error(what), code(c) {}
};

std::size_t max_elements() {
  const char* env = std::getenv("ROWMOTION_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0')
    return 130;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw UsageError(std::string("ROWMOTION_MAX_ELEMENTS='") + env + "' is not a positive integer");
  return v;
}

void guard_size(const Poset& p, const std::string& what) {
  const auto limit = max_elements();
  if (p.size() > limit)
    throw UsageError(what + " has " + std::to_string(p.size()) + " elements, above the limit of " +
                     std::to_string(limit) + " (set ROWMOTION_MAX_ELEMENTS to raise it)");
}

Convention parse_convention(const std::string& s) {
  if (s == "bourbaki")
    return Convention::bourbaki;
  if (s == "paper-f4")
    return Convention::paper_f4;
  if (s == "interval")
    return Convention::interval_a;
  throw UsageError("unknown convention '" + s + "' (bourbaki, paper-f4, interval)");
}

// A poset the commands operate on: a root subposet or a custom file.
struct Target {
  std::optional<RootSystem> rs;
  std::optional<RootPoset> rp;
  Poset poset;
  Convention convention = Convention::bourbaki;
  std::string id;
  std::optional<PosetVariant> variant;

  bool is_type_a() const { return rs && rs->type() == CartanType::A; }

  std::string print(std::size_t e) const {
    if (!rp)
      return poset.label(e);
    const auto root = rp->roots[e];
    if (is_type_a() && convention != Convention::bourbaki) {
      auto s = print_root(*rs, root, Convention::interval_a);  // "(i,j)"
      auto comma = s.find(',');
      return s.substr(1, comma - 1) + "-" + s.substr(comma + 1, s.size() - comma - 2);
    }
    return print_root(*rs, root, convention);
  }

  std::vector<std::string> tokens(const ElementSet& a) const {
    std::vector<std::size_t> elems = a.members();
    if (rp && !is_type_a()) {
      // Height first, then descending in the printed notation.
      std::vector<std::pair<int, std::string>> keyed;
      for (auto e : elems)
        keyed.emplace_back(rs->height(rp->roots[e]), print(e));
      std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
      });
      std::vector<std::string> out;
      for (auto& k : keyed)
        out.push_back(k.second);
      return out;
    }
    if (is_type_a()) {
      std::vector<std::pair<std::pair<int, int>, std::size_t>> keyed;
      type_a::RootPosetA ra(*rs);
      for (auto e : elems) {
        auto r = rp->roots[e];
        auto ae = ra.root_poset().element_of_root(r).value();
        keyed.emplace_back(ra.interval(ae), e);
      }
      std::sort(keyed.begin(), keyed.end());
      elems.clear();
      for (auto& k : keyed)
        elems.push_back(k.second);
    }
    std::vector<std::string> out;
    for (auto e : elems)
      out.push_back(print(e));
    return out;
  }

  std::string format(const ElementSet& a) const {
    if (a.empty())
      return "{}";
    std::string s;
    for (const auto& t : tokens(a))
      s += (s.empty() ? "" : ",") + t;
    return s;
  }

  std::size_t parse_token(const std::string& tok) const {
    if (!rp) {
      auto e = poset.index_of(tok);
      if (!e)
        throw UsageError("unknown element '" + tok + "'");
      return *e;
    }
    std::size_t root = 0;
    try {
      const bool interval = is_type_a() && tok.find_first_of("-(") != std::string::npos;
      root = parse_root(*rs, tok, interval ? Convention::interval_a : convention);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    auto e = rp->element_of_root(root);
    if (!e)
      throw UsageError("root '" + tok + "' is not in " + id);
    return *e;
  }

  ElementSet parse(const std::string& spec) const {
    ElementSet a;
    if (spec.empty() || spec == "{}")
      return a;
    std::string body = spec;
    if (body.front() == '{' && body.back() == '}')
      body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty())
        throw UsageError("empty token in antichain '" + spec + "'");
      a.insert(parse_token(tok));
    }
    for (auto x : a.members())
      for (auto y : a.members())
        if (x != y && poset.leq(x, y))
          throw UsageError("not an antichain: " + print(x) + " < " + print(y));
    return a;
  }
};

Target make_target(const std::string& type, const std::string& custom, const std::string& variant,
                   const std::string& convention) {
  Target t;
  if (!custom.empty()) {
    if (!type.empty())
      throw UsageError("give either a root-system type or --custom, not both");
    if (!std::filesystem::exists(custom))
      throw UsageError("no such file '" + custom + "'");
    try {
      t.poset = load_poset(custom);
    } catch (const Error& e) {
      throw UsageError(custom + ": " + e.what(), kFileFormatError);
    }
    t.id = "custom:" + custom;
    guard_size(t.poset, t.id);
    return t;
  }
  if (type.empty())
    throw UsageError("a root-system type (e.g. F4) or --custom FILE is required");
  try {
    t.rs = build_root_system(type);
    t.variant = PosetVariant::parse(variant);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  t.id = harness::poset_id(*t.rs, *t.variant);
  if (convention.empty()) {
    t.convention = t.is_type_a() ? Convention::interval_a : Convention::bourbaki;
  } else {
    t.convention = parse_convention(convention);
    if (t.convention == Convention::paper_f4 && t.rs->type() != CartanType::F)
      throw UsageError("paper-f4 convention applies to F4 only");
    if (t.convention == Convention::interval_a && !t.is_type_a())
      throw UsageError("interval convention applies to type A only");
  }
  // Size guard before building: the positive roots bound the subposet.
  if (t.rs->num_positive() > max_elements())
    throw UsageError(t.rs->name() + " has " + std::to_string(t.rs->num_positive()) +
                     " positive roots, above the limit of " + std::to_string(max_elements()) +
                     " (set ROWMOTION_MAX_ELEMENTS to raise it)");
  t.rp = root_poset(*t.rs, *t.variant);
  t.poset = t.rp->poset;
  return t;
}

std::optional<std::uint64_t> expected_count(const Target& t) {
  if (!t.rs)
    return std::nullopt;
  try {
    return expected_antichain_count(*t.rs, *t.variant);
  } catch (const UnsupportedVariant&) {
    return std::nullopt;
  }
}

// --- orbits --------------------------------------------------------------------

int cmd_orbits(const Target& t, const std::string& format) {
  const auto ans = enumerate_antichains(t.poset);
  const auto orbits = all_orbits(t.poset, ans);
  const auto order = rowmotion_order(orbits);
  const auto expected = expected_count(t);
  if (format == "json") {
    for (const auto& o : orbits) {
      Json row;
      row["size"] = o.size();
      row["mean"] = to_string(o.mean_size());
      row["representative"] = t.tokens(o.representative());
      std::cout << row.dump() << '\n';
    }
    Json summary;
    summary["poset"] = t.id;
    summary["antichains"] = ans.size();
    summary["orbits"] = orbits.size();
    summary["order"] = order;
    if (expected)
      summary["expected"] = *expected;
    std::cout << summary.dump() << '\n';
  } else if (format == "tsv") {
    std::cout << "size\tmean\trepresentative\n";
    for (const auto& o : orbits)
      std::cout << o.size() << '\t' << to_string(o.mean_size()) << '\t' << t.format(o.representative()) << '\n';
  } else {
    for (const auto& o : orbits) {
      std::string rep;
      for (const auto& tok : t.tokens(o.representative()))
        rep += (rep.empty() ? "" : ", ") + tok;
      std::cout << o.size() << "  " << to_string(o.mean_size()) << "  {" << rep << "}\n";
    }
    std::cout << "#AN=" << ans.size() << " ord=" << order;
    if (expected)
      std::cout << " expected=" << *expected;
    std::cout << '\n';
  }
  return 0;
}

// --- verify --------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& claim_ids, bool all, const std::string& type, int rank, bool large,
               const std::string& format) {
  std::vector<const harness::Claim*> claims;
  if (all) {
    for (const auto& c : harness::registry())
      claims.push_back(&c);
  }
  for (const auto& id : claim_ids) {
    const auto* c = harness::find_claim(id);
    if (c == nullptr) {
      std::string ids;
      for (const auto& k : harness::registry())
        ids += (ids.empty() ? "" : ", ") + k.id;
      throw UsageError("unknown claim '" + id + "'; valid ids: " + ids);
    }
    if (std::find(claims.begin(), claims.end(), c) == claims.end())
      claims.push_back(c);
  }
  if (claims.empty())
    throw UsageError("give --claim ID or --all");
  harness::Scope scope;
  scope.include_large = large;
  if (!type.empty()) {
    try {
      scope.type = build_root_system(type).name();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (rank > 0)
    scope.n = rank;

  const auto reports = harness::run_claims(claims, scope);
  bool ok = !reports.empty();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (format == "json") {
      std::cout << r.to_json().dump() << '\n';
    } else {
      std::cout << harness::to_string(r.status) << "  " << r.claim_id << "  " << r.scope.dump() << '\n';
      if (r.status == harness::Status::fail)
        std::cout << "  witness: " << r.evidence["witness"].dump() << '\n';
      if (r.status == harness::Status::unsupported)
        std::cout << "  " << r.evidence.value("reason", "") << '\n';
    }
  }
  if (format != "json") {
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    std::cout << passed << "/" << reports.size() << " reports PASS\n";
  }
  return ok ? 0 : 1;
}

// --- type A commands -----------------------------------------------------------------

Target type_a_target(int rank) {
  if (rank < 1)
    throw UsageError("rank must be at least 1");
  return make_target("A" + std::to_string(rank), "", "full", "interval");
}

int cmd_oy(int rank, const std::string& spec, const std::string& form) {
  const Target t = type_a_target(rank);
  const ElementSet a = t.parse(spec);
  const type_a::RootPosetA ra(*t.rs);
  const int ideal = type_a::oy_ideal_form(ra, a);
  const int difference = type_a::oy_difference_form(ra.to_array(a));
  if (form == "ideal") {
    std::cout << ideal << '\n';
  } else if (form == "difference") {
    std::cout << difference << '\n';
  } else {
    std::cout << "ideal=" << ideal << " difference=" << difference << '\n';
  }
  if (ideal != difference) {
    std::cerr << "error: the two forms disagree on " << t.format(a) << " (engine bug)\n";
    return 1;
  }
  return 0;
}

int cmd_star(const std::string& rank_or_type, const std::string& spec) {
  std::string type = rank_or_type;
  if (!type.empty() && std::isdigit(static_cast<unsigned char>(type.front())))
    type = "A" + type;
  Target t = make_target(type, "", "full", "");
  if (!t.is_type_a())
    throw UsageError("star is defined on type A only, not " + t.rs->name());
  const ElementSet a = t.parse(spec);
  const type_a::RootPosetA ra(*t.rs);
  std::cout << t.format(type_a::star(ra, a)) << '\n';
  return 0;
}

int cmd_rowmotion(const Target& t, const std::string& spec, bool empty, long long power) {
  if (empty && !spec.empty())
    throw UsageError("give an antichain or --empty, not both");
  const ElementSet a = empty ? ElementSet{} : t.parse(spec);
  std::cout << t.format(rowmotion_power(t.poset, a, power)) << '\n';
  return 0;
}

int cmd_antichains(const Target& t, bool list, const std::string& format) {
  const auto ans = enumerate_antichains(t.poset);
  const auto expected = expected_count(t);
  if (format == "json") {
    if (list)
      for (const auto& a : ans)
        std::cout << Json(t.tokens(a)).dump() << '\n';
    Json summary;
    summary["poset"] = t.id;
    summary["antichains"] = ans.size();
    if (expected)
      summary["expected"] = *expected;
    std::cout << summary.dump() << '\n';
    return 0;
  }
  if (list)
    for (const auto& a : ans)
      std::cout << t.format(a) << '\n';
  std::cout << "#AN=" << ans.size();
  if (expected)
    std::cout << " expected=" << *expected;
  std::cout << '\n';
  return 0;
}

// A poset spec is an existing file or "<type>[/<variant>]".
Target target_from_spec(const std::string& spec) {
  if (std::filesystem::exists(spec))
    return make_target("", spec, "", "");
  auto slash = spec.find('/');
  const std::string type = spec.substr(0, slash);
  const std::string variant = slash == std::string::npos ? "full" : spec.substr(slash + 1);
  return make_target(type, "", variant, "");
}

int cmd_isomorphic(const std::string& a, const std::string& b) {
  const Target ta = target_from_spec(a);
  const Target tb = target_from_spec(b);
  std::optional<std::vector<std::size_t>> iso;
  try {
    iso = poset_isomorphic(ta.poset, tb.poset, max_elements());
  } catch (const SizeLimitExceeded& e) {
    throw UsageError(e.what());
  }
  if (!iso) {
    std::cout << "not isomorphic\n";
    return 1;
  }
  std::cout << "isomorphic\n";
  for (std::size_t x = 0; x < iso->size(); ++x)
    std::cout << "  " << ta.poset.label(x) << " -> " << tb.poset.label((*iso)[x]) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rowmotion on antichains of root posets and custom posets"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "json", "tsv"};
  std::string type, custom, variant = "full", convention, format = "text";

  auto* orbits = app.add_subcommand("orbits", "Rowmotion orbits of the antichains of a poset");
  orbits->add_option("type", type, "Root system, e.g. F4");
  orbits->add_option("--custom", custom, "Poset file ('a < b' per line)");
  orbits->add_option("--variant", variant, "full, no-simple, short, short-no-simple, height-geq-J, parabolic-I,J");
  orbits->add_option("--format", format)->check(CLI::IsMember(formats));
  orbits->add_option("--convention", convention, "bourbaki, paper-f4 or interval");

  std::vector<std::string> claim_ids;
  bool all = false, large = false;
  int rank = 0;
  auto* verify = app.add_subcommand("verify", "Run harness claims");
  verify->add_option("--claim", claim_ids, "Claim id (repeatable)");
  verify->add_flag("--all", all, "Run every claim on the default matrix");
  verify->add_option("--type", type, "Restrict to one root system");
  verify->add_option("--n", rank, "Restrict rank-parameterized claims to one rank");
  verify->add_flag("--large", large, "Add E7 and E8 to the default matrix");
  verify->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

  std::string spec, form = "ideal", rank_or_type;
  auto* oy = app.add_subcommand("oy", "OY-invariant of an antichain of A_rank");
  oy->add_option("rank", rank, "Rank n of A_n")->required();
  oy->add_option("antichain", spec, "Comma-separated intervals i-j");
  oy->add_option("--form", form)->check(CLI::IsMember(std::vector<std::string>{"ideal", "difference", "both"}));

  auto* star = app.add_subcommand("star", "Duality on antichains of A_n");
  star->add_option("rank", rank_or_type, "Rank n (or A<n>)")->required();
  star->add_option("antichain", spec, "Comma-separated intervals i-j");

  bool empty = false;
  long long power = 1;
  auto* rm = app.add_subcommand("rowmotion", "Apply rowmotion (negative powers apply the inverse)");
  rm->add_option("type", type, "Root system, e.g. A3");
  rm->add_option("antichain", spec, "Comma-separated roots");
  rm->add_flag("--empty", empty, "Start from the empty antichain");
  rm->add_option("--power", power, "Exponent k");
  rm->add_option("--custom", custom, "Poset file");
  rm->add_option("--variant", variant);
  rm->add_option("--convention", convention);

  bool list = false;
  auto* antichains = app.add_subcommand("antichains", "Count or list antichains");
  antichains->add_option("type", type, "Root system");
  antichains->add_option("--custom", custom, "Poset file");
  antichains->add_option("--variant", variant);
  antichains->add_option("--convention", convention);
  antichains->add_flag("--list", list, "Print every antichain");
  antichains->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

  std::string first, second;
  auto* iso = app.add_subcommand("isomorphic", "Test two posets for isomorphism");
  iso->add_option("first", first, "Poset file or TYPE[/VARIANT]")->required();
  iso->add_option("second", second, "Poset file or TYPE[/VARIANT]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgumentError;
  }

  try {
    if (*orbits)
      return cmd_orbits(make_target(type, custom, variant, convention), format);
    if (*verify)
      return cmd_verify(claim_ids, all, type, rank, large, format);
    if (*oy)
      return cmd_oy(rank, spec, form);
    if (*star)
      return cmd_star(rank_or_type, spec);
    if (*rm)
      return cmd_rowmotion(make_target(type, custom, variant, convention), spec, empty, power);
    if (*antichains)
      return cmd_antichains(make_target(type, custom, variant, convention), list, format);
    if (*iso)
      return cmd_isomorphic(first, second);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgumentError;
  }
  return kArgumentError;
}
