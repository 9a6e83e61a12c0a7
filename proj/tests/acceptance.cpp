// Acceptance suite: one PASS/FAIL line per criterion.

#include "exactcat/commands.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

using namespace exactcat;
using nlohmann::json;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::shared_ptr<const Quiver> quiver_file(const std::string& name) {
  return load_quiver_spec(std::string(EXACTCAT_DATA_DIR) + "/" + name + ".toml").quiver;
}

SessionConfig config(std::shared_ptr<const Quiver> q, std::optional<std::size_t> cap = std::nullopt, long p = 2) {
  SessionConfig cfg;
  cfg.quiver = std::move(q);
  cfg.p = p;
  cfg.cap = cap;
  return cfg;
}

std::shared_ptr<const Quiver> linear_a(std::size_t n) {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(std::to_string(i + 1));
    if (i > 0) a.push_back({i - 1, i, "a" + std::to_string(i)});
  }
  return std::make_shared<const Quiver>(v, a);
}

Vector unit(Eigen::Index n, Eigen::Index k) {
  Vector v = Vector::Zero(n);
  v(k) = 1;
  return v;
}

// The non-split sequence with the given end terms, which must have a 1-dimensional Ext.
SESClass only_nonsplit(const ARCatalog& c, const std::string& right, const std::string& left) {
  const ExtSpace e(c.field(), c.indecomposable(*c.find(right)), c.indecomposable(*c.find(left)));
  if (e.dim() != 1) throw std::logic_error("expected dim Ext(" + right + ", " + left + ") = 1");
  return realize(e, unit(1, 0));
}

std::string mu_of(const ExactCategory& cat, const std::string& name) {
  return gr_string(cat.gr_measure(*cat.catalog().find(name)));
}

void criterion1(Check& c) {
  const auto t0 = Clock::now();
  const Session s(config(quiver_file("a3_sink")));
  const auto r = cmd_lattice(s);
  const auto& nodes = r.data["structures"];
  const auto& edges = r.data["hasse"];
  c.expect(nodes.size() == 8, "8 exact structures");
  c.expect(edges.size() == 12, "12 Hasse edges");
  // Boolean cube: every subset of the 3 AR sequences occurs once, edges add one
  // element, every node has degree 3.
  std::set<std::vector<std::size_t>> subsets;
  for (const auto& n : nodes) subsets.insert(n["selected"].get<std::vector<std::size_t>>());
  c.expect(subsets.size() == 8, "structures are the 8 subsets");
  std::vector<int> degree(nodes.size(), 0);
  for (const auto& e : edges) {
    const auto a = nodes[e[0].get<std::size_t>()]["selected"].get<std::vector<std::size_t>>();
    const auto b = nodes[e[1].get<std::size_t>()]["selected"].get<std::vector<std::size_t>>();
    c.expect(b.size() == a.size() + 1 && std::includes(b.begin(), b.end(), a.begin(), a.end()), "edge adds one sequence");
    ++degree[e[0].get<std::size_t>()];
    ++degree[e[1].get<std::size_t>()];
  }
  c.expect(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }), "cube degrees");

  // Structures are named by the right terms of their AR sequences.
  const auto& cat = s.catalog();
  const SESClass via_p3 = only_nonsplit(cat, "S3", "S2");
  const SESClass via_p1 = only_nonsplit(cat, "S1", "S2");
  c.expect(decompose(cat, via_p3.middle) == ObjectClass{*cat.find("P3")}, "S2 -> P3 -> S3 is the only nonsplit class");
  c.expect(decompose(cat, via_p1.middle) == ObjectClass{*cat.find("P1")}, "S2 -> P1 -> S1 is the only nonsplit class");
  c.expect(contains(cat, s.select("S3,I2"), via_p3), "S2->P3->S3 in E{S3,I2}");
  c.expect(!contains(cat, s.select("S3,S1"), via_p3), "S2->P3->S3 not in E{S3,S1}");
  c.expect(contains(cat, s.select("I2,S1"), via_p1), "S2->P1->S1 in E{I2,S1}");
  c.expect(!contains(cat, s.select("S3,I2"), via_p1), "S2->P1->S1 not in E{S3,I2}");
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "runtime < 5 s");
  c.summary = "8 structures, 12 Hasse edges, memberships of S2->P1->S1 and S2->P3->S3 as expected";
}

void criterion2(Check& c) {
  const Session s(config(quiver_file("a3_sink")));
  std::vector<std::size_t> got;
  for (const std::string sel : {"none", "S3,I2", "all"}) {
    const auto r = cmd_structure(s, sel, "lengths");
    for (const auto& row : r.data["lengths"])
      if (row["name"] == "I2") got.push_back(row["length"].get<std::size_t>());
  }
  c.expect(got == std::vector<std::size_t>{1, 2, 3}, "l(I2) = 1, 2, 3");
  c.summary = "l(I2) under E_min, E{S3,I2}, E_max: " + std::to_string(got.at(0)) + ", " + std::to_string(got.at(1)) +
              ", " + std::to_string(got.at(2));
}

void criterion3(Check& c) {
  // 1 <- 2 -> 3: structures named by the right terms 011, 110, 010.
  const Session s(config(quiver_file("a3_source")));
  auto mu = [&](const std::string& sel, const std::string& obj) {
    return mu_of(ExactCategory(s.census(), s.select(sel)), obj);
  };
  const std::vector<std::tuple<std::string, std::string, std::string, std::string>> table{
      {"E_min", "none", "111", "(1)"},     {"E{011}", "011", "111", "(1,2)"},        {"E{011,110}", "011,110", "111", "(1,2)"},
      {"E_max", "all", "111", "(1,3)"},    {"E{010}", "010", "111", "(1)"},          {"E{011,010}", "011,010", "111", "(1,2)"},
      {"E_min", "none", "110", "(1)"},     {"E{010}", "010", "110", "(1)"},          {"E{011,010}", "011,010", "110", "(1,2)"},
      {"E_max", "all", "110", "(1,2)"}};
  for (const auto& [label, sel, obj, want] : table) {
    const std::string got = mu(sel, obj);
    c.expect(got == want, "mu_" + label + "(" + obj + ") = " + got + ", expected " + want);
  }
  c.summary = std::to_string(table.size()) + " measures on 1<-2->3 match";
}

void criterion4(Check& c) {
  const Session s(config(quiver_file("a3_sink")));
  const auto r = cmd_reduce(s, "1->2");
  c.expect(r.data["label"] == s.select("S3,I2").label(), "E_F = E{S3,I2}");
  c.summary = "split on 1->2: E" + r.data["label"].get<std::string>() + " = E{S3,I2}";
}

void criterion5(Check& c) {
  const Session s(config(quiver_file("a3_sink"), 4));
  const auto r = cmd_verify(s, "gr8");
  const std::string e_i2 = s.select("I2").label(), bottom = s.select("none").label(), top = s.select("all").label();
  bool seen = false;
  for (const auto& row : r.data["results"]) {
    const auto& v = row["violations"];
    if (row["structure"] == e_i2)
      for (const auto& line : v) seen = seen || line.get<std::string>().rfind("X=S2 in Y=P1+P3, mu(X)=(1)", 0) == 0;
    if (row["structure"] == bottom || row["structure"] == top) c.expect(v.empty(), "no counterexample at E" + row["structure"].get<std::string>());
  }
  c.expect(seen, "E{I2} lists X=S2 in Y=P1+P3");
  // Same counterexample in full: equal measures (1), X not a summand.
  const auto g = ExactCategory(s.census(), s.select("I2")).check_gr8(4);
  const auto& cat = s.catalog();
  bool full = false;
  for (const auto& ce : g.counterexamples)
    if (cat.name(ce.x) == "S2" && cat.class_name(ce.y) == "P1+P3")
      full = ce.mu_x == GRVector{1} && ce.max_mu_y == GRVector{1} &&
             std::find(ce.y.begin(), ce.y.end(), ce.x) == ce.y.end();
  c.expect(full, "mu(S2) = mu(P1) = mu(P3) = (1) and S2 is not a summand");
  c.summary = "E{I2}: S2 in P1+P3 with all measures (1); none at E_min, E_max (cap 4)";
}

void criterion6(Check& c) {
  const Session s(config(quiver_file("a3_sink")));
  const auto& cat = s.catalog();
  using Edge = std::tuple<std::string, std::string, int>;
  auto quiver = [&](const std::string& sel) {
    const auto q = cmd_structure(s, sel, "quiver").data;
    std::multiset<Edge> edges;
    for (const auto& a : q["arrows"])
      for (std::size_t m = 0; m < a["multiplicity"].get<std::size_t>(); ++m)
        edges.emplace(a["from"].get<std::string>(), a["to"].get<std::string>(), a["degree"].get<int>());
    const auto v = q["vertices"].get<std::vector<std::string>>();
    return std::pair{std::set<std::string>(v.begin(), v.end()), edges};
  };
  const auto [vmin, emin] = quiver("none");
  std::multiset<Edge> ar;
  for (auto [a, b] : cat.ar_quiver_arrows()) ar.emplace(cat.name(a), cat.name(b), 0);
  c.expect(vmin.size() == 6, "Q(E_min) has 6 vertices");
  c.expect(emin.size() == 6 && emin == ar, "Q(E_min) is the AR quiver with 6 dotted arrows");

  const auto [vmax, emax] = quiver("all");
  c.expect(vmax == std::set<std::string>{"S1", "S2", "S3"}, "Q(E_max) vertices");
  c.expect(emax == std::multiset<Edge>{{"S1", "S2", 1}, {"S3", "S2", 1}}, "Q(E_max) arrows");

  const auto [v_i2_s1, e_i2_s1] = quiver("I2,S1");
  c.expect(v_i2_s1 == std::set<std::string>{"S1", "S2", "S3", "P3"}, "Q(E{I2,S1}) vertices");
  c.expect(e_i2_s1 == std::multiset<Edge>{{"S1", "S2", 1}, {"S1", "P3", 1}, {"S2", "P3", 0}, {"P3", "S3", 0}},
           "Q(E{I2,S1}) arrows");
  c.summary = "Q(E_min) = AR quiver, Q(E_max) and Q(E{I2,S1}) match";
}

void criterion7(Check& c) {
  MonoidQuery q;
  q.generators = {2, 3};
  q.simples = true;
  q.length = 6;
  q.factorizations = 6;
  const auto r = cmd_monoid(q).data;
  c.expect(r["simples"] == json::array({2, 3}), "simples {2,3}");
  c.expect(r["length"]["value"] == 3, "l(k^6) = 3");
  c.expect(r["factorization_lengths"]["value"] == json::array({2, 3}), "factorization lengths {2,3}");
  c.summary = "simples {2,3}, l(k^6) = 3, lengths of 6: {2,3}";
}

void criterion8(Check& c) {
  const auto t0 = Clock::now();
  std::size_t checks = 0;
  auto take = [&](const std::string& what, const PropertyReport& r) {
    checks += r.checked;
    c.expect(r.checked > 0, what + ": nothing checked");
    for (const auto& v : r.violations) c.expect(false, what + ": " + v);
  };

  const PrimeField f2(2);
  for (auto [name, cap] : {std::pair{"a3_sink", std::size_t{4}}, std::pair{"a4", std::size_t{5}}}) {
    const Session s(config(quiver_file(name), cap));
    const auto structures = enumerate_lattice(s.catalog()).structures;
    for (const auto& e : structures) {
      const ExactCategory cat(s.census(), e);
      take(std::string(name) + " superadditivity E" + e.label(), cat.check_superadditivity(cap));
      take(std::string(name) + " GR1-GR7 E" + e.label(), cat.check_gr_axioms());
      take(std::string(name) + " poset axioms E" + e.label(), cat.check_poset_axioms(4));
    }
    take(std::string(name) + " length monotonicity", check_length_monotonicity(s.census(), structures));
  }

  for (const auto& name : {"a3_sink", "a3_source", "a3_linear"}) {
    const auto cat = build_catalog(quiver_file(name), f2);
    for (const auto& e : enumerate_lattice(cat).structures)
      take(std::string(name) + " oracle E" + e.label(), check_oracle_equivalence(cat, e));
  }

  take("word order", check_gr_order(4));

  const Session s2(config(quiver_file("a3_sink"), 4, 2));
  const Session s3(config(quiver_file("a3_sink"), 4, 3));
  for (const auto& e : enumerate_lattice(s2.catalog()).structures) {
    ++checks;
    c.expect(invariant_fingerprint(ExactCategory(s2.census(), e)) == invariant_fingerprint(ExactCategory(s3.census(), e)),
             "F_2 vs F_3 invariants differ at E" + e.label());
  }

  const double t = seconds_since(t0);
  c.expect(t < 120.0, "total runtime < 2 min");
  c.summary = std::to_string(checks) + " checks, " + std::to_string(c.failures.size()) + " violations";
}

void criterion9(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Session s(config(linear_a(n)));
    const auto r = cmd_catalog(s).data;
    c.expect(r["indecomposables"].size() == n * (n + 1) / 2, "A" + std::to_string(n) + " indecomposables");
    c.expect(r["ar_sequences"].size() == n * (n + 1) / 2 - n, "A" + std::to_string(n) + " AR sequences");
  }
  const auto ar_count = [](const std::string& name) {
    return cmd_catalog(Session(config(quiver_file(name)))).data["ar_sequences"].size();
  };
  c.expect(ar_count("a2") == 1, "A2 has 1 AR sequence");
  c.expect(ar_count("a3_sink") == 3, "A3 has 3 AR sequences");
  const Session a4(config(quiver_file("a4")));
  c.expect(a4.catalog().ar_sequences().size() == 6, "A4 has 6 AR sequences");
  c.expect(cmd_lattice(a4).data["structures"].size() == 64, "|Ex(A4)| = 64");
  c.summary = "A1..A5 counts n(n+1)/2 and n(n-1)/2; A4 lattice has 64 structures";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"cube reproduction", criterion1}, {"length table", criterion2},   {"GR tables", criterion3},
      {"reduction functor", criterion4}, {"GR8 counterexample", criterion5}, {"exact quivers", criterion6},
      {"monoid model", criterion7},      {"property suites", criterion8}, {"catalog sanity", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s %zu %-20s %7.2fs  %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0),
                c.summary.c_str());
    for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
