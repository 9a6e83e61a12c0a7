#include "exactcat/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace exactcat {

using nlohmann::json;

namespace {

std::vector<std::size_t> dims_of(const Representation& r) {
  std::vector<std::size_t> out;
  for (auto d : r.dims()) out.push_back(static_cast<std::size_t>(d));
  return out;
}

std::vector<std::string> names_of(const ARCatalog& c, const std::vector<std::size_t>& v) {
  std::vector<std::string> out;
  for (auto i : v) out.push_back(c.name(i));
  return out;
}

json ar_json(const ARCatalog& c, std::size_t k) {
  const ARSequence& ar = c.ar_sequences().at(k);
  return {{"index", k + 1}, {"left", c.name(ar.left)}, {"middle", names_of(c, ar.middle_class)}, {"right", c.name(ar.right)}};
}

std::string ar_line(const ARCatalog& c, std::size_t k) {
  const ARSequence& ar = c.ar_sequences().at(k);
  return "AR" + std::to_string(k + 1) + "  " + c.name(ar.left) + " -> " + c.class_name(ar.middle_class) + " -> " +
         c.name(ar.right);
}

std::vector<std::size_t> one_based(const ExactStructure& e) {
  std::vector<std::size_t> out;
  for (auto k : e.indices()) out.push_back(k + 1);
  return out;
}

json structure_json(const ExactStructure& e) { return {{"label", e.label()}, {"selected", one_based(e)}}; }

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw InputError("bad " + what + " '" + text + "'");
  }
  if (used != text.size()) throw InputError("bad " + what + " '" + text + "'");
  return v;
}

// One suite result: a line per structure (or one line for lattice-wide suites).
struct SuiteRow {
  std::string suite;
  std::optional<std::string> structure;
  std::size_t checked = 0;
  std::size_t strict = 0;
  std::vector<std::string> violations;
};

SuiteRow row_from(const std::string& suite, std::optional<std::string> label, const PropertyReport& r) {
  return {suite, std::move(label), r.checked, r.strict, r.violations};
}

std::string gr8_line(const ARCatalog& c, const GR8Counterexample& ce) {
  return "X=" + c.name(ce.x) + " in Y=" + c.class_name(ce.y) + ", mu(X)=" + gr_string(ce.mu_x) +
         " = max mu(Y_i), X not a summand";
}

}  // namespace

std::string CommandResult::render(OutputFormat f) const {
  switch (f) {
    case OutputFormat::table:
      return table;
    case OutputFormat::structured:
      return data.dump(2) + "\n";
    case OutputFormat::dot:
      if (dot.empty()) throw InputError("this command has no DOT output");
      return dot;
  }
  return table;
}

std::size_t parse_cap(const std::string& text) {
  const long v = parse_long(trim(text), "cap");
  if (v <= 0) throw InputError("cap must be positive");
  return static_cast<std::size_t>(v);
}

Session::Session(SessionConfig cfg) : cfg_(std::move(cfg)), catalog_(build_catalog(cfg_.quiver, PrimeField(cfg_.p))) {
  std::size_t largest = 0, largest_projective = 0;
  for (std::size_t i = 0; i < catalog_.size(); ++i) {
    largest = std::max(largest, catalog_.total_dim(i));
    if (catalog_.is_projective(i)) largest_projective = std::max(largest_projective, catalog_.total_dim(i));
  }
  if (cfg_.cap) {
    cap_ = *cfg_.cap;
  } else if (const char* env = std::getenv("EXACTCAT_CAP"); env && *env) {
    cap_ = parse_cap(env);
  } else {
    cap_ = std::max<std::size_t>(4, largest);
  }
  if (cap_ < largest_projective)
    throw CapExceeded("cap " + std::to_string(cap_) + " is below the largest projective (total dimension " +
                      std::to_string(largest_projective) + ")");
}

const SequenceCensus& Session::census() const {
  if (!census_) census_ = std::make_unique<SequenceCensus>(catalog_, cap_);
  return *census_;
}

ExactStructure Session::select(const std::string& spec) const {
  const auto& ars = catalog_.ar_sequences();
  const std::string s = trim(spec);
  if (s == "all" || s == "max") return ExactStructure::maximal(ars.size());
  if (s == "none" || s == "min" || s.empty()) return ExactStructure::minimal(ars.size());
  Support sel(ars.size());
  auto digits = [](const std::string& x) {
    return !x.empty() && std::all_of(x.begin(), x.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  for (const auto& item : split(s, ',')) {
    std::optional<std::size_t> k;
    if (item.size() > 2 && (item.rfind("AR", 0) == 0 || item.rfind("ar", 0) == 0) && digits(item.substr(2)))
      k = static_cast<std::size_t>(parse_long(item.substr(2), "AR index"));
    else if (auto i = catalog_.find(item); i && catalog_.ar_index(*i))
      k = *catalog_.ar_index(*i) + 1;
    else if (digits(item))
      k = static_cast<std::size_t>(parse_long(item, "AR index"));
    if (!k || *k == 0 || *k > ars.size())
      throw InputError("'" + item + "' names no AR sequence (1.." + std::to_string(ars.size()) + " or a non-projective)");
    sel[*k - 1] = true;
  }
  return ExactStructure(std::move(sel));
}

CommandResult cmd_catalog(const Session& s) {
  const ARCatalog& c = s.catalog();
  const Quiver& q = c.quiver();
  CommandResult r;
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({{"from", q.label(a.source)}, {"to", q.label(a.target)}, {"name", a.name}});
  r.data["quiver"] = {{"vertices", q.vertices()}, {"arrows", arrows}};
  r.data["p"] = c.field().characteristic();
  json inds = json::array();
  json hom = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto tau = c.translate(i);
    inds.push_back({{"name", c.name(i)},
                    {"dims", dims_of(c.indecomposable(i))},
                    {"projective", c.is_projective(i)},
                    {"injective", c.is_injective(i)},
                    {"tau", tau ? json(c.name(*tau)) : json(nullptr)}});
    json row = json::array();
    for (std::size_t j = 0; j < c.size(); ++j) row.push_back(c.hom_dim(i, j));
    hom.push_back(row);
  }
  r.data["indecomposables"] = inds;
  r.data["hom"] = hom;
  json arq = json::array();
  for (auto [a, b] : c.ar_quiver_arrows()) arq.push_back({c.name(a), c.name(b)});
  r.data["ar_quiver"] = arq;
  json seqs = json::array();
  for (std::size_t k = 0; k < c.ar_sequences().size(); ++k) seqs.push_back(ar_json(c, k));
  r.data["ar_sequences"] = seqs;

  std::ostringstream t;
  t << "quiver:";
  for (const Arrow& a : q.arrows()) t << ' ' << q.label(a.source) << "->" << q.label(a.target) << '(' << a.name << ')';
  if (q.arrow_count() == 0)
    for (const auto& v : q.vertices()) t << ' ' << v;
  t << "  over F_" << c.field().characteristic() << "\n";
  t << "indecomposables: " << c.size() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    t << "  " << std::left << std::setw(6) << c.name(i) << std::setw(8) << dim_string(c.indecomposable(i).dims());
    if (c.is_projective(i)) t << " projective";
    if (c.is_injective(i)) t << " injective";
    if (auto tau = c.translate(i)) t << " tau=" << c.name(*tau);
    t << "\n";
  }
  t << "AR quiver arrows: " << c.ar_quiver_arrows().size() << "\n";
  for (auto [a, b] : c.ar_quiver_arrows()) t << "  " << c.name(a) << " -> " << c.name(b) << "\n";
  t << "AR sequences: " << c.ar_sequences().size() << "\n";
  for (std::size_t k = 0; k < c.ar_sequences().size(); ++k) t << "  " << ar_line(c, k) << "\n";
  r.table = t.str();
  r.dot = ar_quiver_dot(c);
  return r;
}

CommandResult cmd_lattice(const Session& s) {
  const ARCatalog& c = s.catalog();
  const ExLattice lat = enumerate_lattice(c);
  CommandResult r;
  json seqs = json::array(), nodes = json::array(), edges = json::array();
  for (std::size_t k = 0; k < c.ar_sequences().size(); ++k) seqs.push_back(ar_json(c, k));
  for (const auto& e : lat.structures) nodes.push_back(structure_json(e));
  for (auto [a, b] : lat.hasse) edges.push_back({a, b});
  r.data = {{"ar_sequences", seqs}, {"structures", nodes}, {"hasse", edges}};

  std::ostringstream t;
  t << "AR sequences: " << c.ar_sequences().size() << "\n";
  for (std::size_t k = 0; k < c.ar_sequences().size(); ++k) t << "  " << ar_line(c, k) << "\n";
  t << "exact structures: " << lat.structures.size() << "\n";
  for (const auto& e : lat.structures) t << "  E" << e.label() << "\n";
  t << "Hasse edges: " << lat.hasse.size() << "\n";
  for (auto [a, b] : lat.hasse) t << "  E" << lat.structures[a].label() << " < E" << lat.structures[b].label() << "\n";
  r.table = t.str();
  r.dot = lattice_dot(lat);
  return r;
}

CommandResult cmd_structure(const Session& s, const std::string& selection, const std::string& what) {
  const ARCatalog& c = s.catalog();
  const ExactStructure e = s.select(selection);
  const ExactCategory cat(s.census(), e);
  CommandResult r;
  r.data = structure_json(e);
  std::ostringstream t;
  t << "E" << e.label() << "\n";

  if (what == "info") {
    json seqs = json::array();
    for (auto k : e.indices()) seqs.push_back(ar_json(c, k));
    std::size_t members = 0;
    for (const auto& entry : s.census().entries()) members += contains(e, entry.support);
    const auto simples = names_of(c, cat.e_simples());
    r.data["ar_sequences"] = seqs;
    r.data["simples"] = simples;
    r.data["cap"] = s.cap();
    r.data["census_sequences"] = s.census().entries().size();
    r.data["member_sequences"] = members;
    t << "selected AR sequences: " << e.indices().size() << "\n";
    for (auto k : e.indices()) t << "  " << ar_line(c, k) << "\n";
    t << "E-simples:";
    for (const auto& n : simples) t << ' ' << n;
    t << "\nmember sequences up to total dimension " << s.cap() << ": " << members << " of "
      << s.census().entries().size() << "\n";
  } else if (what == "simples") {
    const auto simples = names_of(c, cat.e_simples());
    r.data["simples"] = simples;
    for (const auto& n : simples) t << "  " << n << "\n";
  } else if (what == "lengths") {
    json rows = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t l = cat.length(ObjectClass{i});
      rows.push_back({{"name", c.name(i)}, {"length", l}});
      t << "  l(" << c.name(i) << ") = " << l << "\n";
    }
    r.data["lengths"] = rows;
  } else if (what == "gr") {
    json rows = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const GRVector mu = cat.gr_measure(i);
      const Predecessors pred = cat.gr_predecessors(i);
      rows.push_back({{"name", c.name(i)}, {"measure", mu}, {"predecessors", names_of(c, pred.indices)}});
      t << "  mu(" << c.name(i) << ") = " << gr_string(mu);
      if (!pred.indices.empty()) {
        t << "  predecessors:";
        for (auto p : pred.indices) t << ' ' << c.name(p);
      }
      t << "\n";
    }
    r.data["measures"] = rows;
  } else if (what == "quiver") {
    const GradedQuiver gq = cat.exact_quiver(s.config().rad);
    json arrows = json::array();
    for (const auto& a : gq.arrows) {
      arrows.push_back({{"from", c.name(a.from)}, {"to", c.name(a.to)}, {"degree", a.degree}, {"multiplicity", a.multiplicity}});
      t << "  " << c.name(a.from) << " -> " << c.name(a.to) << "  degree " << a.degree;
      if (a.multiplicity > 1) t << "  x" << a.multiplicity;
      t << "\n";
    }
    r.data["mode"] = s.config().rad == RadicalMode::subcategory ? "subcategory" : "ambient";
    r.data["vertices"] = names_of(c, gq.vertices);
    r.data["arrows"] = arrows;
    std::ostringstream head;
    head << "E" << e.label() << "\nvertices:";
    for (auto v : gq.vertices) head << ' ' << c.name(v);
    head << "\narrows: " << gq.arrows.size() << "\n";
    r.table = head.str() + t.str().substr(t.str().find('\n') + 1);
    r.dot = graded_quiver_dot(c, gq, "Q(E" + e.label() + ")");
    return r;
  } else {
    throw InputError("unknown structure report '" + what + "' (info, simples, lengths, gr, quiver)");
  }
  r.table = t.str();
  return r;
}

CommandResult cmd_reduce(const Session& s, const std::string& subquiver) {
  const ARCatalog& c = s.catalog();
  const Quiver sub = parse_subquiver(c.quiver(), subquiver);
  const ExactStructure e = restricted_split_structure(c, sub);
  CommandResult r;
  r.data = structure_json(e);
  r.data["subquiver"] = format_quiver_spec({std::make_shared<const Quiver>(sub), std::nullopt});
  json seqs = json::array();
  for (auto k : e.indices()) seqs.push_back(ar_json(c, k));
  r.data["ar_sequences"] = seqs;
  std::ostringstream t;
  t << "sequences split on " << subquiver << ": E" << e.label() << "\n";
  for (auto k : e.indices()) t << "  " << ar_line(c, k) << "\n";
  r.table = t.str();
  return r;
}

std::vector<std::string> verify_suites() {
  return {"gr-axioms", "gr8", "oracle", "superadditivity", "poset", "monotonicity", "order", "fields", "axioms", "all"};
}

CommandResult cmd_verify(const Session& s, const std::string& suite, const std::string& selection,
                         std::size_t axiom_bound) {
  const auto known = verify_suites();
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw InputError("unknown suite '" + suite + "'");
  const ARCatalog& c = s.catalog();
  std::vector<ExactStructure> structures;
  if (trim(selection).empty())
    structures = enumerate_lattice(c).structures;
  else
    structures.push_back(s.select(selection));
  auto wants = [&](const std::string& name) { return suite == name || (suite == "all" && name != "axioms"); };

  std::vector<SuiteRow> rows;
  if (wants("order")) rows.push_back(row_from("order", std::nullopt, check_gr_order(4)));
  for (const auto& e : structures) {
    const bool need_cat = wants("gr-axioms") || wants("gr8") || wants("superadditivity") || wants("poset");
    std::optional<ExactCategory> cat;
    if (need_cat) cat.emplace(s.census(), e);
    if (wants("gr-axioms")) rows.push_back(row_from("gr-axioms", e.label(), cat->check_gr_axioms()));
    if (wants("gr8")) {
      const GR8Report g = cat->check_gr8(s.cap());
      SuiteRow row{"gr8", e.label(), g.checked, 0, g.violations};
      for (const auto& ce : g.counterexamples) row.violations.push_back(gr8_line(c, ce));
      rows.push_back(std::move(row));
    }
    if (wants("superadditivity"))
      rows.push_back(row_from("superadditivity", e.label(), cat->check_superadditivity(s.cap())));
    if (wants("poset")) rows.push_back(row_from("poset", e.label(), cat->check_poset_axioms(s.cap())));
    if (wants("oracle")) rows.push_back(row_from("oracle", e.label(), check_oracle_equivalence(c, e)));
    if (wants("axioms")) {
      const AxiomReport a = axiom_spot_check(c, e, axiom_bound);
      rows.push_back({"axioms", e.label(), a.compositions + a.pushouts + a.pullbacks, 0, a.counterexamples});
    }
  }
  if (wants("monotonicity")) rows.push_back(row_from("monotonicity", std::nullopt, check_length_monotonicity(s.census(), structures)));
  if (wants("fields")) {
    // Same quiver over a second field; fingerprints replace indices by dimension vectors.
    const long other = c.field().characteristic() == 2 ? 3 : 2;
    const ARCatalog c2 = build_catalog(c.quiver_ptr(), PrimeField(other));
    const SequenceCensus n2(c2, s.cap());
    SuiteRow row{"fields", std::nullopt, 0, 0, {}};
    if (c2.size() != c.size()) row.violations.push_back("catalog sizes differ");
    for (const auto& e : structures) {
      ++row.checked;
      if (e.size() != c2.ar_sequences().size()) continue;
      if (invariant_fingerprint(ExactCategory(s.census(), e)) != invariant_fingerprint(ExactCategory(n2, e)))
        row.violations.push_back("E" + e.label() + ": invariants differ over F_" + std::to_string(other));
    }
    rows.push_back(std::move(row));
  }

  CommandResult r;
  json out = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row.violations.empty();
    out.push_back({{"suite", row.suite},
                   {"structure", row.structure ? json(*row.structure) : json(nullptr)},
                   {"checked", row.checked},
                   {"strict", row.strict},
                   {"violations", row.violations}});
    t << std::left << std::setw(16) << row.suite << ' ';
    if (row.structure) t << std::setw(15) << ("E" + *row.structure) << ' ';
    t << row.checked << " checked, " << row.violations.size() << " violations\n";
    for (const auto& v : row.violations) t << "    " << v << "\n";
  }
  t << (ok ? "PASS" : "FAIL") << "\n";
  r.data = {{"suite", suite}, {"cap", s.cap()}, {"ok", ok}, {"results", out}};
  r.table = t.str();
  r.status = ok ? kPass : kViolation;
  return r;
}

CommandResult cmd_monoid(const MonoidQuery& q) {
  NumericalMonoid m = [&] {
    try {
      return NumericalMonoid(q.generators);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  auto member = [&](long n) {
    if (!m.contains(n)) throw InputError(std::to_string(n) + " is not in the monoid");
    return n;
  };
  CommandResult r;
  std::ostringstream t;
  r.data["generators"] = m.generators();
  if (q.simples || (!q.length && !q.factorizations && !q.superadditivity_bound)) {
    r.data["simples"] = monoid_simples(m);
    t << "simples:";
    for (long g : monoid_simples(m)) t << ' ' << g;
    t << "\n";
  }
  if (q.length) {
    const std::size_t l = monoid_length(m, member(*q.length));
    r.data["length"] = {{"n", *q.length}, {"value", l}};
    t << "l(" << *q.length << ") = " << l << "\n";
  }
  if (q.factorizations) {
    const auto lens = monoid_factorization_lengths(m, member(*q.factorizations));
    r.data["factorization_lengths"] = {{"n", *q.factorizations}, {"value", lens}};
    t << "factorization lengths of " << *q.factorizations << ":";
    for (auto l : lens) t << ' ' << l;
    t << "\n";
  }
  if (q.superadditivity_bound) {
    const PropertyReport p = check_monoid_superadditivity(m, *q.superadditivity_bound);
    r.data["superadditivity"] = {{"bound", *q.superadditivity_bound}, {"checked", p.checked}, {"strict", p.strict}, {"violations", p.violations}};
    t << "superadditivity up to " << *q.superadditivity_bound << ": " << p.checked << " checked, " << p.strict
      << " strict, " << p.violations.size() << " violations\n";
    for (const auto& v : p.violations) t << "    " << v << "\n";
    if (!p.ok()) r.status = kViolation;
  }
  r.table = t.str();
  return r;
}

FinitePoset parse_poset(const std::string& text) {
  const std::string s = trim(text);
  try {
    if (s == "diamond") return FinitePoset::diamond();
    if (s.rfind("chain:", 0) == 0) return FinitePoset::chain(static_cast<std::size_t>(parse_long(s.substr(6), "chain length")));
    if (s.rfind("antichain:", 0) == 0)
      return FinitePoset::antichain(static_cast<std::size_t>(parse_long(s.substr(10), "antichain size")));
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> rel;
    auto add = [&](const std::string& x) {
      if (x.empty()) throw InputError("empty poset element in '" + text + "'");
      if (std::find(elements.begin(), elements.end(), x) == elements.end()) elements.push_back(x);
    };
    for (const auto& item : split(s, ',')) {
      const auto lt = item.find('<');
      if (lt == std::string::npos) {
        add(item);
        continue;
      }
      const std::string a = trim(item.substr(0, lt)), b = trim(item.substr(lt + 1));
      add(a);
      add(b);
      rel.emplace_back(a, b);
    }
    if (elements.empty()) throw InputError("empty poset");
    return FinitePoset(elements, rel);
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

CommandResult cmd_poset(const std::string& hasse) {
  const FinitePoset p = parse_poset(hasse);
  const PosetQuiver q = poset_exact_quiver(p);
  CommandResult r;
  json arrows = json::array();
  std::ostringstream t;
  t << "vertices:";
  for (const auto& v : q.vertices) t << ' ' << v;
  t << "\n";
  for (const auto& a : q.arrows) {
    arrows.push_back({{"from", q.vertices[a.from]}, {"to", q.vertices[a.to]}, {"degree", a.degree}});
    t << "  " << q.vertices[a.from] << " -> " << q.vertices[a.to] << (a.degree == 0 ? "  dotted" : "  solid") << "\n";
  }
  r.data = {{"vertices", q.vertices}, {"arrows", arrows}};
  r.table = t.str();
  r.dot = poset_quiver_dot(q);
  return r;
}

}  // namespace exactcat
