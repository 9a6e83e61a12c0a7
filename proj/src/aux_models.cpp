#include "exactcat/aux_models.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exactcat {

namespace {

// reach[k] is true when k is a sum of generators from gens (0 included).
std::vector<bool> reachable(const std::vector<long>& gens, long n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (long k = 1; k <= n; ++k)
    for (long g : gens)
      if (g <= k && reach[static_cast<std::size_t>(k - g)]) {
        reach[static_cast<std::size_t>(k)] = true;
        break;
      }
  return reach;
}

void require_member(const NumericalMonoid& m, long n) {
  if (!m.contains(n)) throw std::invalid_argument(std::to_string(n) + " is not in the monoid");
}

}  // namespace

NumericalMonoid::NumericalMonoid(std::vector<long> generators) {
  if (generators.empty()) throw std::invalid_argument("monoid needs at least one generator");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.front() <= 0) throw std::invalid_argument("generators must be positive");
  // Ascending order: g is redundant iff it is a sum of smaller kept generators.
  for (long g : generators)
    if (!reachable(gens_, g)[static_cast<std::size_t>(g)]) gens_.push_back(g);
}

bool NumericalMonoid::contains(long n) const {
  if (n < 0) return false;
  return reachable(gens_, n)[static_cast<std::size_t>(n)];
}

std::vector<long> monoid_simples(const NumericalMonoid& m) { return m.generators(); }

std::set<std::size_t> monoid_factorization_lengths(const NumericalMonoid& m, long n) {
  require_member(m, n);
  // lens[k] = set of factorization lengths of k.
  std::vector<std::set<std::size_t>> lens(static_cast<std::size_t>(n) + 1);
  lens[0].insert(0);
  for (long k = 1; k <= n; ++k)
    for (long g : m.generators())
      if (g <= k)
        for (std::size_t l : lens[static_cast<std::size_t>(k - g)]) lens[static_cast<std::size_t>(k)].insert(l + 1);
  return lens[static_cast<std::size_t>(n)];
}

std::size_t monoid_length(const NumericalMonoid& m, long n) {
  require_member(m, n);
  std::vector<long> best(static_cast<std::size_t>(n) + 1, -1);
  best[0] = 0;
  for (long k = 1; k <= n; ++k)
    for (long g : m.generators())
      if (g <= k && best[static_cast<std::size_t>(k - g)] >= 0)
        best[static_cast<std::size_t>(k)] = std::max(best[static_cast<std::size_t>(k)], best[static_cast<std::size_t>(k - g)] + 1);
  return static_cast<std::size_t>(best[static_cast<std::size_t>(n)]);
}

PropertyReport check_monoid_superadditivity(const NumericalMonoid& m, long bound) {
  PropertyReport r;
  r.name = "monoid superadditivity";
  std::vector<long> members;
  for (long k = 0; k <= bound; ++k)
    if (m.contains(k)) members.push_back(k);
  for (long a : members)
    for (long b : members) {
      if (a > b || a + b > bound) continue;
      ++r.checked;
      const std::size_t la = monoid_length(m, a), lb = monoid_length(m, b), lab = monoid_length(m, a + b);
      if (lab < la + lb)
        r.violations.push_back("l(" + std::to_string(a + b) + ")=" + std::to_string(lab) + " < l(" +
                               std::to_string(a) + ")+l(" + std::to_string(b) + ")");
      else if (lab > la + lb)
        ++r.strict;
    }
  return r;
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& relations)
    : names_(std::move(elements)) {
  const std::size_t n = names_.size();
  auto index = [&](const std::string& s) {
    auto it = std::find(names_.begin(), names_.end(), s);
    if (it == names_.end()) throw std::invalid_argument("unknown poset element " + s);
    return static_cast<std::size_t>(it - names_.begin());
  };
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(names_.begin() + static_cast<long>(i) + 1, names_.end(), names_[i]) != names_.end())
      throw std::invalid_argument("duplicate poset element " + names_[i]);
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : relations) leq_[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i]) throw std::invalid_argument("relation is not antisymmetric: " + names_[i] + ", " + names_[j]);
}

FinitePoset FinitePoset::diamond() {
  return FinitePoset({"s1", "s2", "s3", "s4"}, {{"s1", "s2"}, {"s1", "s3"}, {"s2", "s4"}, {"s3", "s4"}});
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("s" + std::to_string(i));
    if (i > 1) rel.emplace_back(names[i - 2], names[i - 1]);
  }
  return FinitePoset(names, rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  return FinitePoset(names, {});
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c)
        between = c != a && c != b && leq_[a][c] && leq_[c][b];
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

PosetQuiver poset_exact_quiver(const FinitePoset& p) {
  PosetQuiver q;
  q.vertices = p.elements();
  q.vertices.push_back("s0");
  const std::size_t s0 = p.size();
  for (auto [a, b] : p.covers()) q.arrows.push_back({a, b, 0, 1});
  // dim Ext(s0, s) = 1 for every element and no other extensions.
  for (std::size_t s = 0; s < p.size(); ++s) q.arrows.push_back({s0, s, 1, 1});
  return q;
}

}  // namespace exactcat
