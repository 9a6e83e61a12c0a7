#include <doctest.h>

#include "exactcat/aux_models.hpp"

#include <random>

using namespace exactcat;

namespace {

// All factorization lengths of n by enumerating how often each generator is used.
std::set<std::size_t> brute_lengths(const std::vector<long>& gens, long n, std::size_t from = 0, std::size_t used = 0) {
  if (n == 0) return {used};
  std::set<std::size_t> out;
  for (std::size_t i = from; i < gens.size(); ++i)
    if (gens[i] <= n)
      for (auto l : brute_lengths(gens, n - gens[i], i, used + 1)) out.insert(l);
  return out;
}

// g lies in the monoid spanned by the other generators.
bool spanned_by_others(const std::vector<long>& gens, std::size_t skip) {
  std::vector<long> others;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (i != skip && gens[i] != gens[skip]) others.push_back(gens[i]);
  return !brute_lengths(others, gens[skip]).empty();
}

std::size_t count_degree(const PosetQuiver& q, int degree) {
  return static_cast<std::size_t>(
      std::count_if(q.arrows.begin(), q.arrows.end(), [&](const GradedArrow& a) { return a.degree == degree; }));
}

}  // namespace

TEST_CASE("monoid simples") {
  CHECK(monoid_simples(NumericalMonoid({2, 3})) == std::vector<long>{2, 3});
  CHECK(monoid_simples(NumericalMonoid({1})) == std::vector<long>{1});
  CHECK(monoid_simples(NumericalMonoid({3, 5})) == std::vector<long>{3, 5});
  CHECK(monoid_simples(NumericalMonoid({5, 2, 3, 4, 2})) == std::vector<long>{2, 3});
  CHECK_THROWS_AS(NumericalMonoid({}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalMonoid({0, 2}), std::invalid_argument);

  // Minimality against a brute-force span test on every generating set inside 2..9.
  for (unsigned mask = 1; mask < (1u << 8); ++mask) {
    std::vector<long> gens;
    for (long g = 2; g <= 9; ++g)
      if (mask & (1u << (g - 2))) gens.push_back(g);
    std::vector<long> expected;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!spanned_by_others(gens, i)) expected.push_back(gens[i]);
    CHECK(monoid_simples(NumericalMonoid(gens)) == expected);
  }
}

TEST_CASE("monoid lengths and factorizations") {
  const NumericalMonoid s({2, 3});
  CHECK(monoid_length(s, 6) == 3);
  CHECK(monoid_length(s, 0) == 0);
  CHECK(monoid_length(s, 5) == 2);
  CHECK(monoid_factorization_lengths(s, 6) == std::set<std::size_t>{2, 3});
  CHECK(monoid_factorization_lengths(s, 2) == std::set<std::size_t>{1});
  CHECK(monoid_factorization_lengths(s, 7) == std::set<std::size_t>{3});
  CHECK_THROWS_AS(monoid_length(s, 1), std::invalid_argument);
  CHECK_THROWS_AS(monoid_factorization_lengths(s, 1), std::invalid_argument);
  CHECK_FALSE(s.contains(-2));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(2 + static_cast<long>(rng() % 8));
    const NumericalMonoid m(gens);
    for (long n = 0; n <= 30; ++n) {
      const auto brute = brute_lengths(m.generators(), n);
      CHECK(m.contains(n) == !brute.empty());
      if (brute.empty()) continue;
      CHECK(monoid_factorization_lengths(m, n) == brute);
      CHECK(monoid_length(m, n) == *brute.rbegin());
    }
  }
}

TEST_CASE("monoid superadditivity up to 40") {
  for (const auto& gens : std::vector<std::vector<long>>{{2, 3}, {3, 5}, {1}, {4, 6, 9}, {5, 7, 11, 13}}) {
    const auto r = check_monoid_superadditivity(NumericalMonoid(gens), 40);
    CHECK(r.ok());
    CHECK(r.checked > 0);
  }
  // 2 + 3 = 5 has length 2 = 1 + 1; 3 + 3 = 6 has length 3 > 2.
  CHECK(check_monoid_superadditivity(NumericalMonoid({2, 3}), 40).strict > 0);
}

TEST_CASE("poset quivers") {
  const auto diamond = poset_exact_quiver(FinitePoset::diamond());
  CHECK(diamond.vertices == std::vector<std::string>{"s1", "s2", "s3", "s4", "s0"});
  CHECK(count_degree(diamond, 0) == 4);
  CHECK(count_degree(diamond, 1) == 4);
  for (const auto& a : diamond.arrows)
    if (a.degree == 1) CHECK(a.from == 4);

  const auto anti = poset_exact_quiver(FinitePoset::antichain(5));
  CHECK(count_degree(anti, 0) == 0);
  CHECK(count_degree(anti, 1) == 5);
  const auto two = poset_exact_quiver(FinitePoset::chain(2));
  CHECK(count_degree(two, 0) == 1);
  CHECK(count_degree(two, 1) == 2);

  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset({"a"}, {{"a", "z"}}), std::invalid_argument);
}

TEST_CASE("covers are the Hasse diagram of random posets") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    // Random DAG on 6 elements, edges only upward in index.
    std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        if (rng() % 3 == 0) rel.emplace_back(names[i], names[j]);
    const FinitePoset p(names, rel);
    const auto covers = p.covers();
    // No shortcuts.
    for (auto [a, b] : covers)
      for (std::size_t c = 0; c < 6; ++c) CHECK_FALSE((c != a && c != b && p.leq(a, c) && p.leq(c, b)));
    // Reflexive-transitive closure of the covers is the order.
    std::vector<std::vector<bool>> reach(6, std::vector<bool>(6, false));
    for (std::size_t i = 0; i < 6; ++i) reach[i][i] = true;
    for (auto [a, b] : covers) reach[a][b] = true;
    for (std::size_t k = 0; k < 6; ++k)
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK(reach[i][j] == p.leq(i, j));
    CHECK(count_degree(poset_exact_quiver(p), 0) == covers.size());
  }
}
