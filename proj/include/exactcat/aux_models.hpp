#pragma once

// Two small categories that live outside mod kQ: vector spaces whose
// dimensions lie in a numerical monoid, modelled by their dimensions only,
// and the graded quiver attached to representations of a finite poset.

#include "exactcat/invariants.hpp"

#include <set>

namespace exactcat {

class NumericalMonoid {
 public:
  /// Any generating set of positive integers; redundant generators are dropped.
  /// Throws std::invalid_argument on an empty set or a non-positive entry.
  explicit NumericalMonoid(std::vector<long> generators);

  /// The minimal generating set, ascending.
  const std::vector<long>& generators() const noexcept { return gens_; }
  bool contains(long n) const;

 private:
  std::vector<long> gens_;
};

/// E-simple objects: the minimal generators.
std::vector<long> monoid_simples(const NumericalMonoid& m);
/// Largest k with n a sum of k generators. Throws std::invalid_argument if n is not in m.
std::size_t monoid_length(const NumericalMonoid& m, long n);
/// Every k admitting a factorization of n into k generators.
std::set<std::size_t> monoid_factorization_lengths(const NumericalMonoid& m, long n);
/// l(a + b) >= l(a) + l(b) for all members a, b with a + b <= bound.
PropertyReport check_monoid_superadditivity(const NumericalMonoid& m, long bound);

class FinitePoset {
 public:
  /// Elements with pairs (a, b) meaning a <= b. The order is the
  /// reflexive-transitive closure; throws std::invalid_argument on a cycle,
  /// duplicate names or unknown elements.
  FinitePoset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& relations);

  static FinitePoset diamond();
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& elements() const noexcept { return names_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }
  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
};

struct PosetQuiver {
  std::vector<std::string> vertices;  // poset elements, then "s0"
  std::vector<GradedArrow> arrows;    // degree 0: covers, degree 1: s0 -> each element
};

PosetQuiver poset_exact_quiver(const FinitePoset& p);

}  // namespace exactcat
