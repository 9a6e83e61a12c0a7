#pragma once

// Invariants of an exact category (mod kQ, E): E-subobjects, E-simples, the
// E-length, the Gabriel-Roiter measure, the graded quiver Q(A, E) and the
// property checks built on them.

#include "exactcat/exact_structures.hpp"

#include <compare>

namespace exactcat {

/// Strictly increasing word of lengths.
using GRVector = std::vector<std::size_t>;

/// The order on words: a proper prefix is smaller, otherwise at the first
/// difference the larger entry is the smaller word.
std::strong_ordering gr_compare(const GRVector& a, const GRVector& b);
std::string gr_string(const GRVector& v);
/// Every nonempty strictly increasing word with entries in 1..max_entry.
std::vector<GRVector> increasing_words(std::size_t max_entry);

struct GradedArrow {
  std::size_t from, to;  // catalog indices
  int degree;            // 0: irreducible map, 1: extension
  std::size_t multiplicity;
  friend bool operator==(const GradedArrow&, const GradedArrow&) = default;
};

struct GradedQuiver {
  std::vector<std::size_t> vertices;
  std::vector<GradedArrow> arrows;  // sorted by (degree, from, to)
};

enum class RadicalMode { subcategory, ambient };

struct SubobjectPoset {
  std::vector<std::size_t> nodes;                          // census ids
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger) census ids
};

struct PropertyReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t strict = 0;  // e.g. strict inequalities in superadditivity
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct GR8Counterexample {
  std::size_t x;      // catalog index
  ObjectClass y;
  GRVector mu_x, max_mu_y;
};

struct GR8Report {
  std::size_t checked = 0;
  std::vector<GR8Counterexample> counterexamples;  // equality but X not a summand
  std::vector<std::string> violations;             // mu(X) above max mu(Y_i)
};

struct Predecessors {
  std::vector<std::size_t> indices;  // all maximizers, by catalog index
  bool simple = false;               // x is E-simple and has none
};

/// An exact structure together with a census that bounds the objects it can
/// reason about. Lengths and measures are memoized.
class ExactCategory {
 public:
  ExactCategory(const SequenceCensus& census, ExactStructure e);

  const ARCatalog& catalog() const { return census_->catalog(); }
  const SequenceCensus& census() const { return *census_; }
  const ExactStructure& structure() const noexcept { return e_; }

  /// Proper E-subobjects of a census object (distinct ids).
  const std::vector<std::size_t>& proper_subobjects(std::size_t id) const;
  /// x is an E-subobject of y (reflexive).
  bool is_subobject(std::size_t x, std::size_t y) const;
  bool is_proper_subobject(std::size_t x, std::size_t y) const;

  std::size_t length(std::size_t id) const;
  std::size_t length(const ObjectClass& c) const;

  std::vector<std::size_t> e_simples() const;
  bool is_e_simple(std::size_t indecomposable) const;

  GRVector gr_measure(std::size_t indecomposable) const;
  /// Max of the measures of indecomposable E-subobjects; throws for 0.
  GRVector gr_measure_extended(const ObjectClass& c) const;
  Predecessors gr_predecessors(std::size_t indecomposable) const;
  /// Proper indecomposable E-subobjects of an indecomposable, by catalog index.
  std::vector<std::size_t> indecomposable_subobjects(std::size_t indecomposable) const;

  /// Both return false for a chain whose consecutive terms are not proper E-inclusions.
  bool is_gr_filtration(const std::vector<std::size_t>& chain) const;
  bool is_mu_filtration(const std::vector<std::size_t>& chain) const;
  /// A chain of indecomposables realizing gr_measure(x).
  std::vector<std::size_t> measure_filtration(std::size_t indecomposable) const;

  SubobjectPoset subobject_poset(std::size_t cap) const;

  GradedQuiver exact_quiver(RadicalMode mode = RadicalMode::subcategory) const;

  /// l(Y) >= l(X) + l(Z) for member sequences with middle total dim <= cap.
  PropertyReport check_superadditivity(std::size_t cap) const;
  /// GR1-GR7 over all indecomposables inside the census.
  PropertyReport check_gr_axioms() const;
  /// X indecomposable inside Y = sum of at most three indecomposables, total dim <= cap.
  GR8Report check_gr8(std::size_t cap) const;
  /// Reflexivity, antisymmetry, transitivity of the subobject relation and
  /// strict growth of length along proper inclusions.
  PropertyReport check_poset_axioms(std::size_t cap) const;

 private:
  std::size_t indecomposable_id(std::size_t i) const { return census_->id_of_indecomposable(i); }

  const SequenceCensus* census_;
  ExactStructure e_;
  mutable std::vector<std::optional<std::vector<std::size_t>>> subobjects_;
  mutable std::vector<std::optional<std::size_t>> lengths_;
  mutable std::vector<std::optional<GRVector>> measures_;
};

/// For a chain of structures e_1 <= e_2 <= ...: lengths of every census object
/// and measures of every indecomposable along the chain.
struct ReductionReport {
  std::vector<ExactStructure> chain;
  std::vector<std::size_t> objects;                      // census ids
  std::vector<std::vector<std::size_t>> lengths;         // [object][step]
  std::vector<std::size_t> indecomposables;
  std::vector<std::vector<GRVector>> measures;           // [indecomposable][step]
  std::vector<std::string> monotonicity_violations;
  std::vector<std::size_t> measure_direction_changes;    // indecomposables whose measure goes both ways
};

ReductionReport reduction_report(const SequenceCensus& census, const std::vector<ExactStructure>& chain);

/// Independent membership oracle: starts from the spans of the selected AR
/// classes and closes under pullback and pushout along Hom bases between
/// indecomposables until nothing changes.
class ClosureOracle {
 public:
  ClosureOracle(const ARCatalog& catalog, const ExactStructure& e);

  const ExtSpace& ext(std::size_t z, std::size_t x) const { return *spaces_.at(z * n_ + x); }
  bool contains(std::size_t z, std::size_t x, const Vector& coeffs) const;
  std::size_t subspace_dim(std::size_t z, std::size_t x) const;
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  const ARCatalog* catalog_;
  std::size_t n_;
  std::vector<std::shared_ptr<ExtSpace>> spaces_;
  std::vector<Matrix> subspaces_;  // columns span the closure inside each Ext
  std::size_t iterations_ = 0;
};

/// Totality, antisymmetry and transitivity of gr_compare, and the prefix and
/// first-difference rules, on increasing_words(max_entry).
PropertyReport check_gr_order(std::size_t max_entry);

/// l_a(X) <= l_b(X) for every census object and every pair of structures a <= b.
/// `checked` counts (pair, object) comparisons.
PropertyReport check_length_monotonicity(const SequenceCensus& census, const std::vector<ExactStructure>& structures);

/// Compares the defect criterion with ClosureOracle on every class of every
/// Ext(z, x) between indecomposables.
PropertyReport check_oracle_equivalence(const ARCatalog& catalog, const ExactStructure& e);

/// Field-independent summary of all invariants of one structure: catalog
/// indices are replaced by dimension vectors so summaries over different
/// fields compare directly.
std::string invariant_fingerprint(const ExactCategory& cat);

}  // namespace exactcat
