#pragma once

// Exact structures on mod kQ as subsets of the AR sequences, membership of
// short exact sequences by defect support, and the Boolean lattice they form.

#include "exactcat/catalog.hpp"

#include <boost/dynamic_bitset.hpp>

namespace exactcat {

/// One bit per AR sequence.
using Support = boost::dynamic_bitset<>;

class ExactStructure {
 public:
  ExactStructure() = default;
  explicit ExactStructure(Support selected) : selected_(std::move(selected)) {}

  static ExactStructure minimal(std::size_t n) { return ExactStructure(Support(n)); }
  static ExactStructure maximal(std::size_t n) { return ExactStructure(~Support(n)); }
  /// From 0-based AR indices.
  static ExactStructure from_indices(std::size_t n, const std::vector<std::size_t>& indices);

  const Support& selected() const noexcept { return selected_; }
  std::size_t size() const noexcept { return selected_.size(); }
  bool selects(std::size_t k) const { return selected_.test(k); }
  std::vector<std::size_t> indices() const;
  bool is_minimal() const { return selected_.none(); }
  bool is_maximal() const { return selected_.all(); }
  bool is_subset_of(const ExactStructure& other) const { return selected_.is_subset_of(other.selected_); }

  /// 1-based index set, e.g. "{1,3}"; "{}" for the split structure.
  std::string label() const;

  friend bool operator==(const ExactStructure& a, const ExactStructure& b) { return a.selected_ == b.selected_; }

 private:
  Support selected_;
};

ExactStructure meet(const ExactStructure& a, const ExactStructure& b);
ExactStructure join(const ExactStructure& a, const ExactStructure& b);
ExactStructure complement(const ExactStructure& a);

/// Defect at the right term of every AR sequence, indexed by AR index.
std::vector<std::size_t> defect_vector(const ARCatalog& catalog, const SESClass& s);
/// AR indices with nonzero defect.
Support support(const ARCatalog& catalog, const SESClass& s);
/// Same support from isomorphism classes alone, using left exactness of Hom(M, -):
/// defect = dim Hom(M, Z) - dim Hom(M, Y) + dim Hom(M, X).
Support support_from_classes(const ARCatalog& catalog, const ObjectClass& x, const ObjectClass& y,
                             const ObjectClass& z);

bool contains(const ExactStructure& e, const Support& s);
bool contains(const ARCatalog& catalog, const ExactStructure& e, const SESClass& s);

bool admissible_mono(const ARCatalog& catalog, const ExactStructure& e, const Morphism& i);
bool admissible_epi(const ARCatalog& catalog, const ExactStructure& e, const Morphism& d);

/// x is an E-subobject of y: some mono between the materialized objects is
/// admissible. Decided by enumerating Hom(x, y) over F_p.
bool is_subobject(const ARCatalog& catalog, const ExactStructure& e, const ObjectClass& x, const ObjectClass& y);

/// Smallest structure containing every generator.
ExactStructure generated_structure(const ARCatalog& catalog, std::span<const SESClass> gens);

struct ExLattice {
  std::vector<ExactStructure> structures;  // ordered by the bit pattern as a number
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (smaller, larger), single-bit differences
};

ExLattice enumerate_lattice(const ARCatalog& catalog);

/// Structure selecting the AR sequences whose restriction to `sub` splits.
/// `sub` must use vertex labels and arrow names of the catalog's quiver.
ExactStructure restricted_split_structure(const ARCatalog& catalog, const Quiver& sub);

struct AxiomReport {
  bool ok = true;
  std::size_t monics = 0;
  std::size_t compositions = 0;
  std::size_t pushouts = 0;
  std::size_t pullbacks = 0;
  std::vector<std::string> counterexamples;
};

/// Checks (E1), (E1)op, (E2) and (E2)op on all admissible monics / epics between
/// objects of total dimension <= bound.
AxiomReport axiom_spot_check(const ARCatalog& catalog, const ExactStructure& e, std::size_t bound);

/// All isomorphism classes (including 0) of total dimension <= cap, ordered by
/// total dimension and then lexicographically.
std::vector<ObjectClass> enumerate_classes(const ARCatalog& catalog, std::size_t cap);

/// Every short exact sequence X -> Y -> Z with dim X + dim Z <= cap, up to the
/// isomorphism classes of its terms, obtained by realizing every element of
/// Ext(Z, X) over F_p.
class SequenceCensus {
 public:
  struct Entry {
    std::size_t left, middle, right;  // ids into classes()
    Support support;
  };

  SequenceCensus(const ARCatalog& catalog, std::size_t cap);

  const ARCatalog& catalog() const noexcept { return *catalog_; }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<ObjectClass>& classes() const noexcept { return classes_; }
  const ObjectClass& object(std::size_t id) const { return classes_.at(id); }
  std::optional<std::size_t> id_of(const ObjectClass& c) const;
  /// Throws CapExceeded when the indecomposable is larger than the cap.
  std::size_t id_of_indecomposable(std::size_t catalog_index) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  /// Entries whose middle term is the given class.
  const std::vector<std::size_t>& ending_in(std::size_t middle) const { return by_middle_.at(middle); }
  std::size_t realized() const noexcept { return realized_; }

 private:
  const ARCatalog* catalog_;
  std::size_t cap_;
  std::vector<ObjectClass> classes_;
  std::map<ObjectClass, std::size_t> ids_;
  std::vector<std::size_t> indecomposable_ids_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_middle_;
  std::size_t realized_ = 0;
};

}  // namespace exactcat
