#pragma once

// The complete list of indecomposables of a representation-finite quiver,
// built from the projectives by repeated inverse translation, together with
// Hom dimensions and one concrete Auslander-Reiten sequence per
// non-projective indecomposable.

#include "exactcat/homological.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace exactcat {

/// Sorted multiset of catalog indices; the empty class is the zero object.
using ObjectClass = std::vector<std::size_t>;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ARSequence {
  std::size_t index = 0;        // position in ARCatalog::ar_sequences()
  std::size_t left = 0;         // catalog index of tau(right)
  std::size_t right = 0;        // catalog index of the non-projective end term
  ObjectClass middle_class;
  SESClass sequence;
};

class ARCatalog {
 public:
  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
  const std::shared_ptr<const Quiver>& opposite_ptr() const noexcept { return opposite_; }
  const PrimeField& field() const noexcept { return field_; }

  std::size_t size() const noexcept { return indecomposables_.size(); }
  const Representation& indecomposable(std::size_t i) const { return indecomposables_.at(i); }
  const std::vector<Representation>& indecomposables() const noexcept { return indecomposables_; }
  bool is_projective(std::size_t i) const { return projective_.at(i); }
  bool is_injective(std::size_t i) const { return injective_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t hom_dim(std::size_t i, std::size_t j) const { return hom_dims_.at(i).at(j); }
  std::size_t total_dim(std::size_t i) const { return static_cast<std::size_t>(indecomposable(i).total_dim()); }

  /// Catalog index of P(v) / I(v).
  std::size_t projective_at(std::size_t v) const { return projective_at_.at(v); }
  std::size_t injective_at(std::size_t v) const { return injective_at_.at(v); }

  const std::vector<ARSequence>& ar_sequences() const noexcept { return ar_sequences_; }
  /// Index of the AR sequence ending in indecomposable i (absent for projectives).
  std::optional<std::size_t> ar_index(std::size_t i) const { return ar_index_.at(i); }
  std::optional<std::size_t> translate(std::size_t i) const { return tau_.at(i); }
  std::optional<std::size_t> inverse_translate(std::size_t i) const { return tau_inverse_.at(i); }

  /// Arrows of the AR quiver as (from, to) pairs, one entry per irreducible map
  /// in a basis of irr(from, to). Sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& ar_quiver_arrows() const noexcept {
    return ar_arrows_;
  }

  /// Index by name ("S2", "P1", ...) or dimension string ("011"); absent if unknown.
  std::optional<std::size_t> find(const std::string& key) const;
  /// Catalog index isomorphic to an indecomposable x.
  std::optional<std::size_t> index_of(const Representation& x) const;

  Representation materialize(const ObjectClass& c) const;
  std::string class_name(const ObjectClass& c) const;
  DimVector class_dims(const ObjectClass& c) const;
  std::size_t class_total_dim(const ObjectClass& c) const;

  /// Isomorphism class from the Hom-dimension profile dim Hom(I_k, x), which
  /// determines x up to isomorphism for representation-finite algebras.
  ObjectClass classify(const Representation& x) const;

 private:
  friend ARCatalog build_catalog(std::shared_ptr<const Quiver> quiver, const PrimeField& field, std::size_t cap);

  std::shared_ptr<const Quiver> quiver_, opposite_;
  PrimeField field_;
  std::vector<Representation> indecomposables_;
  std::vector<bool> projective_, injective_;
  std::vector<std::size_t> projective_at_, injective_at_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> hom_dims_;
  std::vector<ARSequence> ar_sequences_;
  std::vector<std::optional<std::size_t>> ar_index_, tau_, tau_inverse_;
  std::vector<std::pair<std::size_t, std::size_t>> ar_arrows_;
  Eigen::MatrixXd profile_;  // profile_(l, k) = dim Hom(I_l, I_k)
};

/// Throws CapExceeded("not representation-finite at this cap") once more than
/// `cap` indecomposables have been found.
ARCatalog build_catalog(std::shared_ptr<const Quiver> quiver, const PrimeField& field, std::size_t cap = 200);

/// Split-summand search: candidates by decreasing total dimension (ties by
/// dimension vector), a summand is split off when some mono I -> x has a retraction.
ObjectClass decompose(const ARCatalog& catalog, const Representation& x);

bool iso_test(const ARCatalog& catalog, const Representation& x, const Representation& y);

/// tau of an indecomposable by catalog index; absent for projectives.
std::optional<std::size_t> translate(const ARCatalog& catalog, std::size_t m);

/// The AR sequence ending in non-projective m. Throws for projective m.
const ARSequence& ar_sequence_for(const ARCatalog& catalog, std::size_t m);

}  // namespace exactcat
