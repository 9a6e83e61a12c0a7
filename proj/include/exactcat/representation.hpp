#pragma once

// Finite-dimensional representations of a quiver over F_p and the morphisms
// between them. Everything here is a value type; operations that need field
// arithmetic take the PrimeField explicitly.

#include "exactcat/field.hpp"
#include "exactcat/quiver.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace exactcat {

using DimVector = std::vector<Eigen::Index>;

class Representation {
 public:
  Representation() = default;
  /// maps[a] is dims[target(a)] x dims[source(a)]. Throws on a shape mismatch.
  Representation(std::shared_ptr<const Quiver> quiver, DimVector dims, std::vector<Matrix> maps);

  static Representation zero(std::shared_ptr<const Quiver> quiver);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const DimVector& dims() const noexcept { return dims_; }
  Eigen::Index dim(std::size_t v) const { return dims_.at(v); }
  Eigen::Index total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
  const Matrix& map(std::size_t a) const { return maps_.at(a); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  /// Linear map along a path (identity for the trivial path at `start`).
  Matrix path_map(const PrimeField& field, std::size_t start, const Path& path) const;

  /// Entrywise equality of dimensions and matrices (not isomorphism).
  friend bool operator==(const Representation& a, const Representation& b);

 private:
  std::shared_ptr<const Quiver> quiver_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

/// A family of linear maps, one per vertex, intertwining the arrow maps.
class Morphism {
 public:
  Morphism() = default;
  /// components[v] is target.dim(v) x source.dim(v). Shapes are checked;
  /// intertwining is checked separately by is_morphism().
  Morphism(Representation source, Representation target, std::vector<Matrix> components);

  static Morphism zero(const Representation& source, const Representation& target);
  static Morphism identity(const Representation& x);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const Matrix& component(std::size_t v) const { return components_.at(v); }
  const std::vector<Matrix>& components() const noexcept { return components_; }

  /// Components concatenated vertex by vertex, each row-major.
  Vector flatten() const;

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> components_;
};

bool is_morphism(const PrimeField& field, const Morphism& f);
bool is_zero(const Morphism& f);
bool is_mono(const PrimeField& field, const Morphism& f);
bool is_epi(const PrimeField& field, const Morphism& f);
bool is_iso(const PrimeField& field, const Morphism& f);

/// g after f.
Morphism compose(const PrimeField& field, const Morphism& g, const Morphism& f);
Morphism add(const PrimeField& field, const Morphism& f, const Morphism& g);
Morphism scale(const PrimeField& field, Residue c, const Morphism& f);
/// Sum of coeffs[i] * basis[i]; basis must be nonempty.
Morphism combine(const PrimeField& field, std::span<const Morphism> basis, const Vector& coeffs);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(std::shared_ptr<const Quiver> quiver, std::span<const Representation> parts);

/// Canonical injection of the i-th summand into direct_sum(parts).
Morphism summand_inclusion(std::span<const Representation> parts, std::size_t i);
Morphism summand_projection(std::span<const Representation> parts, std::size_t i);

/// Basis of Hom(x, y): the null space of the linear intertwining system.
std::vector<Morphism> hom_basis(const PrimeField& field, const Representation& x, const Representation& y);
std::size_t hom_dimension(const PrimeField& field, const Representation& x, const Representation& y);

/// Matrix whose columns are the flattened basis morphisms.
Matrix flattened_basis(std::span<const Morphism> basis, Eigen::Index flat_size);

struct KernelResult {
  Representation object;
  Morphism inclusion;
};
struct CokernelResult {
  Representation object;
  Morphism projection;
};

KernelResult kernel_rep(const PrimeField& field, const Morphism& f);
CokernelResult cokernel_rep(const PrimeField& field, const Morphism& f);

/// h with h after q == g, for q vertexwise surjective and g vanishing on ker q.
Morphism factor_through_epi(const PrimeField& field, const Morphism& q, const Morphism& g);
/// h with i after h == g, for i vertexwise injective and image(g) inside image(i).
Morphism factor_through_mono(const PrimeField& field, const Morphism& i, const Morphism& g);

/// Visits every element of the span of `basis` (p^n of them) as a Morphism.
/// The zero morphism x -> y is visited first. Stops when visit returns false.
template <typename Visitor>
void for_each_hom_element(const PrimeField& field, const Representation& x, const Representation& y,
                          std::span<const Morphism> basis, Visitor&& visit) {
  if (basis.empty()) {
    visit(Morphism::zero(x, y));
    return;
  }
  for_each_vector(field, static_cast<Eigen::Index>(basis.size()),
                  [&](const Vector& c) { return visit(combine(field, basis, c)); });
}

/// Some isomorphism x -> y found by enumerating Hom(x, y), if one exists.
std::optional<Morphism> find_isomorphism(const PrimeField& field, const Representation& x,
                                         const Representation& y);

/// The dual representation D(x) over the opposite quiver: transposed maps.
Representation dual(const Representation& x, std::shared_ptr<const Quiver> opposite);

/// Restriction to a sub-quiver whose vertex labels and arrow names occur in x's quiver.
Representation restrict_to(const Representation& x, std::shared_ptr<const Quiver> sub);
Morphism restrict_to(const Morphism& f, std::shared_ptr<const Quiver> sub);

/// Dimension vector as a compact string, e.g. "011" (comma separated if any entry > 9).
std::string dim_string(const DimVector& d);

}  // namespace exactcat
