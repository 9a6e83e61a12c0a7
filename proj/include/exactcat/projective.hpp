#pragma once

// Path projectives, projective covers, minimal presentations and the
// Auslander-Reiten translates built from them.

#include "exactcat/representation.hpp"

namespace exactcat {

/// P(v): the vector space at w has the paths v -> w as basis; arrows act by
/// appending.
Representation path_projective(std::shared_ptr<const Quiver> quiver, std::size_t v);

/// Direct sum of P(v) over a list of generator vertices (repetitions allowed).
/// A morphism out of it is fixed by the images of the trivial paths.
class ProjectiveObject {
 public:
  ProjectiveObject() = default;
  ProjectiveObject(std::shared_ptr<const Quiver> quiver, std::vector<std::size_t> generators);

  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  const Representation& object() const noexcept { return object_; }

  /// Row of basis element (generator i, path p: v_i -> w) inside object().dim(w).
  Eigen::Index basis_index(std::size_t i, std::size_t w, const Path& p) const;
  /// Start of the block of generator i inside the space at w.
  Eigen::Index offset(std::size_t i, std::size_t w) const { return offsets_[w][i]; }
  /// Paths v_i -> w, in the order used for the basis.
  const std::vector<Path>& paths(std::size_t i, std::size_t w) const { return paths_[i][w]; }

 private:
  std::vector<std::size_t> generators_;
  Representation object_;
  std::vector<std::vector<Eigen::Index>> offsets_;      // [w][i]
  std::vector<std::vector<std::vector<Path>>> paths_;  // [i][w]
};

/// The morphism P -> x sending generator i to images[i] in x_{v_i}.
Morphism morphism_from_generators(const PrimeField& field, const ProjectiveObject& p,
                                  const Representation& x, const std::vector<Vector>& images);

/// Images of the generators under f: P -> x.
std::vector<Vector> evaluate_on_generators(const ProjectiveObject& p, const Morphism& f);

/// Concatenation of evaluate_on_generators; coordinates of Hom(P, x) = sum of x_{v_i}.
Vector flatten_on_generators(const ProjectiveObject& p, const Morphism& f);
std::vector<Vector> split_generator_vector(const ProjectiveObject& p, const Representation& x,
                                           const Vector& flat);

struct ProjectiveCover {
  ProjectiveObject cover;
  Morphism projection;  // cover -> x, epi
};

/// Generators at v are the standard basis vectors of x_v that extend a basis of
/// the arrow images into v, taken in order.
ProjectiveCover projective_cover(const PrimeField& field, const Representation& x);

/// P1 -f-> P0 -pi-> x -> 0 with both covers minimal. Over a path algebra f is mono.
struct Presentation {
  ProjectiveObject p0, p1;
  Morphism f;
  Morphism pi;
};

Presentation minimal_presentation(const PrimeField& field, const Representation& x);

/// Transpose Tr x = coker(Hom(f, A)) as a representation of `opposite`
/// (which must be x.quiver().opposite()).
Representation transpose(const PrimeField& field, const Representation& x,
                         std::shared_ptr<const Quiver> opposite);

/// tau = D Tr and tau^- = Tr D. Both return zero for projective (resp. injective) input.
Representation tau(const PrimeField& field, const Representation& x, std::shared_ptr<const Quiver> opposite);
Representation tau_inverse(const PrimeField& field, const Representation& x,
                           std::shared_ptr<const Quiver> opposite);

}  // namespace exactcat
