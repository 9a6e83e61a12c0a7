#pragma once

// Ext^1 via minimal projective presentations, the linear pullback/pushout
// actions on extension classes, and the defect of a short exact sequence.

#include "exactcat/projective.hpp"

namespace exactcat {

/// A short exact sequence left -incl-> middle -proj-> right.
struct SESClass {
  Representation left, middle, right;
  Morphism incl, proj;
};

/// Ext^1(z, x) as the cokernel of Hom(P0, x) -> Hom(P1, x) for the minimal
/// presentation P1 -f-> P0 -> z. Elements of Hom(P1, x) are written as
/// concatenated generator images (one block x_{u_j} per generator of P1).
class ExtSpace {
 public:
  ExtSpace(const PrimeField& field, Representation z, Representation x);
  /// Reuses a presentation of z computed elsewhere.
  ExtSpace(const PrimeField& field, Representation z, Representation x, Presentation pres);

  const Representation& z() const noexcept { return z_; }
  const Representation& x() const noexcept { return x_; }
  const Presentation& presentation() const noexcept { return pres_; }
  Eigen::Index dim() const noexcept { return coker_.rows(); }

  /// Coordinates of the class of a cocycle given in generator form.
  Vector coordinates(const Vector& cocycle) const { return field_.mul(coker_, cocycle); }
  /// A cocycle P1 -> x representing the class with the given coordinates.
  Morphism cocycle(const Vector& coeffs) const;
  const PrimeField& field() const noexcept { return field_; }

 private:
  void build();

  PrimeField field_;
  Representation z_, x_;
  Presentation pres_;
  Matrix coker_;  // dim x (sum of x_{u_j}); kills the coboundaries
  Matrix reps_;   // columns: representatives with coker_ * reps_ = I
};

inline ExtSpace ext_space(const PrimeField& field, const Representation& z, const Representation& x) {
  return ExtSpace(field, z, x);
}

/// Pushout of the presentation along the cocycle: x -> E -> z.
SESClass realize(const ExtSpace& e, const Vector& coeffs);

/// Coordinates of a sequence x -> Y -> z (same x and z as e, entrywise) in e.
Vector linearize(const ExtSpace& e, const SESClass& s);

/// Matrix of h^*: Ext(z, x) -> Ext(z', x) for h: z' -> z, where target = Ext(z', x).
Matrix pullback_matrix(const ExtSpace& source, const ExtSpace& target, const Morphism& h);
/// Matrix of g_*: Ext(z, x) -> Ext(z, x') for g: x -> x', where target = Ext(z, x').
Matrix pushout_matrix(const ExtSpace& source, const ExtSpace& target, const Morphism& g);

Vector pullback_action(const ExtSpace& source, const ExtSpace& target, const Vector& coeffs, const Morphism& h);
Vector pushout_action(const ExtSpace& source, const ExtSpace& target, const Vector& coeffs, const Morphism& g);

/// dim coker(Hom(m, middle) -> Hom(m, right)).
std::size_t defect(const PrimeField& field, const SESClass& s, const Representation& m);

/// True when incl admits a retraction.
bool splits(const PrimeField& field, const SESClass& s);

/// Checks incl mono, proj epi, proj o incl = 0 and dimension exactness vertexwise.
bool is_exact(const PrimeField& field, const SESClass& s);

/// The split sequence x -> x (+) z -> z.
SESClass split_sequence(const Representation& x, const Representation& z);

/// Componentwise direct sum of two sequences.
SESClass direct_sum(const SESClass& a, const SESClass& b);

/// Euler form <a, b> = sum_v a_v b_v - sum_{arrows s->t} a_s b_t.
long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// The sequence (i, cokernel of i).
SESClass sequence_from_mono(const PrimeField& field, const Morphism& i);
/// The sequence (kernel of d, d).
SESClass sequence_from_epi(const PrimeField& field, const Morphism& d);

}  // namespace exactcat
