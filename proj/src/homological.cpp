#include "exactcat/homological.hpp"

#include <array>
#include <stdexcept>

namespace exactcat {

ExtSpace::ExtSpace(const PrimeField& field, Representation z, Representation x)
    : field_(field), z_(std::move(z)), x_(std::move(x)) {
  pres_ = minimal_presentation(field_, z_);
  build();
}

ExtSpace::ExtSpace(const PrimeField& field, Representation z, Representation x, Presentation pres)
    : field_(field), z_(std::move(z)), x_(std::move(x)), pres_(std::move(pres)) {
  build();
}

void ExtSpace::build() {
  const auto& g0 = pres_.p0.generators();
  Eigen::Index n = 0;
  for (auto u : pres_.p1.generators()) n += x_.dim(u);

  // Coboundaries: g o f for g running over a basis of Hom(P0, x) = sum of x_{v_i}.
  Matrix coboundaries = zeros(n, 0);
  for (std::size_t i = 0; i < g0.size(); ++i) {
    for (Eigen::Index b = 0; b < x_.dim(g0[i]); ++b) {
      std::vector<Vector> images;
      for (std::size_t k = 0; k < g0.size(); ++k) images.push_back(Vector::Zero(x_.dim(g0[k])));
      images[i](b) = 1;
      const Morphism g = morphism_from_generators(field_, pres_.p0, x_, images);
      coboundaries = hstack(coboundaries, flatten_on_generators(pres_.p1, compose(field_, g, pres_.f)));
    }
  }
  coker_ = cokernel_projection(field_, coboundaries).proj;
  auto r = solve(field_, coker_, identity(coker_.rows()));
  if (!r) throw std::logic_error("ExtSpace: cokernel projection is not surjective");
  reps_ = std::move(*r);
}

Morphism ExtSpace::cocycle(const Vector& coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("Ext coordinates have the wrong length");
  const Vector flat = field_.mul(reps_, coeffs);
  return morphism_from_generators(field_, pres_.p1, x_, split_generator_vector(pres_.p1, x_, flat));
}

SESClass realize(const ExtSpace& e, const Vector& coeffs) {
  const PrimeField& field = e.field();
  const Presentation& pres = e.presentation();
  const Morphism xi = e.cocycle(coeffs);
  const Representation& p0 = pres.p0.object();
  const std::array<Representation, 2> parts{e.x(), p0};
  const Representation sum = direct_sum(e.x(), p0);

  std::vector<Matrix> glue;
  for (std::size_t w = 0; w < xi.components().size(); ++w)
    glue.push_back(field.reduce(vstack(-xi.component(w), pres.f.component(w))));
  const CokernelResult c = cokernel_rep(field, Morphism(pres.p1.object(), sum, std::move(glue)));

  const Morphism incl = compose(field, c.projection, summand_inclusion(parts, 0));
  std::vector<Matrix> onto_z;
  for (std::size_t w = 0; w < xi.components().size(); ++w)
    onto_z.push_back(hstack(zeros(e.z().dim(w), e.x().dim(w)), pres.pi.component(w)));
  const Morphism proj = factor_through_epi(field, c.projection, Morphism(sum, e.z(), std::move(onto_z)));
  return {e.x(), c.object, e.z(), incl, proj};
}

namespace {

// phi with target_epi o phi == g for a morphism g out of a projective.
Morphism lift_from_projective(const PrimeField& field, const ProjectiveObject& p, const Morphism& g,
                              const Morphism& target_epi) {
  const auto values = evaluate_on_generators(p, g);
  std::vector<Vector> lifts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto y = solve(field, target_epi.component(p.generators()[i]), values[i]);
    if (!y) throw std::invalid_argument("lift_from_projective: map is not onto");
    lifts.push_back(y->col(0));
  }
  return morphism_from_generators(field, p, target_epi.source(), lifts);
}

}  // namespace

Vector linearize(const ExtSpace& e, const SESClass& s) {
  const PrimeField& field = e.field();
  const Presentation& pres = e.presentation();
  if (!(s.right == e.z()) || !(s.left == e.x()))
    throw std::invalid_argument("linearize: end terms differ from the Ext space");
  const Morphism phi0 = lift_from_projective(field, pres.p0, pres.pi, s.proj);
  const Morphism xi = factor_through_mono(field, s.incl, compose(field, phi0, pres.f));
  return e.coordinates(flatten_on_generators(pres.p1, xi));
}

Matrix pullback_matrix(const ExtSpace& source, const ExtSpace& target, const Morphism& h) {
  const PrimeField& field = source.field();
  const Presentation& from = target.presentation();  // of z'
  const Presentation& to = source.presentation();    // of z
  const Morphism phi0 = lift_from_projective(field, from.p0, compose(field, h, from.pi), to.pi);
  const Morphism phi1 = factor_through_mono(field, to.f, compose(field, phi0, from.f));
  Matrix out = zeros(target.dim(), source.dim());
  for (Eigen::Index k = 0; k < source.dim(); ++k) {
    Vector e = Vector::Zero(source.dim());
    e(k) = 1;
    const Morphism moved = compose(field, source.cocycle(e), phi1);
    out.col(k) = target.coordinates(flatten_on_generators(from.p1, moved));
  }
  return out;
}

Matrix pushout_matrix(const ExtSpace& source, const ExtSpace& target, const Morphism& g) {
  const PrimeField& field = source.field();
  Matrix out = zeros(target.dim(), source.dim());
  for (Eigen::Index k = 0; k < source.dim(); ++k) {
    Vector e = Vector::Zero(source.dim());
    e(k) = 1;
    const Morphism moved = compose(field, g, source.cocycle(e));
    out.col(k) = target.coordinates(flatten_on_generators(target.presentation().p1, moved));
  }
  return out;
}

Vector pullback_action(const ExtSpace& source, const ExtSpace& target, const Vector& coeffs, const Morphism& h) {
  return source.field().mul(pullback_matrix(source, target, h), coeffs);
}

Vector pushout_action(const ExtSpace& source, const ExtSpace& target, const Vector& coeffs, const Morphism& g) {
  return source.field().mul(pushout_matrix(source, target, g), coeffs);
}

std::size_t defect(const PrimeField& field, const SESClass& s, const Representation& m) {
  const auto to_middle = hom_basis(field, m, s.middle);
  const std::size_t target_dim = hom_dimension(field, m, s.right);
  if (to_middle.empty()) return target_dim;
  Matrix images(0, 0);
  for (std::size_t k = 0; k < to_middle.size(); ++k) {
    const Vector v = compose(field, s.proj, to_middle[k]).flatten();
    if (k == 0) images = zeros(v.size(), static_cast<Eigen::Index>(to_middle.size()));
    images.col(static_cast<Eigen::Index>(k)) = v;
  }
  return target_dim - rank(field, images);
}

bool splits(const PrimeField& field, const SESClass& s) {
  if (s.left.is_zero()) return true;
  const auto back = hom_basis(field, s.middle, s.left);
  const Vector id = Morphism::identity(s.left).flatten();
  if (back.empty()) return false;
  Matrix images = zeros(id.size(), static_cast<Eigen::Index>(back.size()));
  for (std::size_t k = 0; k < back.size(); ++k)
    images.col(static_cast<Eigen::Index>(k)) = compose(field, back[k], s.incl).flatten();
  return solve(field, images, id).has_value();
}

bool is_exact(const PrimeField& field, const SESClass& s) {
  if (!is_morphism(field, s.incl) || !is_morphism(field, s.proj)) return false;
  if (!is_mono(field, s.incl) || !is_epi(field, s.proj)) return false;
  if (!is_zero(compose(field, s.proj, s.incl))) return false;
  for (std::size_t v = 0; v < s.middle.dims().size(); ++v)
    if (s.middle.dim(v) != s.left.dim(v) + s.right.dim(v)) return false;
  return true;
}

SESClass split_sequence(const Representation& x, const Representation& z) {
  const std::array<Representation, 2> parts{x, z};
  return {x, direct_sum(x, z), z, summand_inclusion(parts, 0), summand_projection(parts, 1)};
}

SESClass direct_sum(const SESClass& a, const SESClass& b) {
  std::vector<Matrix> incl, proj;
  for (std::size_t v = 0; v < a.middle.dims().size(); ++v) {
    incl.push_back(block_diagonal(a.incl.component(v), b.incl.component(v)));
    proj.push_back(block_diagonal(a.proj.component(v), b.proj.component(v)));
  }
  const Representation left = direct_sum(a.left, b.left);
  const Representation middle = direct_sum(a.middle, b.middle);
  const Representation right = direct_sum(a.right, b.right);
  return {left, middle, right, Morphism(left, middle, std::move(incl)), Morphism(middle, right, std::move(proj))};
}

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  long out = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out += static_cast<long>(a[v] * b[v]);
  for (const Arrow& arr : q.arrows()) out -= static_cast<long>(a[arr.source] * b[arr.target]);
  return out;
}

SESClass sequence_from_mono(const PrimeField& field, const Morphism& i) {
  const CokernelResult c = cokernel_rep(field, i);
  return {i.source(), i.target(), c.object, i, c.projection};
}

SESClass sequence_from_epi(const PrimeField& field, const Morphism& d) {
  const KernelResult k = kernel_rep(field, d);
  return {k.object, d.source(), d.target(), k.inclusion, d};
}

}  // namespace exactcat
