#include "exactcat/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactcat {

ProjectiveObject::ProjectiveObject(std::shared_ptr<const Quiver> quiver, std::vector<std::size_t> generators)
    : generators_(std::move(generators)) {
  const Quiver& q = *quiver;
  const std::size_t nv = q.vertex_count();
  paths_.resize(generators_.size());
  offsets_.assign(nv, std::vector<Eigen::Index>(generators_.size(), 0));
  DimVector dims(nv, 0);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    paths_[i].resize(nv);
    for (std::size_t w = 0; w < nv; ++w) {
      paths_[i][w] = q.paths(generators_[i], w);
      offsets_[w][i] = dims[w];
      dims[w] += static_cast<Eigen::Index>(paths_[i][w].size());
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    Matrix m = zeros(dims[arr.target], dims[arr.source]);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& from = paths_[i][arr.source];
      for (std::size_t k = 0; k < from.size(); ++k) {
        Path longer = from[k];
        longer.push_back(a);
        m(basis_index(i, arr.target, longer), offsets_[arr.source][i] + static_cast<Eigen::Index>(k)) = 1;
      }
    }
    maps.push_back(std::move(m));
  }
  object_ = Representation(std::move(quiver), std::move(dims), std::move(maps));
}

Eigen::Index ProjectiveObject::basis_index(std::size_t i, std::size_t w, const Path& p) const {
  const auto& list = paths_.at(i).at(w);
  auto it = std::find(list.begin(), list.end(), p);
  if (it == list.end()) throw std::invalid_argument("path does not start at the generator or end at w");
  return offsets_[w][i] + static_cast<Eigen::Index>(it - list.begin());
}

Representation path_projective(std::shared_ptr<const Quiver> quiver, std::size_t v) {
  return ProjectiveObject(std::move(quiver), {v}).object();
}

Morphism morphism_from_generators(const PrimeField& field, const ProjectiveObject& p,
                                  const Representation& x, const std::vector<Vector>& images) {
  const auto& gens = p.generators();
  if (images.size() != gens.size()) throw std::invalid_argument("one image per generator is required");
  const std::size_t nv = x.dims().size();
  std::vector<Matrix> comps;
  for (std::size_t w = 0; w < nv; ++w) {
    Matrix m = zeros(x.dim(w), p.object().dim(w));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (images[i].size() != x.dim(gens[i])) throw std::invalid_argument("generator image has the wrong size");
      const auto& ps = p.paths(i, w);
      for (std::size_t k = 0; k < ps.size(); ++k)
        m.col(p.offset(i, w) + static_cast<Eigen::Index>(k)) = field.mul(x.path_map(field, gens[i], ps[k]), images[i]);
    }
    comps.push_back(std::move(m));
  }
  return Morphism(p.object(), x, std::move(comps));
}

std::vector<Vector> evaluate_on_generators(const ProjectiveObject& p, const Morphism& f) {
  std::vector<Vector> out;
  const auto& gens = p.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(f.component(gens[i]).col(p.offset(i, gens[i])));  // trivial path comes first
  return out;
}

Vector flatten_on_generators(const ProjectiveObject& p, const Morphism& f) {
  const auto parts = evaluate_on_generators(p, f);
  Eigen::Index n = 0;
  for (const auto& v : parts) n += v.size();
  Vector out(n);
  Eigen::Index k = 0;
  for (const auto& v : parts) {
    out.segment(k, v.size()) = v;
    k += v.size();
  }
  return out;
}

std::vector<Vector> split_generator_vector(const ProjectiveObject& p, const Representation& x,
                                           const Vector& flat) {
  std::vector<Vector> out;
  Eigen::Index k = 0;
  for (auto v : p.generators()) {
    out.push_back(flat.segment(k, x.dim(v)));
    k += x.dim(v);
  }
  if (k != flat.size()) throw std::invalid_argument("generator vector has the wrong length");
  return out;
}

ProjectiveCover projective_cover(const PrimeField& field, const Representation& x) {
  const Quiver& q = x.quiver();
  std::vector<std::size_t> gens;
  std::vector<Vector> images;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix span = zeros(x.dim(v), 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).target == v) span = hstack(span, x.map(a));
    std::size_t r = rank(field, span);
    for (Eigen::Index k = 0; k < x.dim(v); ++k) {
      Vector e = Vector::Zero(x.dim(v));
      e(k) = 1;
      Matrix extended = hstack(span, e);
      const std::size_t r2 = rank(field, extended);
      if (r2 == r) continue;
      span = std::move(extended);
      r = r2;
      gens.push_back(v);
      images.push_back(std::move(e));
    }
  }
  ProjectiveObject cover(x.quiver_ptr(), std::move(gens));
  Morphism projection = morphism_from_generators(field, cover, x, images);
  return {std::move(cover), std::move(projection)};
}

Presentation minimal_presentation(const PrimeField& field, const Representation& x) {
  ProjectiveCover top = projective_cover(field, x);
  KernelResult k = kernel_rep(field, top.projection);
  ProjectiveCover second = projective_cover(field, k.object);
  Morphism f = compose(field, k.inclusion, second.projection);
  return {std::move(top.cover), std::move(second.cover), std::move(f), std::move(top.projection)};
}

Representation transpose(const PrimeField& field, const Representation& x, std::shared_ptr<const Quiver> opposite) {
  const Presentation pres = minimal_presentation(field, x);
  const ProjectiveObject p0op(opposite, pres.p0.generators());
  const ProjectiveObject p1op(opposite, pres.p1.generators());
  const auto& g0 = pres.p0.generators();
  const auto& g1 = pres.p1.generators();
  const auto coeffs = evaluate_on_generators(pres.p1, pres.f);  // coeffs[j] lives in (P0)_{u_j}

  // Hom(f, A): generator i of P0^op goes to sum_j sum_p c^{(j)}_{(i,p)} p^op in P1^op at v_i.
  std::vector<Vector> images;
  for (std::size_t i = 0; i < g0.size(); ++i) {
    Vector img = Vector::Zero(p1op.object().dim(g0[i]));
    for (std::size_t j = 0; j < g1.size(); ++j) {
      const auto& ps = pres.p0.paths(i, g1[j]);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        const Residue c = coeffs[j](pres.p0.offset(i, g1[j]) + static_cast<Eigen::Index>(k));
        if (c == 0) continue;
        const Eigen::Index row = p1op.basis_index(j, g0[i], opposite_path(ps[k]));
        img(row) = field.add(img(row), c);
      }
    }
    images.push_back(std::move(img));
  }
  const Morphism fstar = morphism_from_generators(field, p0op, p1op.object(), images);
  return cokernel_rep(field, fstar).object;
}

Representation tau(const PrimeField& field, const Representation& x, std::shared_ptr<const Quiver> opposite) {
  return dual(transpose(field, x, std::move(opposite)), x.quiver_ptr());
}

Representation tau_inverse(const PrimeField& field, const Representation& x,
                           std::shared_ptr<const Quiver> opposite) {
  return transpose(field, dual(x, std::move(opposite)), x.quiver_ptr());
}

}  // namespace exactcat
