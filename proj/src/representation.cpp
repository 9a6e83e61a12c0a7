#include "exactcat/representation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace exactcat {

Representation::Representation(std::shared_ptr<const Quiver> quiver, DimVector dims,
                               std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw std::invalid_argument("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count())
    throw std::invalid_argument("dimension vector length does not match the vertex count");
  if (maps_.size() != quiver_->arrow_count())
    throw std::invalid_argument("one matrix per arrow is required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& arr = quiver_->arrow(a);
    if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
      throw std::invalid_argument("matrix for arrow '" + arr.name + "' has the wrong shape");
  }
  for (auto d : dims_)
    if (d < 0) throw std::invalid_argument("negative dimension");
}

Representation Representation::zero(std::shared_ptr<const Quiver> quiver) {
  std::vector<Matrix> maps(quiver->arrow_count(), Matrix(0, 0));
  DimVector dims(quiver->vertex_count(), 0);
  return Representation(std::move(quiver), std::move(dims), std::move(maps));
}

Eigen::Index Representation::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), Eigen::Index{0});
}

Matrix Representation::path_map(const PrimeField& field, std::size_t start, const Path& path) const {
  Matrix m = identity(dims_.at(start));
  for (std::size_t a : path) m = field.mul(maps_[a], m);
  return m;
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.dims_ != b.dims_ || a.maps_.size() != b.maps_.size()) return false;
  for (std::size_t i = 0; i < a.maps_.size(); ++i)
    if (a.maps_[i] != b.maps_[i]) return false;
  return true;
}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (components_.size() != source_.dims().size() || source_.dims().size() != target_.dims().size())
    throw std::invalid_argument("morphism needs one component per vertex");
  for (std::size_t v = 0; v < components_.size(); ++v)
    if (components_[v].rows() != target_.dim(v) || components_[v].cols() != source_.dim(v))
      throw std::invalid_argument("morphism component has the wrong shape");
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    comps.push_back(zeros(target.dim(v), source.dim(v)));
  return Morphism(source, target, std::move(comps));
}

Morphism Morphism::identity(const Representation& x) {
  std::vector<Matrix> comps;
  for (auto d : x.dims()) comps.push_back(exactcat::identity(d));
  return Morphism(x, x, std::move(comps));
}

Vector Morphism::flatten() const {
  Eigen::Index n = 0;
  for (const auto& c : components_) n += c.size();
  Vector out(n);
  Eigen::Index k = 0;
  for (const auto& c : components_)
    for (Eigen::Index r = 0; r < c.rows(); ++r)
      for (Eigen::Index col = 0; col < c.cols(); ++col) out(k++) = c(r, col);
  return out;
}

bool is_morphism(const PrimeField& field, const Morphism& f) {
  const Quiver& q = f.source().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const Matrix lhs = field.mul(f.component(arr.target), f.source().map(a));
    const Matrix rhs = field.mul(f.target().map(a), f.component(arr.source));
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_zero(const Morphism& f) {
  for (const auto& c : f.components())
    if (!is_zero(c)) return false;
  return true;
}

bool is_mono(const PrimeField& field, const Morphism& f) {
  for (const auto& c : f.components())
    if (static_cast<Eigen::Index>(rank(field, c)) != c.cols()) return false;
  return true;
}

bool is_epi(const PrimeField& field, const Morphism& f) {
  for (const auto& c : f.components())
    if (static_cast<Eigen::Index>(rank(field, c)) != c.rows()) return false;
  return true;
}

bool is_iso(const PrimeField& field, const Morphism& f) {
  return f.source().dims() == f.target().dims() && is_mono(field, f);
}

Morphism compose(const PrimeField& field, const Morphism& g, const Morphism& f) {
  if (f.target().dims() != g.source().dims())
    throw std::invalid_argument("compose: target of f is not the source of g");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v)
    comps.push_back(field.mul(g.component(v), f.component(v)));
  return Morphism(f.source(), g.target(), std::move(comps));
}

Morphism add(const PrimeField& field, const Morphism& f, const Morphism& g) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v)
    comps.push_back(field.reduce(f.component(v) + g.component(v)));
  return Morphism(f.source(), f.target(), std::move(comps));
}

Morphism scale(const PrimeField& field, Residue c, const Morphism& f) {
  std::vector<Matrix> comps;
  for (const auto& m : f.components()) comps.push_back(field.reduce(m * c));
  return Morphism(f.source(), f.target(), std::move(comps));
}

Morphism combine(const PrimeField& field, std::span<const Morphism> basis, const Vector& coeffs) {
  if (basis.empty()) throw std::invalid_argument("combine: empty basis");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < basis.front().components().size(); ++v) {
    Matrix m = zeros(basis.front().component(v).rows(), basis.front().component(v).cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs(static_cast<Eigen::Index>(i)) != 0)
        m += basis[i].component(v) * coeffs(static_cast<Eigen::Index>(i));
    comps.push_back(field.reduce(m));
  }
  return Morphism(basis.front().source(), basis.front().target(), std::move(comps));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  DimVector dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(block_diagonal(a.map(k), b.map(k)));
  return Representation(a.quiver_ptr(), std::move(dims), std::move(maps));
}

Representation direct_sum(std::shared_ptr<const Quiver> quiver, std::span<const Representation> parts) {
  Representation out = Representation::zero(std::move(quiver));
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

namespace {

// Offsets of each summand at each vertex.
std::vector<DimVector> summand_offsets(std::span<const Representation> parts) {
  std::vector<DimVector> offsets;
  DimVector running(parts.front().dims().size(), 0);
  for (const auto& p : parts) {
    offsets.push_back(running);
    for (std::size_t v = 0; v < running.size(); ++v) running[v] += p.dim(v);
  }
  return offsets;
}

}  // namespace

Morphism summand_inclusion(std::span<const Representation> parts, std::size_t i) {
  const Representation sum = direct_sum(parts.front().quiver_ptr(), parts);
  const auto offsets = summand_offsets(parts);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < sum.dims().size(); ++v) {
    Matrix m = zeros(sum.dim(v), parts[i].dim(v));
    m.block(offsets[i][v], 0, parts[i].dim(v), parts[i].dim(v)) = identity(parts[i].dim(v));
    comps.push_back(std::move(m));
  }
  return Morphism(parts[i], sum, std::move(comps));
}

Morphism summand_projection(std::span<const Representation> parts, std::size_t i) {
  const Representation sum = direct_sum(parts.front().quiver_ptr(), parts);
  const auto offsets = summand_offsets(parts);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < sum.dims().size(); ++v) {
    Matrix m = zeros(parts[i].dim(v), sum.dim(v));
    m.block(0, offsets[i][v], parts[i].dim(v), parts[i].dim(v)) = identity(parts[i].dim(v));
    comps.push_back(std::move(m));
  }
  return Morphism(sum, parts[i], std::move(comps));
}

std::vector<Morphism> hom_basis(const PrimeField& field, const Representation& x, const Representation& y) {
  const Quiver& q = x.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<Eigen::Index> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + y.dim(v) * x.dim(v);
  const Eigen::Index unknowns = offset[nv];

  Eigen::Index equations = 0;
  for (const Arrow& arr : q.arrows()) equations += y.dim(arr.target) * x.dim(arr.source);

  // f_t X_a - Y_a f_s = 0 for every arrow a: s -> t.
  Matrix system = zeros(equations, unknowns);
  Eigen::Index row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const std::size_t s = arr.source, t = arr.target;
    const Matrix& xa = x.map(a);
    const Matrix& ya = y.map(a);
    for (Eigen::Index r = 0; r < y.dim(t); ++r) {
      for (Eigen::Index c = 0; c < x.dim(s); ++c, ++row) {
        for (Eigen::Index k = 0; k < x.dim(t); ++k)
          system(row, offset[t] + r * x.dim(t) + k) += xa(k, c);
        for (Eigen::Index k = 0; k < y.dim(s); ++k)
          system(row, offset[s] + k * x.dim(s) + c) -= ya(r, k);
      }
    }
  }

  const Matrix kernel = kernel_basis(field, system);
  std::vector<Morphism> basis;
  basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix m(y.dim(v), x.dim(v));
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = kernel(offset[v] + r * x.dim(v) + c, j);
      comps.push_back(std::move(m));
    }
    basis.emplace_back(x, y, std::move(comps));
  }
  return basis;
}

std::size_t hom_dimension(const PrimeField& field, const Representation& x, const Representation& y) {
  return hom_basis(field, x, y).size();
}

Matrix flattened_basis(std::span<const Morphism> basis, Eigen::Index flat_size) {
  Matrix out(flat_size, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = basis[i].flatten();
  return out;
}

KernelResult kernel_rep(const PrimeField& field, const Morphism& f) {
  const Representation& x = f.source();
  const Quiver& q = x.quiver();
  std::vector<Matrix> incl;
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    incl.push_back(kernel_basis(field, f.component(v)));
    dims.push_back(incl.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    auto m = solve(field, incl[arr.target], field.mul(x.map(a), incl[arr.source]));
    if (!m) throw std::logic_error("kernel_rep: arrow does not preserve the kernel");
    maps.push_back(std::move(*m));
  }
  Representation k(x.quiver_ptr(), std::move(dims), std::move(maps));
  Morphism inclusion(k, x, std::move(incl));
  return {std::move(k), std::move(inclusion)};
}

CokernelResult cokernel_rep(const PrimeField& field, const Morphism& f) {
  const Representation& y = f.target();
  const Quiver& q = y.quiver();
  std::vector<Matrix> proj;
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    proj.push_back(cokernel_projection(field, f.component(v)).proj);
    dims.push_back(proj.back().rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    // M C_s = C_t Y_a
    const Matrix rhs = field.mul(proj[arr.target], y.map(a));
    auto mt = solve(field, proj[arr.source].transpose(), rhs.transpose());
    if (!mt) throw std::logic_error("cokernel_rep: arrow does not descend to the cokernel");
    maps.push_back(mt->transpose());
  }
  Representation c(y.quiver_ptr(), std::move(dims), std::move(maps));
  Morphism projection(y, c, std::move(proj));
  return {std::move(c), std::move(projection)};
}

Morphism factor_through_epi(const PrimeField& field, const Morphism& q, const Morphism& g) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < q.components().size(); ++v) {
    auto ht = solve(field, q.component(v).transpose(), g.component(v).transpose());
    if (!ht) throw std::invalid_argument("factor_through_epi: g does not vanish on the kernel");
    comps.push_back(ht->transpose());
  }
  return Morphism(q.target(), g.target(), std::move(comps));
}

Morphism factor_through_mono(const PrimeField& field, const Morphism& i, const Morphism& g) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < i.components().size(); ++v) {
    auto h = solve(field, i.component(v), g.component(v));
    if (!h) throw std::invalid_argument("factor_through_mono: image of g is not inside image of i");
    comps.push_back(std::move(*h));
  }
  return Morphism(g.source(), i.source(), std::move(comps));
}

std::optional<Morphism> find_isomorphism(const PrimeField& field, const Representation& x,
                                         const Representation& y) {
  if (x.dims() != y.dims()) return std::nullopt;
  if (x.is_zero()) return Morphism::zero(x, y);
  const auto basis = hom_basis(field, x, y);
  std::optional<Morphism> found;
  for_each_hom_element(field, x, y, std::span<const Morphism>(basis), [&](const Morphism& f) {
    if (is_mono(field, f)) {
      found = f;
      return false;
    }
    return true;
  });
  return found;
}

Representation dual(const Representation& x, std::shared_ptr<const Quiver> opposite) {
  std::vector<Matrix> maps;
  for (const auto& m : x.maps()) maps.push_back(m.transpose());
  return Representation(std::move(opposite), x.dims(), std::move(maps));
}

Representation restrict_to(const Representation& x, std::shared_ptr<const Quiver> sub) {
  const Quiver& q = x.quiver();
  DimVector dims;
  for (const auto& label : sub->vertices()) dims.push_back(x.dim(q.vertex_index(label)));
  std::vector<Matrix> maps;
  for (const auto& arr : sub->arrows()) maps.push_back(x.map(q.arrow_index(arr.name)));
  return Representation(std::move(sub), std::move(dims), std::move(maps));
}

Morphism restrict_to(const Morphism& f, std::shared_ptr<const Quiver> sub) {
  const Quiver& q = f.source().quiver();
  std::vector<Matrix> comps;
  for (const auto& label : sub->vertices()) comps.push_back(f.component(q.vertex_index(label)));
  return Morphism(restrict_to(f.source(), sub), restrict_to(f.target(), sub), std::move(comps));
}

std::string dim_string(const DimVector& d) {
  bool wide = false;
  for (auto x : d) wide = wide || x > 9;
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (wide && i > 0) out << ',';
    out << d[i];
  }
  return out.str();
}

}  // namespace exactcat
