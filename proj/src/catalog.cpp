#include "exactcat/catalog.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace exactcat {

namespace {

std::optional<std::size_t> find_iso(const PrimeField& field, const std::vector<Representation>& list,
                                    const Representation& x) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].dims() == x.dims() && find_isomorphism(field, list[i], x)) return i;
  return std::nullopt;
}

std::optional<std::size_t> unit_vertex(const DimVector& d) {
  std::optional<std::size_t> v;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    if (d[k] != 1 || v) return std::nullopt;
    v = k;
  }
  return v;
}

}  // namespace

ARCatalog build_catalog(std::shared_ptr<const Quiver> quiver, const PrimeField& field, std::size_t cap) {
  ARCatalog c;
  c.quiver_ = quiver;
  c.opposite_ = std::make_shared<const Quiver>(quiver->opposite());
  c.field_ = field;
  const std::size_t nv = quiver->vertex_count();
  auto& ind = c.indecomposables_;

  for (std::size_t v = 0; v < nv; ++v) {
    ind.push_back(path_projective(quiver, v));
    c.projective_at_.push_back(v);
  }
  if (ind.size() > cap) throw CapExceeded("not representation-finite at this cap");
  c.tau_.assign(ind.size(), std::nullopt);

  // Indecomposables of a representation-finite quiver have dimension vectors
  // below the highest root of some Dynkin component (D_n: 2n-3, E8: 29), so a
  // larger one proves the quiver is not representation-finite.
  const Eigen::Index dim_bound = std::max<Eigen::Index>(2 * static_cast<Eigen::Index>(nv), 29);

  // Breadth-first over the inverse translate; tau^- x = 0 exactly for injective x.
  for (std::size_t i = 0; i < ind.size(); ++i) {
    const Representation next = tau_inverse(field, ind[i], c.opposite_);
    c.tau_inverse_.resize(ind.size());
    if (next.is_zero()) continue;
    if (next.total_dim() > dim_bound)
      throw CapExceeded("not representation-finite: indecomposable of total dimension " +
                        std::to_string(next.total_dim()));
    std::optional<std::size_t> j = find_iso(field, ind, next);
    if (!j) {
      if (ind.size() >= cap) throw CapExceeded("not representation-finite at this cap");
      ind.push_back(next);
      c.tau_.push_back(std::nullopt);
      j = ind.size() - 1;
    }
    c.tau_inverse_[i] = *j;
    c.tau_[*j] = i;
  }
  const std::size_t n = ind.size();
  c.tau_inverse_.resize(n);

  c.projective_.assign(n, false);
  for (std::size_t v = 0; v < nv; ++v) c.projective_[c.projective_at_[v]] = true;
  c.injective_.assign(n, false);
  for (std::size_t v = 0; v < nv; ++v) {
    const Representation inj = dual(path_projective(c.opposite_, v), quiver);
    auto k = find_iso(field, ind, inj);
    if (!k) throw std::logic_error("build_catalog: injective I(" + quiver->label(v) + ") was not reached");
    c.injective_at_.push_back(*k);
    c.injective_[*k] = true;
  }

  c.hom_dims_.assign(n, std::vector<std::size_t>(n, 0));
  c.profile_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      c.hom_dims_[a][b] = hom_dimension(field, ind[a], ind[b]);
      c.profile_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = static_cast<double>(c.hom_dims_[a][b]);
    }

  for (std::size_t i = 0; i < n; ++i) {
    std::string name;
    const auto unit = unit_vertex(ind[i].dims());
    for (std::size_t v = 0; v < nv && name.empty(); ++v)
      if (c.projective_at_[v] == i) name = "P" + quiver->label(v);
    for (std::size_t v = 0; v < nv && name.empty(); ++v)
      if (c.injective_at_[v] == i) name = "I" + quiver->label(v);
    if (unit) name = "S" + quiver->label(*unit);
    if (name.empty()) name = dim_string(ind[i].dims());
    c.names_.push_back(name);
  }

  c.ar_index_.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    if (c.projective_[i]) continue;
    if (!c.tau_[i]) throw std::logic_error("build_catalog: non-projective without a translate");
    const std::size_t left = *c.tau_[i];
    const ExtSpace ext(field, ind[i], ind[left]);
    if (ext.dim() != 1)
      throw std::runtime_error("Ext(" + c.names_[i] + ", tau " + c.names_[i] + ") has dimension " +
                               std::to_string(ext.dim()) + ", expected 1");
    ARSequence s;
    s.index = c.ar_sequences_.size();
    s.left = left;
    s.right = i;
    s.sequence = realize(ext, Vector::Ones(1));
    s.middle_class = c.classify(s.sequence.middle);
    c.ar_index_[i] = s.index;
    c.ar_sequences_.push_back(std::move(s));
  }

  // Irreducible maps: middle terms of AR sequences, and rad P(v) = sum of P(t) over arrows v -> t.
  for (const auto& s : c.ar_sequences_)
    for (auto k : s.middle_class) c.ar_arrows_.emplace_back(k, s.right);
  for (const Arrow& a : quiver->arrows())
    c.ar_arrows_.emplace_back(c.projective_at_[a.target], c.projective_at_[a.source]);
  std::sort(c.ar_arrows_.begin(), c.ar_arrows_.end());
  return c;
}

std::optional<std::size_t> ARCatalog::find(const std::string& key) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (names_[i] == key) return i;
  for (std::size_t i = 0; i < size(); ++i)
    if (dim_string(indecomposables_[i].dims()) == key) return i;
  return std::nullopt;
}

std::optional<std::size_t> ARCatalog::index_of(const Representation& x) const {
  return find_iso(field_, indecomposables_, x);
}

Representation ARCatalog::materialize(const ObjectClass& cls) const {
  std::vector<Representation> parts;
  for (auto i : cls) parts.push_back(indecomposable(i));
  return direct_sum(quiver_, parts);
}

std::string ARCatalog::class_name(const ObjectClass& cls) const {
  if (cls.empty()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < cls.size(); ++k) out << (k ? "+" : "") << name(cls[k]);
  return out.str();
}

DimVector ARCatalog::class_dims(const ObjectClass& cls) const {
  DimVector d(quiver_->vertex_count(), 0);
  for (auto i : cls)
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += indecomposable(i).dim(v);
  return d;
}

std::size_t ARCatalog::class_total_dim(const ObjectClass& cls) const {
  std::size_t t = 0;
  for (auto i : cls) t += total_dim(i);
  return t;
}

ObjectClass ARCatalog::classify(const Representation& x) const {
  const auto n = static_cast<Eigen::Index>(size());
  if (x.is_zero()) return {};
  Eigen::VectorXd profile(n);
  std::vector<long> exact(static_cast<std::size_t>(n));
  for (Eigen::Index l = 0; l < n; ++l) {
    exact[static_cast<std::size_t>(l)] = static_cast<long>(hom_dimension(field_, indecomposables_[static_cast<std::size_t>(l)], x));
    profile(l) = static_cast<double>(exact[static_cast<std::size_t>(l)]);
  }
  const Eigen::VectorXd m = profile_.partialPivLu().solve(profile);
  ObjectClass out;
  std::vector<long> mult(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const long r = std::lround(m(k));
    if (r < 0 || std::abs(m(k) - static_cast<double>(r)) > 1e-6)
      throw std::logic_error("classify: Hom profile is not a nonnegative combination of indecomposables");
    mult[static_cast<std::size_t>(k)] = r;
    for (long t = 0; t < r; ++t) out.push_back(static_cast<std::size_t>(k));
  }
  // Exact confirmation of the floating-point solve.
  for (std::size_t l = 0; l < mult.size(); ++l) {
    long s = 0;
    for (std::size_t k = 0; k < mult.size(); ++k) s += static_cast<long>(hom_dims_[l][k]) * mult[k];
    if (s != exact[l]) throw std::logic_error("classify: Hom profile mismatch");
  }
  if (class_dims(out) != x.dims()) throw std::logic_error("classify: dimension vector mismatch");
  return out;
}

ObjectClass decompose(const ARCatalog& catalog, const Representation& x) {
  const PrimeField& field = catalog.field();
  if (x.is_zero()) return {};
  std::vector<std::size_t> order(catalog.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (catalog.total_dim(a) != catalog.total_dim(b)) return catalog.total_dim(a) > catalog.total_dim(b);
    return catalog.indecomposable(a).dims() < catalog.indecomposable(b).dims();
  });

  for (auto i : order) {
    const Representation& cand = catalog.indecomposable(i);
    bool fits = true;
    for (std::size_t v = 0; v < x.dims().size(); ++v) fits = fits && cand.dim(v) <= x.dim(v);
    if (!fits) continue;
    const auto into = hom_basis(field, cand, x);
    if (into.empty()) continue;
    const auto back = hom_basis(field, x, cand);
    if (back.empty()) continue;
    const Vector id = Morphism::identity(cand).flatten();

    std::optional<Morphism> retraction;
    for_each_hom_element(field, cand, x, std::span<const Morphism>(into), [&](const Morphism& f) {
      if (!is_mono(field, f)) return true;
      Matrix images = zeros(id.size(), static_cast<Eigen::Index>(back.size()));
      for (std::size_t k = 0; k < back.size(); ++k)
        images.col(static_cast<Eigen::Index>(k)) = compose(field, back[k], f).flatten();
      if (auto c = solve(field, images, id)) {
        retraction = combine(field, std::span<const Morphism>(back), c->col(0));
        return false;
      }
      return true;
    });
    if (!retraction) continue;
    ObjectClass rest = decompose(catalog, kernel_rep(field, *retraction).object);
    rest.push_back(i);
    std::sort(rest.begin(), rest.end());
    return rest;
  }
  throw std::logic_error("decompose: no catalog summand splits off " + dim_string(x.dims()) +
                         " (incomplete catalog)");
}

bool iso_test(const ARCatalog& catalog, const Representation& x, const Representation& y) {
  return x.dims() == y.dims() && decompose(catalog, x) == decompose(catalog, y);
}

std::optional<std::size_t> translate(const ARCatalog& catalog, std::size_t m) { return catalog.translate(m); }

const ARSequence& ar_sequence_for(const ARCatalog& catalog, std::size_t m) {
  auto k = catalog.ar_index(m);
  if (!k) throw std::invalid_argument(catalog.name(m) + " is projective and has no AR sequence");
  return catalog.ar_sequences()[*k];
}

}  // namespace exactcat
