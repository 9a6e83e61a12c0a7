#include "exactcat/exact_structures.hpp"

#include <array>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace exactcat {

ExactStructure ExactStructure::from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
  Support s(n);
  for (auto k : indices) {
    if (k >= n) throw std::invalid_argument("AR index " + std::to_string(k + 1) + " out of range");
    s.set(k);
  }
  return ExactStructure(std::move(s));
}

std::vector<std::size_t> ExactStructure::indices() const {
  std::vector<std::size_t> out;
  for (auto k = selected_.find_first(); k != Support::npos; k = selected_.find_next(k)) out.push_back(k);
  return out;
}

std::string ExactStructure::label() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto k : indices()) {
    out << (first ? "" : ",") << k + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

ExactStructure meet(const ExactStructure& a, const ExactStructure& b) {
  return ExactStructure(a.selected() & b.selected());
}
ExactStructure join(const ExactStructure& a, const ExactStructure& b) {
  return ExactStructure(a.selected() | b.selected());
}
ExactStructure complement(const ExactStructure& a) { return ExactStructure(~a.selected()); }

std::vector<std::size_t> defect_vector(const ARCatalog& catalog, const SESClass& s) {
  std::vector<std::size_t> out;
  for (const auto& ar : catalog.ar_sequences())
    out.push_back(defect(catalog.field(), s, catalog.indecomposable(ar.right)));
  return out;
}

Support support(const ARCatalog& catalog, const SESClass& s) {
  const auto d = defect_vector(catalog, s);
  Support out(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) out[k] = d[k] != 0;
  return out;
}

Support support_from_classes(const ARCatalog& catalog, const ObjectClass& x, const ObjectClass& y,
                             const ObjectClass& z) {
  const auto& ars = catalog.ar_sequences();
  Support out(ars.size());
  for (std::size_t k = 0; k < ars.size(); ++k) {
    const std::size_t m = ars[k].right;
    long d = 0;
    for (auto i : z) d += static_cast<long>(catalog.hom_dim(m, i));
    for (auto i : y) d -= static_cast<long>(catalog.hom_dim(m, i));
    for (auto i : x) d += static_cast<long>(catalog.hom_dim(m, i));
    if (d < 0) throw std::logic_error("support_from_classes: negative defect, terms do not form a sequence");
    out[k] = d != 0;
  }
  return out;
}

bool contains(const ExactStructure& e, const Support& s) { return s.is_subset_of(e.selected()); }

bool contains(const ARCatalog& catalog, const ExactStructure& e, const SESClass& s) {
  return contains(e, support(catalog, s));
}

bool admissible_mono(const ARCatalog& catalog, const ExactStructure& e, const Morphism& i) {
  return is_mono(catalog.field(), i) && contains(catalog, e, sequence_from_mono(catalog.field(), i));
}

bool admissible_epi(const ARCatalog& catalog, const ExactStructure& e, const Morphism& d) {
  return is_epi(catalog.field(), d) && contains(catalog, e, sequence_from_epi(catalog.field(), d));
}

namespace {

bool fits_inside(const DimVector& a, const DimVector& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

// Calls visit on every admissible monic x -> y; stops when visit returns false.
template <typename Visit>
void for_each_admissible_mono(const ARCatalog& catalog, const ExactStructure& e, const Representation& x,
                              const Representation& y, Visit&& visit) {
  const PrimeField& field = catalog.field();
  if (!fits_inside(x.dims(), y.dims())) return;
  const auto basis = hom_basis(field, x, y);
  for_each_hom_element(field, x, y, std::span<const Morphism>(basis), [&](const Morphism& f) {
    if (!is_mono(field, f)) return true;
    if (!contains(catalog, e, sequence_from_mono(field, f))) return true;
    return visit(f);
  });
}

template <typename Visit>
void for_each_admissible_epi(const ARCatalog& catalog, const ExactStructure& e, const Representation& x,
                             const Representation& y, Visit&& visit) {
  const PrimeField& field = catalog.field();
  if (!fits_inside(y.dims(), x.dims())) return;
  const auto basis = hom_basis(field, x, y);
  for_each_hom_element(field, x, y, std::span<const Morphism>(basis), [&](const Morphism& f) {
    if (!is_epi(field, f)) return true;
    if (!contains(catalog, e, sequence_from_epi(field, f))) return true;
    return visit(f);
  });
}

}  // namespace

bool is_subobject(const ARCatalog& catalog, const ExactStructure& e, const ObjectClass& x, const ObjectClass& y) {
  if (x.empty()) return true;
  bool found = false;
  for_each_admissible_mono(catalog, e, catalog.materialize(x), catalog.materialize(y), [&](const Morphism&) {
    found = true;
    return false;
  });
  return found;
}

ExactStructure generated_structure(const ARCatalog& catalog, std::span<const SESClass> gens) {
  Support s(catalog.ar_sequences().size());
  for (const auto& g : gens) s |= support(catalog, g);
  return ExactStructure(std::move(s));
}

ExLattice enumerate_lattice(const ARCatalog& catalog) {
  const std::size_t n = catalog.ar_sequences().size();
  if (n >= 8 * sizeof(unsigned long) - 1) throw CapExceeded("too many AR sequences to enumerate the lattice");
  ExLattice out;
  const unsigned long count = 1UL << n;
  for (unsigned long mask = 0; mask < count; ++mask) out.structures.emplace_back(Support(n, mask));
  for (unsigned long mask = 0; mask < count; ++mask)
    for (std::size_t k = 0; k < n; ++k)
      if (!(mask & (1UL << k))) out.hasse.emplace_back(mask, mask | (1UL << k));
  return out;
}

ExactStructure restricted_split_structure(const ARCatalog& catalog, const Quiver& sub) {
  const Quiver& q = catalog.quiver();
  for (const auto& label : sub.vertices()) q.vertex_index(label);
  for (const Arrow& a : sub.arrows()) {
    const Arrow& parent = q.arrow(q.arrow_index(a.name));
    if (q.label(parent.source) != sub.label(a.source) || q.label(parent.target) != sub.label(a.target))
      throw std::invalid_argument("arrow '" + a.name + "' has different endpoints in the sub-quiver");
  }
  auto ptr = std::make_shared<const Quiver>(sub);
  const auto& ars = catalog.ar_sequences();
  Support s(ars.size());
  for (std::size_t k = 0; k < ars.size(); ++k) {
    const SESClass& full = ars[k].sequence;
    const SESClass restricted{restrict_to(full.left, ptr), restrict_to(full.middle, ptr),
                              restrict_to(full.right, ptr), restrict_to(full.incl, ptr),
                              restrict_to(full.proj, ptr)};
    s[k] = splits(catalog.field(), restricted);
  }
  return ExactStructure(std::move(s));
}

AxiomReport axiom_spot_check(const ARCatalog& catalog, const ExactStructure& e, std::size_t bound) {
  const PrimeField& field = catalog.field();
  AxiomReport report;
  std::vector<ObjectClass> classes = enumerate_classes(catalog, bound);
  classes.erase(classes.begin());  // the zero object adds nothing
  std::vector<Representation> objs;
  for (const auto& c : classes) objs.push_back(catalog.materialize(c));
  const std::size_t n = objs.size();

  // The middle or end term is known by class, so only one term needs classifying.
  auto admissible_into = [&](const Morphism& i, const ObjectClass& left, const ObjectClass& middle) {
    if (!is_mono(field, i)) return false;
    const ObjectClass right = catalog.classify(cokernel_rep(field, i).object);
    return contains(e, support_from_classes(catalog, left, middle, right));
  };
  auto admissible_onto = [&](const Morphism& d, const ObjectClass& middle, const ObjectClass& right) {
    if (!is_epi(field, d)) return false;
    const ObjectClass left = catalog.classify(kernel_rep(field, d).object);
    return contains(e, support_from_classes(catalog, left, middle, right));
  };

  auto fail = [&](const std::string& what) {
    report.ok = false;
    if (report.counterexamples.size() < 20) report.counterexamples.push_back(what);
  };

  std::vector<std::vector<std::vector<Morphism>>> monos(n, std::vector<std::vector<Morphism>>(n));
  std::vector<std::vector<std::vector<Morphism>>> epis(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for_each_admissible_mono(catalog, e, objs[a], objs[b], [&](const Morphism& f) {
        monos[a][b].push_back(f);
        return true;
      });
      for_each_admissible_epi(catalog, e, objs[a], objs[b], [&](const Morphism& f) {
        epis[a][b].push_back(f);
        return true;
      });
      report.monics += monos[a][b].size();
    }

  // (E1) and its dual.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        for (const auto& f : monos[a][b])
          for (const auto& g : monos[b][c]) {
            ++report.compositions;
            if (!admissible_into(compose(field, g, f), classes[a], classes[c]))
              fail("E1: composite " + catalog.class_name(classes[a]) + " -> " + catalog.class_name(classes[b]) +
                   " -> " + catalog.class_name(classes[c]) + " is not admissible");
          }
        for (const auto& f : epis[a][b])
          for (const auto& g : epis[b][c]) {
            ++report.compositions;
            if (!admissible_onto(compose(field, g, f), classes[a], classes[c]))
              fail("E1op: composite " + catalog.class_name(classes[a]) + " -> " +
                   catalog.class_name(classes[b]) + " -> " + catalog.class_name(classes[c]) +
                   " is not admissible");
          }
      }

  // (E2): pushout of f: A -> B along any g: A -> C gives an admissible C -> P.
  // (E2)op: pullback of d: B -> C along any h: D -> C gives an admissible P -> D.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!monos[a][b].empty()) {
          const auto gs = hom_basis(field, objs[a], objs[c]);
          const std::array<Representation, 2> parts{objs[b], objs[c]};
          const Representation sum = direct_sum(objs[b], objs[c]);
          const Morphism into_c = summand_inclusion(parts, 1);
          for (const auto& f : monos[a][b])
            for_each_hom_element(field, objs[a], objs[c], std::span<const Morphism>(gs), [&](const Morphism& g) {
              ++report.pushouts;
              std::vector<Matrix> comps;
              for (std::size_t v = 0; v < f.components().size(); ++v)
                comps.push_back(field.reduce(vstack(f.component(v), -g.component(v))));
              const CokernelResult po = cokernel_rep(field, Morphism(objs[a], sum, std::move(comps)));
              const Morphism q = compose(field, po.projection, into_c);
              if (!admissible_into(q, classes[c], catalog.classify(q.target())))
                fail("E2: pushout along a map " + catalog.class_name(classes[a]) + " -> " +
                     catalog.class_name(classes[c]) + " is not admissible");
              return true;
            });
        }
        // Here b -> c is the admissible epic and a plays the role of D.
        if (!epis[b][c].empty()) {
          const auto hs = hom_basis(field, objs[a], objs[c]);
          const std::array<Representation, 2> parts{objs[b], objs[a]};
          const Representation sum = direct_sum(objs[b], objs[a]);
          const Morphism onto_d = summand_projection(parts, 1);
          for (const auto& d : epis[b][c])
            for_each_hom_element(field, objs[a], objs[c], std::span<const Morphism>(hs), [&](const Morphism& h) {
              ++report.pullbacks;
              std::vector<Matrix> comps;
              for (std::size_t v = 0; v < d.components().size(); ++v)
                comps.push_back(field.reduce(hstack(d.component(v), -h.component(v))));
              const KernelResult pb = kernel_rep(field, Morphism(sum, objs[c], std::move(comps)));
              const Morphism q = compose(field, onto_d, pb.inclusion);
              if (!admissible_onto(q, catalog.classify(q.source()), classes[a]))
                fail("E2op: pullback along a map " + catalog.class_name(classes[a]) + " -> " +
                     catalog.class_name(classes[c]) + " is not admissible");
              return true;
            });
        }
      }
  return report;
}

std::vector<ObjectClass> enumerate_classes(const ARCatalog& catalog, std::size_t cap) {
  std::vector<ObjectClass> out;
  ObjectClass current;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t from, std::size_t used) {
    out.push_back(current);
    for (std::size_t i = from; i < catalog.size(); ++i) {
      if (used + catalog.total_dim(i) > cap) continue;
      current.push_back(i);
      grow(i, used + catalog.total_dim(i));
      current.pop_back();
    }
  };
  grow(0, 0);
  std::stable_sort(out.begin(), out.end(), [&](const ObjectClass& a, const ObjectClass& b) {
    const auto ta = catalog.class_total_dim(a), tb = catalog.class_total_dim(b);
    return ta != tb ? ta < tb : a < b;
  });
  return out;
}

SequenceCensus::SequenceCensus(const ARCatalog& catalog, std::size_t cap) : catalog_(&catalog), cap_(cap) {
  const PrimeField& field = catalog.field();
  classes_ = enumerate_classes(catalog, cap);
  for (std::size_t id = 0; id < classes_.size(); ++id) ids_.emplace(classes_[id], id);
  indecomposable_ids_.assign(catalog.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (auto id = id_of({i})) indecomposable_ids_[i] = *id;
  by_middle_.resize(classes_.size());

  std::vector<Representation> objs;
  for (const auto& c : classes_) objs.push_back(catalog.materialize(c));

  auto merged = [](ObjectClass a, const ObjectClass& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };

  for (std::size_t z = 1; z < classes_.size(); ++z) {
    const Presentation pres = minimal_presentation(field, objs[z]);
    const std::size_t tz = catalog.class_total_dim(classes_[z]);
    std::set<std::pair<std::size_t, std::size_t>> seen;  // (x, middle)
    for (std::size_t x = 0; x < classes_.size(); ++x) {
      if (catalog.class_total_dim(classes_[x]) + tz > cap) continue;
      auto add = [&](std::size_t middle, Support s) {
        if (!seen.emplace(x, middle).second) return;
        by_middle_[middle].push_back(entries_.size());
        entries_.push_back({x, middle, z, std::move(s)});
      };
      const std::size_t split_id = ids_.at(merged(classes_[x], classes_[z]));
      add(split_id, Support(catalog.ar_sequences().size()));
      if (x == 0) continue;
      const ExtSpace ext(field, objs[z], objs[x], pres);
      if (ext.dim() == 0) continue;
      for_each_vector(field, ext.dim(), [&](const Vector& c) {
        if (c.isZero()) return true;
        ++realized_;
        const SESClass s = realize(ext, c);
        const ObjectClass middle = catalog.classify(s.middle);
        const std::size_t mid = ids_.at(middle);
        if (!seen.count({x, mid})) add(mid, support_from_classes(catalog, classes_[x], middle, classes_[z]));
        return true;
      });
    }
  }
}

std::optional<std::size_t> SequenceCensus::id_of(const ObjectClass& c) const {
  auto it = ids_.find(c);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t SequenceCensus::id_of_indecomposable(std::size_t catalog_index) const {
  const std::size_t id = indecomposable_ids_.at(catalog_index);
  if (id == std::numeric_limits<std::size_t>::max())
    throw CapExceeded(catalog_->name(catalog_index) + " is larger than the census cap " + std::to_string(cap_));
  return id;
}

}  // namespace exactcat
