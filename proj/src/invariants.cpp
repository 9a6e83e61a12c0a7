#include "exactcat/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exactcat {

std::strong_ordering gr_compare(const GRVector& a, const GRVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.size() <=> b.size();
}

std::string gr_string(const GRVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::vector<GRVector> increasing_words(std::size_t max_entry) {
  std::vector<GRVector> out;
  // Bit k of the mask selects entry k + 1; ascending bits give an increasing word.
  for (unsigned long mask = 1; mask < (1UL << max_entry); ++mask) {
    GRVector w;
    for (std::size_t k = 0; k < max_entry; ++k)
      if (mask & (1UL << k)) w.push_back(k + 1);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PropertyReport check_gr_order(std::size_t max_entry) {
  PropertyReport r;
  r.name = "word order";
  const auto words = increasing_words(max_entry);
  auto fail = [&](const std::string& what, const GRVector& a, const GRVector& b) {
    r.violations.push_back(what + ": " + gr_string(a) + " vs " + gr_string(b));
  };
  for (const auto& a : words)
    for (const auto& b : words) {
      ++r.checked;
      const auto ab = gr_compare(a, b);
      if ((ab == 0) != (a == b)) fail("antisymmetry", a, b);
      if (ab != (0 <=> gr_compare(b, a))) fail("asymmetry", a, b);
      const auto diff = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
      if (diff.first == a.end() && diff.second != b.end() && ab >= 0) fail("prefix", a, b);
      if (diff.first != a.end() && diff.second != b.end() && (*diff.first > *diff.second) != (ab < 0))
        fail("first difference", a, b);
      for (const auto& x : words)
        if (ab < 0 && gr_compare(b, x) < 0 && gr_compare(a, x) >= 0) fail("transitivity", a, x);
    }
  return r;
}

namespace {

bool gr_less(const GRVector& a, const GRVector& b) { return gr_compare(a, b) < 0; }

GRVector appended(GRVector v, std::size_t x) {
  v.push_back(x);
  return v;
}

bool contains_sorted(const std::vector<std::size_t>& v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

ExactCategory::ExactCategory(const SequenceCensus& census, ExactStructure e)
    : census_(&census), e_(std::move(e)) {
  if (e_.size() != census.catalog().ar_sequences().size())
    throw std::invalid_argument("structure size does not match the number of AR sequences");
  subobjects_.resize(census.classes().size());
  lengths_.resize(census.classes().size());
  measures_.resize(census.catalog().size());
}

const std::vector<std::size_t>& ExactCategory::proper_subobjects(std::size_t id) const {
  auto& slot = subobjects_.at(id);
  if (!slot) {
    std::vector<std::size_t> subs;
    for (auto k : census_->ending_in(id)) {
      const auto& entry = census_->entries()[k];
      if (entry.right != 0 && contains(e_, entry.support)) subs.push_back(entry.left);
    }
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    slot = std::move(subs);
  }
  return *slot;
}

bool ExactCategory::is_proper_subobject(std::size_t x, std::size_t y) const {
  return contains_sorted(proper_subobjects(y), x);
}

bool ExactCategory::is_subobject(std::size_t x, std::size_t y) const {
  return x == y || is_proper_subobject(x, y);
}

std::size_t ExactCategory::length(std::size_t id) const {
  auto& slot = lengths_.at(id);
  if (!slot) {
    std::size_t best = 0;
    bool any = false;
    for (auto x : proper_subobjects(id)) {
      best = std::max(best, length(x));
      any = true;
    }
    slot = any ? best + 1 : 0;
  }
  return *slot;
}

std::size_t ExactCategory::length(const ObjectClass& c) const {
  auto id = census_->id_of(c);
  if (!id) throw CapExceeded(catalog().class_name(c) + " is larger than the census cap " + std::to_string(census_->cap()));
  return length(*id);
}

bool ExactCategory::is_e_simple(std::size_t i) const { return length(indecomposable_id(i)) == 1; }

std::vector<std::size_t> ExactCategory::e_simples() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < catalog().size(); ++i)
    if (is_e_simple(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> ExactCategory::indecomposable_subobjects(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto x : proper_subobjects(indecomposable_id(i))) {
    const auto& c = census_->object(x);
    if (c.size() == 1) out.push_back(c[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GRVector ExactCategory::gr_measure(std::size_t i) const {
  auto& slot = measures_.at(i);
  if (!slot) {
    const std::size_t l = length(indecomposable_id(i));
    GRVector best{l};
    bool any = false;
    for (auto s : indecomposable_subobjects(i)) {
      GRVector cand = appended(gr_measure(s), l);
      if (!any || gr_less(best, cand)) best = std::move(cand);
      any = true;
    }
    slot = std::move(best);
  }
  return *slot;
}

GRVector ExactCategory::gr_measure_extended(const ObjectClass& c) const {
  if (c.empty()) throw std::invalid_argument("the measure of the zero object is undefined");
  auto id = census_->id_of(c);
  if (!id) throw CapExceeded(catalog().class_name(c) + " is larger than the census cap");
  std::vector<std::size_t> candidates;
  if (c.size() == 1) candidates.push_back(c[0]);
  for (auto x : proper_subobjects(*id))
    if (census_->object(x).size() == 1) candidates.push_back(census_->object(x)[0]);
  GRVector best;
  bool any = false;
  for (auto k : candidates) {
    GRVector m = gr_measure(k);
    if (!any || gr_less(best, m)) best = std::move(m);
    any = true;
  }
  if (!any) throw std::logic_error("nonzero object without an indecomposable E-subobject");
  return best;
}

Predecessors ExactCategory::gr_predecessors(std::size_t i) const {
  Predecessors out;
  const auto subs = indecomposable_subobjects(i);
  if (subs.empty()) {
    out.simple = is_e_simple(i);
    return out;
  }
  GRVector best = gr_measure(subs.front());
  for (auto s : subs)
    if (gr_less(best, gr_measure(s))) best = gr_measure(s);
  for (auto s : subs)
    if (gr_measure(s) == best) out.indices.push_back(s);
  return out;
}

namespace {

bool chain_is_proper(const ExactCategory& cat, const std::vector<std::size_t>& chain) {
  if (chain.empty()) return false;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto subs = cat.indecomposable_subobjects(chain[k]);
    if (!contains_sorted(subs, chain[k - 1])) return false;
  }
  return true;
}

}  // namespace

bool ExactCategory::is_gr_filtration(const std::vector<std::size_t>& chain) const {
  if (!chain_is_proper(*this, chain)) return false;
  if (!is_e_simple(chain.front())) return false;
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!contains_sorted(gr_predecessors(chain[k]).indices, chain[k - 1])) return false;
  return true;
}

bool ExactCategory::is_mu_filtration(const std::vector<std::size_t>& chain) const {
  if (!chain_is_proper(*this, chain)) return false;
  const GRVector top = gr_measure(chain.back());
  if (top.size() != chain.size()) return false;
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (gr_measure(chain[k]) != GRVector(top.begin(), top.begin() + static_cast<long>(k + 1))) return false;
  return true;
}

std::vector<std::size_t> ExactCategory::measure_filtration(std::size_t i) const {
  const auto pred = gr_predecessors(i);
  if (pred.indices.empty()) return {i};
  auto chain = measure_filtration(pred.indices.front());
  chain.push_back(i);
  return chain;
}

SubobjectPoset ExactCategory::subobject_poset(std::size_t cap) const {
  SubobjectPoset out;
  for (std::size_t id = 0; id < census_->classes().size(); ++id)
    if (catalog().class_total_dim(census_->object(id)) <= cap) out.nodes.push_back(id);
  for (auto y : out.nodes) {
    const auto& below = proper_subobjects(y);
    for (auto x : below) {
      bool covered = true;
      for (auto z : below)
        if (z != x && is_proper_subobject(x, z)) {
          covered = false;
          break;
        }
      if (covered) out.covers.emplace_back(x, y);
    }
  }
  return out;
}

GradedQuiver ExactCategory::exact_quiver(RadicalMode mode) const {
  const ARCatalog& cat = catalog();
  const PrimeField& field = cat.field();
  GradedQuiver out;
  out.vertices = e_simples();
  std::vector<std::size_t> through = out.vertices;
  if (mode == RadicalMode::ambient) {
    through.clear();
    for (std::size_t i = 0; i < cat.size(); ++i) through.push_back(i);
  }

  // Degree 0: dim rad(X, Y) - dim rad^2(X, Y), with rad(X, X) = 0 for these bricks.
  for (auto x : out.vertices)
    for (auto y : out.vertices) {
      if (x == y || cat.hom_dim(x, y) == 0) continue;
      const Representation& rx = cat.indecomposable(x);
      const Representation& ry = cat.indecomposable(y);
      Matrix composites = zeros(Morphism::zero(rx, ry).flatten().size(), 0);
      for (auto z : through) {
        if (z == x || z == y) continue;
        const auto fs = hom_basis(field, rx, cat.indecomposable(z));
        const auto gs = hom_basis(field, cat.indecomposable(z), ry);
        for (const auto& f : fs)
          for (const auto& g : gs) composites = hstack(composites, compose(field, g, f).flatten());
      }
      const std::size_t irr = cat.hom_dim(x, y) - rank(field, composites);
      if (irr > 0) out.arrows.push_back({x, y, 0, irr});
    }

  // Degree 1: classes Y -> E -> X of Ext(X, Y) that pull back to zero along
  // every map from an unselected AR right term.
  for (auto x : out.vertices)
    for (auto y : out.vertices) {
      const ExtSpace ext(field, cat.indecomposable(x), cat.indecomposable(y));
      if (ext.dim() == 0) continue;
      Matrix conditions = zeros(0, ext.dim());
      for (const auto& ar : cat.ar_sequences()) {
        if (e_.selects(ar.index)) continue;
        const Representation& m = cat.indecomposable(ar.right);
        const auto hs = hom_basis(field, m, cat.indecomposable(x));
        if (hs.empty()) continue;
        const ExtSpace target(field, m, cat.indecomposable(y));
        if (target.dim() == 0) continue;
        for (const auto& h : hs) conditions = vstack(conditions, pullback_matrix(ext, target, h));
      }
      const std::size_t count = static_cast<std::size_t>(ext.dim()) - rank(field, conditions);
      if (count > 0) out.arrows.push_back({x, y, 1, count});
    }
  std::sort(out.arrows.begin(), out.arrows.end(), [](const GradedArrow& a, const GradedArrow& b) {
    return std::tie(a.degree, a.from, a.to) < std::tie(b.degree, b.from, b.to);
  });
  return out;
}

PropertyReport ExactCategory::check_superadditivity(std::size_t cap) const {
  PropertyReport r;
  r.name = "superadditivity";
  const ARCatalog& cat = catalog();
  for (const auto& entry : census_->entries()) {
    if (!contains(e_, entry.support)) continue;
    if (cat.class_total_dim(census_->object(entry.middle)) > cap) continue;
    ++r.checked;
    const std::size_t ly = length(entry.middle), lx = length(entry.left), lz = length(entry.right);
    if (ly < lx + lz)
      r.violations.push_back("l(" + cat.class_name(census_->object(entry.middle)) + ")=" + std::to_string(ly) +
                             " < l(" + cat.class_name(census_->object(entry.left)) + ")+l(" +
                             cat.class_name(census_->object(entry.right)) + ")");
    else if (ly > lx + lz)
      ++r.strict;
  }
  return r;
}

PropertyReport ExactCategory::check_gr_axioms() const {
  PropertyReport r;
  r.name = "gr-axioms";
  const ARCatalog& cat = catalog();
  const std::size_t n = cat.size();
  std::vector<GRVector> mu(n);
  std::vector<std::size_t> len(n);
  std::vector<std::vector<std::size_t>> subs(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = gr_measure(i);
    len[i] = length(indecomposable_id(i));
    subs[i] = indecomposable_subobjects(i);
  }
  auto fail = [&](const std::string& axiom, std::size_t x, std::size_t y) {
    r.violations.push_back(axiom + " fails for X=" + cat.name(x) + " " + gr_string(mu[x]) + ", Y=" + cat.name(y) +
                           " " + gr_string(mu[y]));
  };

  for (std::size_t x = 0; x < n; ++x) {
    // GR5 in the form used here: mu(X) is strictly increasing and ends in l(X).
    ++r.checked;
    bool increasing = !mu[x].empty() && mu[x].back() == len[x];
    for (std::size_t k = 1; k < mu[x].size(); ++k) increasing = increasing && mu[x][k - 1] < mu[x][k];
    if (!increasing) fail("GR5", x, x);

    bool minimal = true;
    for (std::size_t y = 0; y < n; ++y) minimal = minimal && gr_compare(mu[x], mu[y]) <= 0;
    ++r.checked;
    if (minimal != is_e_simple(x)) fail("GR6", x, x);

    for (std::size_t y = 0; y < n; ++y) {
      r.checked += 4;
      if (contains_sorted(subs[y], x) && !gr_less(mu[x], mu[y])) fail("GR1", x, y);
      if (mu[x] == mu[y] && len[x] != len[y]) fail("GR2", x, y);
      if (gr_compare(mu[x], mu[y]) != (0 <=> gr_compare(mu[y], mu[x]))) fail("GR4", x, y);
      if (len[x] >= len[y]) {
        bool below = true;
        for (auto s : subs[x]) below = below && gr_less(mu[s], mu[y]);
        if (below && gr_compare(mu[x], mu[y]) > 0) fail("GR3", x, y);
      }
      if (gr_less(mu[x], mu[y])) {
        ++r.checked;
        std::vector<std::size_t> upper = subs[y];
        upper.push_back(y);
        bool witnessed = false;
        for (auto y2 : upper) {
          if (!gr_less(mu[x], mu[y2])) continue;
          for (auto y1 : gr_predecessors(y2).indices)
            if (gr_compare(mu[y1], mu[x]) <= 0 && len[y1] <= len[x]) witnessed = true;
        }
        if (!witnessed) fail("GR7", x, y);
      }
    }
  }
  return r;
}

GR8Report ExactCategory::check_gr8(std::size_t cap) const {
  GR8Report r;
  const ARCatalog& cat = catalog();
  for (std::size_t y = 0; y < census_->classes().size(); ++y) {
    const ObjectClass& yc = census_->object(y);
    if (yc.empty() || yc.size() > 3 || cat.class_total_dim(yc) > cap) continue;
    GRVector top;
    for (auto k : yc)
      if (top.empty() || gr_less(top, gr_measure(k))) top = gr_measure(k);
    for (std::size_t x = 0; x < cat.size(); ++x) {
      if (!is_subobject(indecomposable_id(x), y)) continue;
      ++r.checked;
      const GRVector mx = gr_measure(x);
      const auto order = gr_compare(mx, top);
      if (order > 0)
        r.violations.push_back("mu(" + cat.name(x) + ")=" + gr_string(mx) + " exceeds max mu over " +
                               cat.class_name(yc) + " = " + gr_string(top));
      else if (order == 0 && !std::binary_search(yc.begin(), yc.end(), x))
        r.counterexamples.push_back({x, yc, mx, top});
    }
  }
  return r;
}

PropertyReport ExactCategory::check_poset_axioms(std::size_t cap) const {
  PropertyReport r;
  r.name = "poset";
  const ARCatalog& cat = catalog();
  std::vector<std::size_t> nodes;
  for (std::size_t id = 0; id < census_->classes().size(); ++id)
    if (cat.class_total_dim(census_->object(id)) <= cap) nodes.push_back(id);
  auto name = [&](std::size_t id) { return cat.class_name(census_->object(id)); };
  for (auto y : nodes) {
    ++r.checked;
    if (is_proper_subobject(y, y)) r.violations.push_back("proper self-inclusion of " + name(y));
    if (y != 0 && !is_subobject(0, y)) r.violations.push_back("0 is not a subobject of " + name(y));
    for (auto x : proper_subobjects(y)) {
      r.checked += 2;
      if (is_proper_subobject(y, x)) r.violations.push_back("antisymmetry: " + name(x) + " and " + name(y));
      if (length(x) >= length(y))
        r.violations.push_back("length does not grow from " + name(x) + " to " + name(y));
      for (auto w : proper_subobjects(x)) {
        ++r.checked;
        if (!is_proper_subobject(w, y))
          r.violations.push_back("transitivity: " + name(w) + " < " + name(x) + " < " + name(y));
      }
    }
  }
  return r;
}

ReductionReport reduction_report(const SequenceCensus& census, const std::vector<ExactStructure>& chain) {
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!chain[k - 1].is_subset_of(chain[k]))
      throw std::invalid_argument("reduction chain is not increasing at step " + std::to_string(k + 1));
  ReductionReport r;
  r.chain = chain;
  std::vector<ExactCategory> cats;
  for (const auto& e : chain) cats.emplace_back(census, e);
  const ARCatalog& cat = census.catalog();
  for (std::size_t id = 0; id < census.classes().size(); ++id) {
    r.objects.push_back(id);
    std::vector<std::size_t> row;
    for (const auto& c : cats) row.push_back(c.length(id));
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k] < row[k - 1])
        r.monotonicity_violations.push_back("l(" + cat.class_name(census.object(id)) + ") drops from " +
                                            std::to_string(row[k - 1]) + " to " + std::to_string(row[k]));
    r.lengths.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat.total_dim(i) > census.cap()) continue;
    r.indecomposables.push_back(i);
    std::vector<GRVector> row;
    for (const auto& c : cats) row.push_back(c.gr_measure(i));
    bool up = false, down = false;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto o = gr_compare(row[k - 1], row[k]);
      up = up || o < 0;
      down = down || o > 0;
    }
    if (up && down) r.measure_direction_changes.push_back(i);
    r.measures.push_back(std::move(row));
  }
  return r;
}

ClosureOracle::ClosureOracle(const ARCatalog& catalog, const ExactStructure& e)
    : catalog_(&catalog), n_(catalog.size()) {
  const PrimeField& field = catalog.field();
  std::vector<Presentation> pres;
  for (std::size_t z = 0; z < n_; ++z) pres.push_back(minimal_presentation(field, catalog.indecomposable(z)));
  for (std::size_t z = 0; z < n_; ++z)
    for (std::size_t x = 0; x < n_; ++x) {
      spaces_.push_back(std::make_shared<ExtSpace>(field, catalog.indecomposable(z), catalog.indecomposable(x), pres[z]));
      subspaces_.push_back(zeros(spaces_.back()->dim(), 0));
    }
  for (const auto& ar : catalog.ar_sequences())
    if (e.selects(ar.index)) subspaces_[ar.right * n_ + ar.left] = identity(1);

  struct Move {
    std::size_t from, to;
    Matrix map;
  };
  std::vector<Move> moves;
  for (std::size_t z = 0; z < n_; ++z)
    for (std::size_t x = 0; x < n_; ++x) {
      const ExtSpace& src = *spaces_[z * n_ + x];
      if (src.dim() == 0) continue;
      for (std::size_t w = 0; w < n_; ++w) {
        const ExtSpace& back = *spaces_[w * n_ + x];
        if (back.dim() > 0)
          for (const auto& h : hom_basis(field, catalog.indecomposable(w), catalog.indecomposable(z)))
            moves.push_back({z * n_ + x, w * n_ + x, pullback_matrix(src, back, h)});
        const ExtSpace& fwd = *spaces_[z * n_ + w];
        if (fwd.dim() > 0)
          for (const auto& g : hom_basis(field, catalog.indecomposable(x), catalog.indecomposable(w)))
            moves.push_back({z * n_ + x, z * n_ + w, pushout_matrix(src, fwd, g)});
      }
    }

  auto grow = [&](std::size_t slot, const Matrix& cols) {
    if (cols.cols() == 0) return false;
    const Matrix grown = hstack(subspaces_[slot], cols);
    if (static_cast<Eigen::Index>(rank(field, grown)) == subspaces_[slot].cols()) return false;
    subspaces_[slot] = image_basis(field, grown);
    return true;
  };
  auto annihilator = [&](std::size_t slot) { return cokernel_projection(field, subspaces_[slot]).proj; };

  bool changed = true;
  while (changed) {
    changed = false;
    ++iterations_;
    for (const auto& mv : moves)
      if (subspaces_[mv.from].cols() > 0) changed |= grow(mv.to, field.mul(mv.map, subspaces_[mv.from]));

    // Closedness: for a member eta: x -i-> B -p-> C, a class alpha with i_* alpha
    // in the closure is itself in it, and dually for p^*.
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t x = 0; x < n_; ++x) {
        const Matrix basis = subspaces_[c * n_ + x];
        if (basis.cols() == 0) continue;
        for_each_vector(field, basis.cols(), [&](const Vector& a) {
          if (is_zero(a)) return true;
          const SESClass eta = realize(*spaces_[c * n_ + x], field.mul(basis, a));
          const ObjectClass mid = decompose(catalog, eta.middle);
          std::vector<Representation> parts;
          for (auto k : mid) parts.push_back(catalog.indecomposable(k));
          const Representation sum = direct_sum(catalog.quiver_ptr(), parts);
          const Morphism to_sum = *find_isomorphism(field, eta.middle, sum);
          const Morphism from_sum = *find_isomorphism(field, sum, eta.middle);
          std::vector<Morphism> out, in;
          for (std::size_t j = 0; j < parts.size(); ++j) {
            out.push_back(compose(field, summand_projection(parts, j), compose(field, to_sum, eta.incl)));
            in.push_back(compose(field, eta.proj, compose(field, from_sum, summand_inclusion(parts, j))));
          }
          for (std::size_t w = 0; w < n_; ++w) {
            const ExtSpace& fwd = *spaces_[w * n_ + x];
            if (fwd.dim() > 0) {
              Matrix cond = zeros(0, fwd.dim());
              for (std::size_t j = 0; j < mid.size(); ++j) {
                const std::size_t slot = w * n_ + mid[j];
                if (spaces_[slot]->dim() == 0) continue;
                cond = vstack(cond, field.mul(annihilator(slot), pushout_matrix(fwd, *spaces_[slot], out[j])));
              }
              changed |= grow(w * n_ + x, kernel_basis(field, cond));
            }
            const ExtSpace& back = *spaces_[c * n_ + w];
            if (back.dim() > 0) {
              Matrix cond = zeros(0, back.dim());
              for (std::size_t j = 0; j < mid.size(); ++j) {
                const std::size_t slot = mid[j] * n_ + w;
                if (spaces_[slot]->dim() == 0) continue;
                cond = vstack(cond, field.mul(annihilator(slot), pullback_matrix(back, *spaces_[slot], in[j])));
              }
              changed |= grow(c * n_ + w, kernel_basis(field, cond));
            }
          }
          return true;
        });
      }
  }
}

bool ClosureOracle::contains(std::size_t z, std::size_t x, const Vector& coeffs) const {
  const Matrix& v = subspaces_.at(z * n_ + x);
  const PrimeField& field = catalog_->field();
  return rank(field, hstack(v, coeffs)) == static_cast<std::size_t>(v.cols());
}

std::size_t ClosureOracle::subspace_dim(std::size_t z, std::size_t x) const {
  return static_cast<std::size_t>(subspaces_.at(z * n_ + x).cols());
}

PropertyReport check_oracle_equivalence(const ARCatalog& catalog, const ExactStructure& e) {
  PropertyReport r;
  r.name = "oracle";
  const ClosureOracle oracle(catalog, e);
  for (std::size_t z = 0; z < catalog.size(); ++z)
    for (std::size_t x = 0; x < catalog.size(); ++x) {
      const ExtSpace& ext = oracle.ext(z, x);
      for_each_vector(catalog.field(), ext.dim(), [&](const Vector& c) {
        ++r.checked;
        const bool by_defect = contains(catalog, e, realize(ext, c));
        if (by_defect != oracle.contains(z, x, c))
          r.violations.push_back("Ext(" + catalog.name(z) + "," + catalog.name(x) + ") class disagrees");
        return true;
      });
    }
  return r;
}

std::string invariant_fingerprint(const ExactCategory& cat) {
  const ARCatalog& c = cat.catalog();
  auto dims = [&](std::size_t i) { return dim_string(c.indecomposable(i).dims()); };
  auto class_key = [&](const ObjectClass& cls) {
    std::vector<std::string> parts;
    for (auto i : cls) parts.push_back(dims(i));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "+") + p;
    return s.empty() ? std::string("0") : s;
  };
  std::ostringstream out;
  std::set<std::string> lines;
  for (std::size_t k : cat.structure().indices())
    lines.insert("select " + dims(c.ar_sequences()[k].right));
  for (const auto& ar : c.ar_sequences())
    lines.insert("ar " + dims(ar.left) + " " + class_key(ar.middle_class) + " " + dims(ar.right));
  for (std::size_t id = 0; id < cat.census().classes().size(); ++id)
    lines.insert("length " + class_key(cat.census().object(id)) + " " + std::to_string(cat.length(id)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    lines.insert("measure " + dims(i) + " " + gr_string(cat.gr_measure(i)));
    if (cat.is_e_simple(i)) lines.insert("simple " + dims(i));
  }
  for (auto mode : {RadicalMode::subcategory, RadicalMode::ambient})
    for (const auto& a : cat.exact_quiver(mode).arrows)
      lines.insert(std::string(mode == RadicalMode::ambient ? "ambient " : "quiver ") + dims(a.from) + "->" +
                   dims(a.to) + " deg" + std::to_string(a.degree) + " x" + std::to_string(a.multiplicity));
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

PropertyReport check_length_monotonicity(const SequenceCensus& census, const std::vector<ExactStructure>& structures) {
  PropertyReport r;
  r.name = "length monotonicity";
  std::vector<ExactCategory> cats;
  for (const auto& e : structures) cats.emplace_back(census, e);
  const auto& c = census.catalog();
  for (std::size_t a = 0; a < cats.size(); ++a)
    for (std::size_t b = 0; b < cats.size(); ++b) {
      if (a == b || !structures[a].is_subset_of(structures[b])) continue;
      for (std::size_t id = 0; id < census.classes().size(); ++id) {
        ++r.checked;
        const std::size_t la = cats[a].length(id), lb = cats[b].length(id);
        if (la > lb)
          r.violations.push_back(c.class_name(census.object(id)) + ": l" + structures[a].label() + " = " +
                                 std::to_string(la) + " > l" + structures[b].label() + " = " + std::to_string(lb));
        else if (la < lb)
          ++r.strict;
      }
    }
  return r;
}

}  // namespace exactcat
