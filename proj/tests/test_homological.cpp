#include <doctest.h>

#include "exactcat/exact_structures.hpp"
#include "fixtures.hpp"

using namespace exactcat;

namespace {

std::size_t idx(const ARCatalog& c, const std::string& key) {
  auto i = c.find(key);
  REQUIRE(i.has_value());
  return *i;
}

Vector unit(Eigen::Index n, Eigen::Index k) {
  Vector v = Vector::Zero(n);
  v(k) = 1;
  return v;
}

// Concrete pullback of x -> Y -d-> z along h: z' -> z, as the kernel of (d, -h).
Representation pullback_middle(const PrimeField& f, const SESClass& s, const Morphism& h) {
  const Representation sum = direct_sum(s.middle, h.source());
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < h.components().size(); ++v)
    comps.push_back(f.reduce(hstack(s.proj.component(v), -h.component(v))));
  return kernel_rep(f, Morphism(sum, s.right, comps)).object;
}

// Concrete pushout of x -i-> Y -> z along g: x -> x', as the cokernel of (i, -g).
Representation pushout_middle(const PrimeField& f, const SESClass& s, const Morphism& g) {
  const Representation sum = direct_sum(s.middle, g.target());
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < g.components().size(); ++v)
    comps.push_back(f.reduce(vstack(s.incl.component(v), -g.component(v))));
  return cokernel_rep(f, Morphism(s.left, sum, comps)).object;
}

std::vector<std::size_t> defects(const ARCatalog& c, const SESClass& s) {
  std::vector<std::size_t> out;
  for (const auto& ar : c.ar_sequences()) out.push_back(defect(c.field(), s, c.indecomposable(ar.right)));
  return out;
}

}  // namespace

TEST_CASE("ext examples on 1->2<-3") {
  const PrimeField f2(2);
  const auto c = build_catalog(fixtures::a3_sink(), f2);
  const auto& s3 = c.indecomposable(idx(c, "S3"));
  const ExtSpace e(f2, s3, c.indecomposable(idx(c, "P1")));
  CHECK(e.dim() == 1);
  CHECK(ext_space(f2, c.indecomposable(idx(c, "S1")), s3).dim() == 0);
  for (const auto& x : c.indecomposables()) CHECK(ext_space(f2, x, x).dim() == 0);

  const SESClass zero = realize(e, Vector::Zero(1));
  CHECK(is_exact(f2, zero));
  CHECK(splits(f2, zero));
  const SESClass to_s3 = realize(e, unit(1, 0));
  CHECK(is_exact(f2, to_s3));
  CHECK_FALSE(splits(f2, to_s3));
  CHECK(decompose(c, to_s3.middle) == ObjectClass{idx(c, "I2")});

  const ExtSpace e4(f2, c.indecomposable(idx(c, "S1")), c.indecomposable(idx(c, "S2")));
  REQUIRE(e4.dim() == 1);
  CHECK(decompose(c, realize(e4, unit(1, 0)).middle) == ObjectClass{idx(c, "P1")});
}

TEST_CASE("pushouts of the two short sequences give AR sequences") {
  const PrimeField f2(2);
  const auto c = build_catalog(fixtures::a3_sink(), f2);
  const auto& s2 = c.indecomposable(idx(c, "S2"));
  const auto& p1 = c.indecomposable(idx(c, "P1"));
  const auto& p3 = c.indecomposable(idx(c, "P3"));
  const auto& s1 = c.indecomposable(idx(c, "S1"));
  const auto& s3 = c.indecomposable(idx(c, "S3"));

  // S2 -> P3 -> S3 pushed out along S2 -> P1 is P1 -> I2 -> S3.
  const ExtSpace p3_seq(f2, s3, s2), to_s3(f2, s3, p1);
  const auto g1 = hom_basis(f2, s2, p1);
  REQUIRE(g1.size() == 1);
  const Vector moved1 = pushout_action(p3_seq, to_s3, unit(1, 0), g1[0]);
  CHECK(moved1 == unit(1, 0));
  CHECK(decompose(c, realize(to_s3, moved1).middle) == ObjectClass{idx(c, "I2")});

  // S2 -> P1 -> S1 pushed out along S2 -> P3 is P3 -> I2 -> S1.
  const ExtSpace p1_seq(f2, s1, s2), to_s1(f2, s1, p3);
  const auto g3 = hom_basis(f2, s2, p3);
  REQUIRE(g3.size() == 1);
  CHECK(pushout_action(p1_seq, to_s1, unit(1, 0), g3[0]) == unit(1, 0));
}

TEST_CASE("pullback and pushout actions match materialized constructions") {
  const PrimeField f2(2);
  for (const auto& q : {fixtures::a3_sink(), fixtures::a3_source(), fixtures::a3_linear()}) {
    const auto c = build_catalog(q, f2);
    const std::size_t n = c.size();
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t x = 0; x < n; ++x) {
        const ExtSpace src(f2, c.indecomposable(z), c.indecomposable(x));
        if (src.dim() == 0) continue;
        for (std::size_t w = 0; w < n; ++w) {
          const ExtSpace back(f2, c.indecomposable(w), c.indecomposable(x));
          const auto hs = hom_basis(f2, c.indecomposable(w), c.indecomposable(z));
          for_each_hom_element(f2, c.indecomposable(w), c.indecomposable(z), std::span<const Morphism>(hs),
                               [&](const Morphism& h) {
                                 for_each_vector(f2, src.dim(), [&](const Vector& a) {
                                   const Vector b = pullback_action(src, back, a, h);
                                   CHECK(decompose(c, realize(back, b).middle) ==
                                         decompose(c, pullback_middle(f2, realize(src, a), h)));
                                   return true;
                                 });
                                 return true;
                               });
          const ExtSpace fwd(f2, c.indecomposable(z), c.indecomposable(w));
          const auto gs = hom_basis(f2, c.indecomposable(x), c.indecomposable(w));
          for_each_hom_element(f2, c.indecomposable(x), c.indecomposable(w), std::span<const Morphism>(gs),
                               [&](const Morphism& g) {
                                 for_each_vector(f2, src.dim(), [&](const Vector& a) {
                                   const Vector b = pushout_action(src, fwd, a, g);
                                   CHECK(decompose(c, realize(fwd, b).middle) ==
                                         decompose(c, pushout_middle(f2, realize(src, a), g)));
                                   return true;
                                 });
                                 return true;
                               });
        }
        // Identity and zero act as expected.
        const auto& zr = c.indecomposable(z);
        for_each_vector(f2, src.dim(), [&](const Vector& a) {
          CHECK(pullback_action(src, src, a, Morphism::identity(zr)) == a);
          CHECK(is_zero(Matrix(pullback_action(src, src, a, Morphism::zero(zr, zr)))));
          CHECK(pushout_action(src, src, a, Morphism::identity(c.indecomposable(x))) == a);
          return true;
        });
      }
  }
}

TEST_CASE("realize and linearize round trip, including decomposable end terms") {
  const PrimeField f2(2);
  const auto c = build_catalog(fixtures::a3_sink(), f2);
  const auto classes = enumerate_classes(c, 3);
  for (const auto& zc : classes)
    for (const auto& xc : classes) {
      if (zc.empty() || xc.empty()) continue;
      const ExtSpace e(f2, c.materialize(zc), c.materialize(xc));
      for_each_vector(f2, e.dim(), [&](const Vector& a) {
        const SESClass s = realize(e, a);
        CHECK(is_exact(f2, s));
        CHECK(linearize(e, s) == a);
        return true;
      });
    }
}

TEST_CASE("defect examples") {
  const PrimeField f2(2);
  const auto c = build_catalog(fixtures::a3_sink(), f2);
  const auto& ars = c.ar_sequences();
  // AR sequences are numbered by right term: S3, I2, S1.
  CHECK(defects(c, ars[0].sequence) == std::vector<std::size_t>{1, 0, 0});
  CHECK(defects(c, split_sequence(c.indecomposable(0), c.indecomposable(3))) == std::vector<std::size_t>{0, 0, 0});

  // S2 -> P3 -> S3 has defect at S3 and at I2.
  const ExtSpace p3_seq(f2, c.indecomposable(idx(c, "S3")), c.indecomposable(idx(c, "S2")));
  const SESClass seq = realize(p3_seq, unit(1, 0));
  CHECK(decompose(c, seq.middle) == ObjectClass{idx(c, "P3")});
  CHECK(defects(c, seq) == std::vector<std::size_t>{1, 1, 0});
  // S2 -> P1 -> S1 has defect at I2 and at S1.
  const ExtSpace p1_seq(f2, c.indecomposable(idx(c, "S1")), c.indecomposable(idx(c, "S2")));
  CHECK(defects(c, realize(p1_seq, unit(1, 0))) == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("splitting is detected by the defect, and defect is additive") {
  const PrimeField f2(2);
  for (const auto& q : {fixtures::a2(), fixtures::a3_sink(), fixtures::a3_source(), fixtures::a3_linear()}) {
    const auto c = build_catalog(q, f2);
    const auto classes = enumerate_classes(c, 3);
    std::vector<SESClass> seqs;
    for (const auto& zc : classes)
      for (const auto& xc : classes) {
        if (zc.empty() || xc.empty()) continue;
        const ExtSpace e(f2, c.materialize(zc), c.materialize(xc));
        for_each_vector(f2, e.dim(), [&](const Vector& a) {
          const SESClass s = realize(e, a);
          const auto d = defects(c, s);
          const bool no_defect = std::all_of(d.begin(), d.end(), [](std::size_t v) { return v == 0; });
          CHECK(splits(f2, s) == no_defect);
          CHECK(splits(f2, s) == is_zero(Matrix(a)));
          CHECK(support(c, s) == support_from_classes(c, xc, decompose(c, s.middle), zc));
          if (seqs.size() < 40) seqs.push_back(s);
          return true;
        });
      }
    for (std::size_t i = 0; i < seqs.size(); i += 3)
      for (std::size_t j = 0; j < seqs.size(); j += 5) {
        const auto a = defects(c, seqs[i]), b = defects(c, seqs[j]), ab = defects(c, direct_sum(seqs[i], seqs[j]));
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(ab[k] == a[k] + b[k]);
      }
  }
}
