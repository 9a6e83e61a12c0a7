#include <doctest.h>

#include "fixtures.hpp"

using namespace exactcat;

namespace {

std::vector<std::string> names(const ARCatalog& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.name(i));
  return out;
}

std::size_t idx(const ARCatalog& c, const std::string& key) {
  auto i = c.find(key);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("catalog of 1->2<-3") {
  const PrimeField f2(2);
  const auto c = build_catalog(fixtures::a3_sink(), f2);
  CHECK(names(c) == std::vector<std::string>{"P1", "S2", "P3", "S3", "I2", "S1"});
  CHECK(c.ar_sequences().size() == 3);
  CHECK(dim_string(c.indecomposable(idx(c, "I2")).dims()) == "111");
  CHECK(dim_string(c.indecomposable(idx(c, "P1")).dims()) == "110");

  CHECK(c.translate(idx(c, "S3")) == idx(c, "P1"));
  CHECK(c.translate(idx(c, "I2")) == idx(c, "S2"));
  CHECK(c.translate(idx(c, "S1")) == idx(c, "P3"));
  CHECK_FALSE(c.translate(idx(c, "P1")).has_value());

  const auto& ar_s3 = ar_sequence_for(c, idx(c, "S3"));
  CHECK(ar_s3.left == idx(c, "P1"));
  CHECK(ar_s3.middle_class == ObjectClass{idx(c, "I2")});
  const auto& ar_i2 = ar_sequence_for(c, idx(c, "I2"));
  CHECK(ar_i2.left == idx(c, "S2"));
  CHECK(c.class_name(ar_i2.middle_class) == "P1+P3");
  CHECK_THROWS(ar_sequence_for(c, idx(c, "P3")));

  for (const auto& s : c.ar_sequences()) {
    CHECK(is_exact(f2, s.sequence));
    CHECK_FALSE(splits(f2, s.sequence));
    CHECK(decompose(c, s.sequence.middle) == s.middle_class);
  }
}

TEST_CASE("catalog of 1<-2->3") {
  const auto c = build_catalog(fixtures::a3_source(), PrimeField(2));
  const auto& ar = ar_sequence_for(c, idx(c, "010"));
  CHECK(dim_string(c.indecomposable(ar.left).dims()) == "111");
  REQUIRE(ar.middle_class.size() == 2);
  CHECK(dim_string(c.indecomposable(ar.middle_class[0]).dims()) == "011");
  CHECK(dim_string(c.indecomposable(ar.middle_class[1]).dims()) == "110");
  CHECK(c.name(ar.middle_class[0]) == "I3");
}

TEST_CASE("small catalogs") {
  const PrimeField f2(2);
  const auto c1 = build_catalog(fixtures::a1(), f2);
  CHECK(c1.size() == 1);
  CHECK(c1.ar_sequences().empty());
  const auto c2 = build_catalog(fixtures::a2(), f2);
  CHECK(c2.size() == 3);
  REQUIRE(c2.ar_sequences().size() == 1);
  const auto& s = c2.ar_sequences()[0];
  CHECK(c2.name(s.left) == "S2");
  CHECK(c2.name(s.right) == "S1");
  CHECK(c2.class_name(s.middle_class) == "P1");
}

namespace {

// Interval module on [lo, hi] of a linearly labelled A_n with identity maps.
Representation interval(const std::shared_ptr<const Quiver>& q, std::size_t lo, std::size_t hi) {
  DimVector d(q->vertex_count(), 0);
  for (std::size_t v = lo; v <= hi; ++v) d[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) {
    const bool inside = d[a.source] && d[a.target];
    maps.push_back(inside ? Matrix::Identity(1, 1) : zeros(d[a.target], d[a.source]));
  }
  return Representation(q, d, maps);
}

std::shared_ptr<const Quiver> a_n(std::size_t n, unsigned orientation) {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool right = (orientation >> i) & 1;
    a.push_back({right ? i : i + 1, right ? i + 1 : i, "a" + std::to_string(i)});
  }
  return fixtures::make(v, a);
}

}  // namespace

TEST_CASE("type A closed form, all orientations up to A5") {
  for (int p : {2, 3}) {
    const PrimeField f(p);
    for (std::size_t n = 1; n <= 5; ++n)
      for (unsigned o = 0; o < (1u << (n - 1)); ++o) {
        const auto q = a_n(n, o);
        const auto c = build_catalog(q, f);
        CHECK(c.size() == n * (n + 1) / 2);
        CHECK(c.ar_sequences().size() == n * (n + 1) / 2 - n);
        for (std::size_t lo = 0; lo < n; ++lo)
          for (std::size_t hi = lo; hi < n; ++hi) CHECK(c.index_of(interval(q, lo, hi)).has_value());
      }
  }
}

TEST_CASE("catalog invariants") {
  const PrimeField f2(2);
  for (const auto& q : {fixtures::a3_sink(), fixtures::a3_source(), fixtures::a4(), fixtures::d4()}) {
    const auto c = build_catalog(q, f2);
    std::size_t nonprojective = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      nonprojective += !c.is_projective(i);
      for (std::size_t j = 0; j < i; ++j)
        CHECK_FALSE(iso_test(c, c.indecomposable(i), c.indecomposable(j)));
      CHECK(ExtSpace(f2, c.indecomposable(i), c.indecomposable(i)).dim() == 0);
      // Euler form identity on catalog pairs.
      for (std::size_t j = 0; j < c.size(); ++j) {
        const long ext = ExtSpace(f2, c.indecomposable(i), c.indecomposable(j)).dim();
        CHECK(static_cast<long>(c.hom_dim(i, j)) - ext ==
              euler_form(*q, c.indecomposable(i).dims(), c.indecomposable(j).dims()));
      }
    }
    for (std::size_t v = 0; v < q->vertex_count(); ++v) {
      CHECK(c.is_projective(c.projective_at(v)));
      CHECK(c.is_injective(c.injective_at(v)));
    }
    CHECK(c.ar_sequences().size() == nonprojective);
    for (const auto& s : c.ar_sequences()) {
      CHECK(c.translate(s.right) == s.left);
      CHECK(c.inverse_translate(s.left) == s.right);
      CHECK_FALSE(c.is_injective(s.left));
      CHECK(is_exact(f2, s.sequence));
      CHECK_FALSE(splits(f2, s.sequence));
      CHECK(c.index_of(kernel_rep(f2, s.sequence.proj).object) == s.left);
    }
  }
  CHECK(build_catalog(fixtures::d4(), f2).size() == 12);
}

TEST_CASE("catalog cap") {
  const PrimeField f2(2);
  CHECK_THROWS_AS(build_catalog(fixtures::a4(), f2, 5), CapExceeded);
  // The Kronecker quiver is representation-infinite.
  const auto kronecker = fixtures::make({"1", "2"}, {{0, 1, "a"}, {0, 1, "b"}});
  CHECK_THROWS_AS(build_catalog(kronecker, f2, 30), CapExceeded);
  // With the default cap the dimension bound stops it long before 200 modules.
  CHECK_THROWS_AS(build_catalog(kronecker, f2), CapExceeded);
}
