#include "doctest.h"
#include "tfl/algebra.hpp"

using namespace tfl;

namespace {

using GF = PrimeField;
using QQ = RationalField;

// e_i A e_j as a subspace of A.
template <class F>
Subspace<F> corner(const Algebra<F>& a, std::size_t i, std::size_t j) {
  std::vector<Vec<F>> vecs;
  for (std::size_t b = 0; b < a.dim; ++b)
    vecs.push_back(a.multiply(a.multiply(a.idempotents[i], a.basis_vector(b)), a.idempotents[j]));
  return Subspace<F>::span(a.field, a.dim, vecs);
}

// Upper triangular 2x2 matrices with basis e11, e12, e22, without quiver data.
template <class F>
Algebra<F> upper_triangular(const F& f) {
  Algebra<F> a;
  a.field = f;
  a.dim = 3;
  a.table.assign(27, f.zero());
  a.c(0, 0, 0) = f.one();
  a.c(0, 1, 1) = f.one();
  a.c(1, 2, 1) = f.one();
  a.c(2, 2, 2) = f.one();
  a.unit = {f.one(), f.zero(), f.one()};
  a.finalize();
  return a;
}

}  // namespace

TEST_CASE("builtin dimensions") {
  PrimeField f(101);
  CHECK(builtin_algebra("K1", f).dim == 1);
  CHECK(builtin_algebra("DUAL2", f).dim == 2);
  CHECK(builtin_algebra("TRUNCPOLY(3)", f).dim == 3);
  CHECK(builtin_algebra("A2", f).dim == 3);
  CHECK(builtin_algebra("NG3", f).dim == 3);
  CHECK(builtin_algebra("NAKAYAMA(2,2)", f).dim == 4);
  CHECK_THROWS_AS(builtin_algebra("FOO", f), AlgebraError);
  CHECK_THROWS_AS(builtin_algebra("TRUNCPOLY(x)", f), AlgebraError);
}

TEST_CASE("validation") {
  GF f(5);
  CHECK(validate_algebra(builtin_algebra("K1", f)).ok);
  auto d = builtin_algebra("DUAL2", f);
  CHECK(validate_algebra(d).ok);
  // a * a = 0
  CHECK(f.is_zero(d.c(1, 1, 0)));
  CHECK(f.is_zero(d.c(1, 1, 1)));

  auto broken = d;
  broken.unit = zero_vec(f, 2);
  auto rep = validate_algebra(broken);
  CHECK_FALSE(rep.ok);
  CHECK(rep.errors.front().find("unit axiom") != std::string::npos);

  auto nonassoc = builtin_algebra("TRUNCPOLY(3)", f);
  nonassoc.c(1, 2, 2) = f.one();  // x * x^2 = x^2 while x^2 * x = 0
  nonassoc.finalize();
  CHECK_FALSE(validate_algebra(nonassoc).ok);
}

TEST_CASE("bound quiver algebras") {
  GF f(7);
  auto a2 = builtin_algebra("A2", f);
  CHECK(a2.dim == 3);
  CHECK(a2.idempotents.size() == 2);
  REQUIRE(a2.radical);
  CHECK(a2.radical->dim() == 1);

  auto ng3 = builtin_algebra("NG3", f);
  REQUIRE(ng3.radical);
  CHECK(ng3.radical->dim() == 2);
  CHECK(nilpotency_index(ng3, *ng3.radical) == 2u);

  auto d = builtin_algebra("DUAL2", f);
  CHECK(compute_radical(d).dim() == 1);
  CHECK(nilpotency_index(d, compute_radical(d)) == 2u);
  CHECK(compute_radical(builtin_algebra("K1", f)).dim() == 0);

  auto t3 = builtin_algebra("TRUNCPOLY(3)", f);
  CHECK(compute_radical(t3).dim() == 2);
  CHECK(nilpotency_index(t3, compute_radical(t3)) == 3u);

  QuiverPresentation bad;
  bad.vertices = 1;
  bad.arrows.push_back({0, 3, "a"});
  CHECK_THROWS(build_bound_quiver_algebra(f, bad));

  QuiverPresentation short_rel;
  short_rel.vertices = 1;
  short_rel.arrows.push_back({0, 0, "a"});
  short_rel.relations.push_back({PathTerm{"1", {"a"}}});
  short_rel.nilpotency = 3;
  CHECK_THROWS(build_bound_quiver_algebra(f, short_rel));
}

TEST_CASE("idempotents and corners of quiver algebras") {
  GF f(11);
  for (auto name : builtin_algebra_names()) {
    CAPTURE(name);
    auto a = builtin_algebra(name, f);
    REQUIRE(a.has_idempotents());
    auto sum = zero_vec(f, a.dim);
    for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
      for (std::size_t k = 0; k < a.dim; ++k) sum[k] = f.add(sum[k], a.idempotents[i][k]);
      for (std::size_t j = 0; j < a.idempotents.size(); ++j) {
        auto prod = a.multiply(a.idempotents[i], a.idempotents[j]);
        CHECK(prod == (i == j ? a.idempotents[i] : zero_vec(f, a.dim)));
      }
    }
    CHECK(sum == a.unit);
    REQUIRE(a.radical);
    auto n = nilpotency_index(a, *a.radical);
    REQUIRE(n);
    CHECK(*n <= a.dim);
    CHECK(validate_algebra(a).ok);
  }
  // alpha runs from vertex 0 to vertex 1, so it lies in e_1 A e_0
  auto a2 = builtin_algebra("A2", f);
  CHECK(corner(a2, 1, 0).dim() == 1);
  CHECK(corner(a2, 0, 1).dim() == 0);
  CHECK(corner(a2, 0, 0).dim() == 1);
  auto nak = builtin_algebra("NAKAYAMA(2,2)", f);
  CHECK(corner(nak, 1, 0).dim() == 1);
  CHECK(corner(nak, 0, 1).dim() == 1);
}

TEST_CASE("opposite algebras") {
  GF f(5);
  for (auto name : builtin_algebra_names()) {
    CAPTURE(name);
    auto a = builtin_algebra(name, f);
    auto oo = opposite_algebra(opposite_algebra(a));
    CHECK(oo.table == a.table);
    CHECK(oo.name == a.name);
    CHECK(validate_algebra(opposite_algebra(a)).ok);
  }
  auto d = builtin_algebra("DUAL2", f);
  CHECK(opposite_algebra(d).table == d.table);
  auto a2 = builtin_algebra("A2", f);
  auto op = opposite_algebra(a2);
  CHECK(op.dim == 3);
  CHECK(op.table != a2.table);
  CHECK(corner(op, 0, 1).dim() == 1);
  CHECK(corner(op, 1, 0).dim() == 0);
}

TEST_CASE("radical of structure-constant algebras") {
  QQ q;
  auto t = upper_triangular(q);
  CHECK(validate_algebra(t).ok);
  auto rad = compute_radical(t);
  CHECK(rad.dim() == 1);
  CHECK(rad.contains(t.basis_vector(1)));

  auto tp = upper_triangular(GF(5));
  CHECK(validate_algebra(tp).ok);
  CHECK_THROWS_AS(compute_radical(tp), UnsupportedError);
}
