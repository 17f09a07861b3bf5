#include "doctest.h"
#include "tfl/matrix.hpp"
#include "tfl/random.hpp"

using namespace tfl;

namespace {

using GF = PrimeField;
using QQ = RationalField;

template <class F>
Matrix<F> ints(const F& f, std::vector<std::vector<long>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix<F> m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

template <class F>
Vec<F> ivec(const F& f, std::vector<long> v) {
  Vec<F> out;
  for (long x : v) out.push_back(f.from_int(x));
  return out;
}

template <class F>
Matrix<F> random_matrix(const F& f, SplitMix64& rng, std::size_t r, std::size_t c) {
  Matrix<F> m(f, r, c);
  auto draw = [&](std::uint64_t n) { return rng.below(n); };
  // sparse-ish entries so that rank deficiency actually occurs
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.below(3) != 0) m(i, j) = f.random(draw);
  return m;
}

// Brute-force kernel size over GF(p): counts x in F^c with m x = 0.
std::size_t brute_kernel_size(const Matrix<GF>& m) {
  const std::uint32_t p = m.field().modulus();
  std::size_t total = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) total *= p;
  std::size_t count = 0;
  Vec<GF> x(m.cols(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      x[j] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_zero_vec(m.field(), m.apply(x))) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("rref examples over GF(5)") {
  GF f(5);
  auto id = Matrix<GF>::identity(f, 2);
  auto r = rref(id);
  CHECK(r.form == id);
  CHECK(r.rank() == 2);

  auto m = ints(f, {{2, 4}, {1, 2}});
  auto rm = rref(m);
  CHECK(rm.form == ints(f, {{1, 2}, {0, 0}}));
  CHECK(rm.rank() == 1);
  CHECK(rm.pivots == std::vector<std::size_t>{0});

  Matrix<GF> z(f, 3, 2);
  auto rz = rref(z);
  CHECK(rz.form.is_zero());
  CHECK(rz.rank() == 0);
}

TEST_CASE("kernel examples") {
  GF f(5);
  CHECK(kernel_basis(Matrix<GF>::identity(f, 3)).dim() == 0);
  CHECK(kernel_basis(Matrix<GF>(f, 4, 4)).dim() == 4);
  auto k = kernel_basis(ints(f, {{1, 2}}));
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace<GF>::span(f, 2, {ivec(f, {3, 1})}));
  CHECK(k.contains(ivec(f, {3, 1})));
  CHECK_FALSE(k.contains(ivec(f, {1, 1})));
}

TEST_CASE("solve_all examples") {
  GF f(5);
  auto b = ivec(f, {4, 1, 3});
  auto s = solve_all(Matrix<GF>::identity(f, 3), b);
  REQUIRE(s);
  CHECK(s->particular == b);
  CHECK(s->kernel.dim() == 0);

  CHECK_FALSE(solve_all(Matrix<GF>(f, 2, 2), ivec(f, {1, 0})));

  auto h = solve_all(ints(f, {{1, 1}}), ivec(f, {0}));
  REQUIRE(h);
  CHECK(h->particular == ivec(f, {0, 0}));
  CHECK(h->kernel.dim() == 1);

  CHECK_THROWS_AS(solve_all(ints(f, {{1, 1}}), ivec(f, {0, 0})), std::invalid_argument);
}

TEST_CASE("subspace sum and intersection") {
  GF f(5);
  auto e1 = Subspace<GF>::span(f, 2, {ivec(f, {1, 0})});
  auto e2 = Subspace<GF>::span(f, 2, {ivec(f, {0, 1})});
  CHECK(e1.sum(e2).dim() == 2);
  CHECK(e1.intersect(e2).dim() == 0);
  CHECK(e1.sum(e1) == e1);
  CHECK(e1.intersect(e1) == e1);

  auto diag = Subspace<GF>::span(f, 2, {ivec(f, {1, 1})});
  CHECK(diag.sum(e1).dim() == 2);
  CHECK(diag.intersect(e1).dim() == 0);

  auto e3 = Subspace<GF>::span(f, 3, {ivec(f, {0, 0, 1})});
  CHECK_THROWS(e1.sum(e3));
}

TEST_CASE("mixed fields are rejected") {
  auto a = Matrix<GF>::identity(GF(5), 2);
  auto b = Matrix<GF>::identity(GF(7), 2);
  CHECK_THROWS_AS(a * b, FieldError);
  CHECK_THROWS_AS(a + b, FieldError);
}

TEST_CASE("rational entries stay reduced") {
  QQ q;
  auto m = Matrix<QQ>::from_rows(q, 2, {{q.parse("2/4"), q.parse("1")}, {q.parse("3"), q.parse("5")}});
  CHECK(q.to_string(m(0, 0)) == "1/2");
  auto r = rref(m);
  CHECK(r.rank() == 2);
  CHECK(r.form == Matrix<QQ>::identity(q, 2));
  auto singular = ints(q, {{2, 3}, {4, 6}});
  auto rs = rref(singular);
  CHECK(rs.rank() == 1);
  CHECK(q.to_string(rs.form(0, 1)) == "3/2");
}

TEST_CASE("rank agrees with brute-force kernel count over GF(3)") {
  GF f(3);
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
    auto m = random_matrix(f, rng, r, c);
    std::size_t expected = 1;
    for (std::size_t j = 0; j < c - rank(m); ++j) expected *= 3;
    CHECK(brute_kernel_size(m) == expected);
  }
}

TEST_CASE_TEMPLATE("linear algebra properties", F, GF, QQ) {
  F f;
  if constexpr (std::is_same_v<F, GF>) f = GF(5);
  SplitMix64 rng(20261016);
  auto draw = [&](std::uint64_t n) { return rng.below(n); };
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    auto m = random_matrix(f, rng, r, c);
    auto once = rref(m);
    CHECK(rref(once.form).form == once.form);
    CHECK(rank(m) == rank(m.transpose()));

    auto k = kernel_basis(m);
    CHECK(k.dim() + once.rank() == c);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero_vec(f, m.apply(k.vector(i))));

    Vec<F> x(c);
    for (auto& e : x) e = f.random(draw);
    auto b = m.apply(x);
    auto s = solve_all(m, b);
    REQUIRE(s);
    CHECK(m.apply(s->particular) == b);
    CHECK(s->kernel == k);

    auto u = Subspace<F>::column_space(random_matrix(f, rng, c, 1 + rng.below(4)));
    auto v = Subspace<F>::column_space(random_matrix(f, rng, c, 1 + rng.below(4)));
    auto sum = u.sum(v);
    auto cap = u.intersect(v);
    CHECK(sum.dim() + cap.dim() == u.dim() + v.dim());
    CHECK(sum.contains(u));
    CHECK(u.contains(cap));
    CHECK(v.contains(cap));
  }
}
