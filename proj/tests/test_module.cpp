#include "doctest.h"
#include "helpers.hpp"

using namespace tfl;
using namespace tfl::testing;

TEST_CASE("module validation") {
  auto r = ring("DUAL2");
  CHECK(validate_module(regular(r)).ok);
  auto s = simple(r);
  CHECK(s.dim() == 1);
  CHECK(validate_module(s).ok);
  // a acting as 1 breaks a^2 = 0
  GF f(101);
  std::vector<Matrix<GF>> act{Matrix<GF>::identity(f, 1), Matrix<GF>::identity(f, 1)};
  Mod<GF> bad(r, Side::left, 1, act);
  auto rep = validate_module(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.errors.front().find("(i,j)=(1,1)") != std::string::npos);
}

TEST_CASE("regular and free modules") {
  auto r = ring("DUAL2");
  CHECK(regular(r).dim() == 2);
  CHECK(free_module(r, 3, Side::left).dim() == 6);
  auto a2 = ring("A2");
  auto ps = indecomposable_projectives(a2, Side::left);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].dim() == 2);
  CHECK(ps[1].dim() == 1);
  CHECK(direct_sum(ps).sum.dim() == regular(a2).dim());
}

TEST_CASE("semisimple tops") {
  CHECK(semisimple_top(regular(ring("DUAL2"))).module.dim() == 1);
  CHECK(semisimple_top(regular(ring("NG3"))).module.dim() == 1);
  auto s = simple(ring("NG3"));
  auto top = semisimple_top(s);
  CHECK(top.module == s);
  CHECK(top.map.matrix == Matrix<GF>::identity(GF(101), 1));
}

TEST_CASE("hom spaces") {
  auto d = ring("DUAL2");
  CHECK(hom_space(simple(d), regular(d)).size() == 1);
  auto a2 = ring("A2");
  CHECK(hom_space(simple(a2, 0), regular(a2)).empty());
  for (const auto& name : builtin_algebra_names()) {
    auto r = ring(name);
    auto reg = regular(r);
    for (const auto& s : simple_modules(r, Side::left)) {
      CHECK(hom_space(reg, s).size() == s.dim());
      CHECK(hom_space(reg, reg).size() == reg.dim());
    }
  }
}

TEST_CASE("hom space agrees with the intertwiner oracle") {
  for (const auto& name : {"DUAL2", "A2", "NG3", "NAKAYAMA(2,2)", "TRUNCPOLY(3)"}) {
    auto r = ring(name);
    SplitMix64 rng(11);
    for (int t = 0; t < 6; ++t) {
      auto m = random_module(r, Side::left, rng, {}).module;
      auto n = random_module(r, Side::left, rng, {}).module;
      auto fast = hom_space(m, n);
      auto slow = hom_space_by_intertwiners(m, n);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].matrix == slow[i].matrix);
        CHECK(validate_hom(fast[i]).ok);
      }
    }
  }
}

TEST_CASE("kernel and cokernel") {
  auto d = ring("DUAL2");
  auto reg = regular(d);
  // x -> x a is a left module map
  ModHom<GF> mult_a{reg, reg, d->base().right_mult[1]};
  REQUIRE(validate_hom(mult_a).ok);
  auto kc = kernel_cokernel(mult_a);
  CHECK(kc.kernel.module.dim() == 1);
  CHECK(kc.cokernel.module.dim() == 1);
  CHECK(kc.image.module.dim() == 1);
  auto id = identity_hom(reg);
  CHECK(kernel_cokernel(id).kernel.module.dim() == 0);
  CHECK(kernel_cokernel(id).cokernel.module.dim() == 0);
  auto s = simple(d);
  auto z = kernel_cokernel(zero_hom(reg, s));
  CHECK(z.kernel.module.dim() == 2);
  CHECK(z.cokernel.module == s);
  ExactSeq<GF> seq = ExactSeq<GF>::from_maps({kc.kernel.map, mult_a, kc.cokernel.map});
  auto cert = seq.certify();
  CHECK(cert.exact);
  CHECK(cert.euler_characteristic == 0);
}

TEST_CASE("direct sums and pushouts") {
  auto d = ring("DUAL2");
  auto s = simple(d);
  auto ss = direct_sum(std::vector<Mod<GF>>{s, s});
  CHECK(ss.sum.dim() == 2);
  CHECK(ss.sum.action(1).is_zero());
  CHECK(direct_sum(std::vector<Mod<GF>>{s, zero_module(d, Side::left)}).sum == s);

  auto reg = regular(d);
  auto socle = hom_space(s, reg).front();
  auto po = pushout(socle, identity_hom(s));
  CHECK(po.object.dim() == 2);
  CHECK(validate_hom(po.from_y).ok);
  CHECK(validate_hom(po.from_z).ok);
  CHECK(compose(po.from_y, socle).matrix == compose(po.from_z, identity_hom(s)).matrix);
  auto along_id = pushout(identity_hom(reg), ModHom<GF>{reg, reg, d->base().right_mult[1]});
  CHECK(along_id.object.dim() == 2);
  auto with_zero = pushout(socle, zero_hom(s, s));
  CHECK(with_zero.object.dim() == 2);
}

TEST_CASE("star duals and evaluation") {
  auto d = ring("DUAL2");
  CHECK(star_dual(regular(d)).dual.dim() == 2);
  CHECK(star_dual(regular(d)).dual.side() == Side::right);
  CHECK(star_dual(simple(d)).dual.dim() == 1);
  auto a2 = ring("A2");
  CHECK(star_dual(simple(a2, 0)).dual.dim() == 0);
  auto ev_s1 = evaluation_hom(simple(a2, 0));
  CHECK(ev_s1.matrix.is_zero());

  auto ng = ring("NG3");
  auto ev = evaluation_hom(simple(ng));
  CHECK(ev.target.dim() == 4);
  CHECK(rank(ev.matrix) == 1);
  CHECK(validate_hom(ev).ok);

  auto fr = free_module(ng, 2, Side::left);
  auto evf = evaluation_hom(fr);
  CHECK(evf.target.dim() == fr.dim());
  CHECK(rank(evf.matrix) == fr.dim());
  auto fstar = star_dual(fr).dual;
  CHECK(fstar.dim() == 2 * ng->dim());
  CHECK(validate_module(fstar).ok);
}

TEST_CASE("vector space duality of Hom") {
  for (const auto& name : {"A2", "NG3", "NAKAYAMA(2,2)"}) {
    auto r = ring(name);
    SplitMix64 rng(5);
    for (int t = 0; t < 5; ++t) {
      auto m = random_module(r, Side::left, rng, {}).module;
      auto n = random_module(r, Side::left, rng, {}).module;
      auto dm = vector_space_dual(m), dn = vector_space_dual(n);
      CHECK(validate_module(dm).ok);
      CHECK(hom_space(m, n).size() == hom_space(dn, dm).size());
    }
  }
}

TEST_CASE("extensions from cocycles") {
  auto d = ring("DUAL2");
  auto s = simple(d);
  CHECK(ext1_class_count(s, s) == 1);
  auto split = extension_from_cocycle(s, s, 0);
  CHECK(split.certify().exact);
  CHECK(split.objects[2].action(1).is_zero());
  auto e = extension_from_cocycle(s, s, 1);
  CHECK(e.certify().exact);
  CHECK(e.objects[2].dim() == 2);
  CHECK_FALSE(e.objects[2].action(1).is_zero());
  CHECK_THROWS_AS(extension_from_cocycle(s, s, 2), std::out_of_range);
  auto k = ring("K1");
  CHECK(ext1_class_count(simple(k), simple(k)) == 0);
}

TEST_CASE("random modules") {
  auto d = ring("DUAL2");
  SplitMix64 a(42), b(42);
  for (int t = 0; t < 20; ++t) {
    auto x = random_module(d, Side::left, a, {});
    auto y = random_module(d, Side::left, b, {});
    CHECK(x.module == y.module);
  }
  SplitMix64 c(3);
  for (int t = 0; t < 50; ++t) {
    auto x = random_module(d, Side::left, c, {3, 3, false});
    CHECK(x.module.dim() <= 6);
  }
  auto ng = ring("NG3");
  SplitMix64 g(1);
  for (int t = 0; t < 30; ++t) {
    auto x = random_module(ng, Side::left, g, {});
    CHECK(validate_module(x.module).ok);
    CHECK(x.module.side() == Side::left);
  }
}
