#include "doctest.h"
#include "helpers.hpp"

using namespace tfl;
using namespace tfl::testing;

TEST_CASE("presentations") {
  auto d = ring("DUAL2");
  auto p = presentation(regular(d), true);
  CHECK(p.relations.source.rank() == 0);
  CHECK(p.relations.target.rank() == 1);
  auto ps = presentation(simple(d), true);
  CHECK(ps.relations.source.rank() == 1);
  CHECK(ps.relations.target.rank() == 1);
  auto ng = ring("NG3");
  auto pn = presentation(simple(ng), true);
  CHECK(pn.relations.source.rank() == 2);
  CHECK(pn.relations.target.rank() == 1);
}

TEST_CASE("syzygies") {
  auto d = ring("DUAL2");
  auto s = simple(d);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(syzygy(s, n, true) == s);
  auto a2 = ring("A2");
  auto om = syzygy(simple(a2, 0), 1, true);
  CHECK(om.dim() == 1);
  CHECK(om == indecomposable_projectives(a2, Side::left)[1]);
  auto ng = ring("NG3");
  CHECK(syzygy(simple(ng), 1, true).dim() == 2);
  CHECK(syzygy(simple(ng), 2, true).dim() == 4);
  Resolution<GF> res(simple(ng), true);
  for (std::size_t i = 0; i < 5; ++i) CHECK(res.term(i).rank() == (1u << i));
}

TEST_CASE("resolutions are exact and minimal") {
  for (const auto& name : {"DUAL2", "A2", "NG3", "NAKAYAMA(2,2)", "TRUNCPOLY(3)"}) {
    auto r = ring(name);
    SplitMix64 rng(9);
    for (int t = 0; t < 5; ++t) {
      auto m = random_module(r, Side::left, rng, {}).module;
      for (bool minimal : {true, false}) {
        Resolution<GF> res(m, minimal);
        auto p0 = res.term(0).as_module();
        ModHom<GF> aug{p0, m, res.cover_map(0)};
        std::vector<ModHom<GF>> chain;
        for (std::size_t i = 3; i >= 1; --i) {
          auto src = res.term(i).as_module();
          auto tgt = res.term(i - 1).as_module();
          chain.push_back({src, tgt, res.differential(i).dense()});
        }
        chain.push_back(aug);
        auto seq = ExactSeq<GF>::from_maps(chain);
        // the left end is not exact (truncation); check interior nodes from P_2 on
        for (std::size_t i = 2; i + 1 < seq.objects.size(); ++i) {
          auto image = Subspace<GF>::column_space(seq.maps[i - 1].matrix);
          CHECK(image == kernel_basis(seq.maps[i].matrix));
        }
        if (minimal) {
          auto rad = radical_submodule(res.term(0).as_module());
          CHECK(rad.contains(Subspace<GF>::column_space(res.differential(1).dense())));
        }
      }
    }
  }
}

TEST_CASE("transposes") {
  auto d = ring("DUAL2");
  CHECK(transpose(free_module(d, 2, Side::left)).module.dim() == 0);
  auto trs = transpose(simple(d));
  CHECK(trs.module.dim() == 1);
  CHECK(trs.module.side() == Side::right);
  CHECK_FALSE(trs.projective_ambiguity);
  auto a2 = ring("A2");
  auto tr1 = transpose(simple(a2, 0)).module;
  CHECK(tr1.dim() == 1);
  CHECK(tr1 == simple(a2, 1, Side::right));
}

TEST_CASE("ext dimensions") {
  auto d = ring("DUAL2");
  auto ed = ext_dims(simple(d), regular(d), 4);
  CHECK(ed == std::vector<std::size_t>{1, 0, 0, 0, 0});
  auto a2 = ring("A2");
  CHECK(ext_dims(simple(a2, 0), regular(a2), 3) == std::vector<std::size_t>{0, 1, 0, 0});
  auto ng = ring("NG3");
  CHECK(ext_dims(simple(ng), regular(ng), 1)[1] == 3);
}

TEST_CASE("ext is independent of the resolution") {
  for (const auto& name : {"DUAL2", "A2", "NG3", "NAKAYAMA(2,2)"}) {
    auto r = ring(name);
    SplitMix64 rng(21);
    for (int t = 0; t < 5; ++t) {
      auto m = random_module(r, Side::left, rng, {}).module;
      auto n = random_module(r, Side::left, rng, {}).module;
      Resolution<GF> a(m, true), b(m, false);
      CHECK(ext_dims(a, n, 3) == ext_dims(b, n, 3));
      CHECK(ext_dims(a, n, 0)[0] == hom_space(m, n).size());
    }
  }
}

TEST_CASE("ext modules") {
  auto ng = ring("NG3");
  Resolution<GF> res(simple(ng), true);
  auto e1 = ext_module_to_regular(res, 1);
  CHECK(e1.dim() == 3);
  CHECK(e1.side() == Side::right);
  CHECK(validate_module(e1).ok);
}
