#include "doctest.h"
#include "helpers.hpp"
#include "tfl/constructions.hpp"

using namespace tfl;
using namespace tfl::testing;

namespace {

template <class F>
ExactSeq<F> ses_from_inclusion(const Inclusion<F>& inc) {
  auto q = quotient_module(inc.map.target, Subspace<F>::column_space(inc.map.matrix));
  return ExactSeq<F>::from_maps({inc.map, q.map});
}

}  // namespace

TEST_CASE("cosyzygy embedding") {
  auto d = ring("DUAL2");
  for (std::size_t n : {1u, 3u}) {
    auto c = cosyzygy_embedding(simple(d), n);
    CHECK(c.cert.ok);
    CHECK(c.seq.objects.size() == n + 4);
    const auto& a = c.seq.objects[n + 2];
    auto e = ext_dims(a, regular(d), n);
    for (std::size_t i = 1; i <= n; ++i) CHECK(e[i] == 0);
  }
  auto fr = free_module(d, 2, Side::left);
  CHECK(cosyzygy_embedding(fr, 1).cert.ok);

  auto ng = ring("NG3");
  CHECK(cosyzygy_embedding(simple(ng), 1).cert.ok);
  CHECK_THROWS_AS(cosyzygy_embedding(simple(ng), 2), PreconditionError);
  auto a2 = ring("A2");
  CHECK_THROWS_AS(cosyzygy_embedding(simple(a2, 0), 1), PreconditionError);
}

TEST_CASE("cosyzygy embedding round trip on samples") {
  for (const auto& name : {"A2", "NG3", "NAKAYAMA(3,2)", "NAKAYAMA(2,3)"}) {
    auto r = ring(name);
    SplitMix64 rng(31);
    int used = 0;
    for (int t = 0; t < 20; ++t) {
      auto m = random_module(r, Side::left, rng, {}).module;
      for (std::size_t n = 1; n <= 2; ++n) {
        if (!is_n_torsionfree(m, n)) continue;
        auto c = cosyzygy_embedding(m, n, {4});
        CHECK(c.cert.ok);
        ++used;
      }
    }
    CHECK(used > 0);
  }
}

TEST_CASE("syzygies of modules in the orthogonal class are torsionfree") {
  for (const auto& name : {"A2", "NAKAYAMA(3,2)", "NAKAYAMA(2,3)"}) {
    auto r = ring(name);
    SplitMix64 rng(12);
    for (int t = 0; t < 15; ++t) {
      auto x = random_module(r, Side::left, rng, {}).module;
      auto e = ext_dims(x, regular(r), 2);
      for (std::size_t n = 1; n <= 2; ++n) {
        bool perp = true;
        for (std::size_t i = 1; i <= n; ++i) perp = perp && e[i] == 0;
        if (perp) CHECK(is_n_torsionfree(syzygy(x, n, true), n));
      }
    }
  }
}

TEST_CASE("dual and transpose sequences of a short exact sequence") {
  auto d = ring("DUAL2");
  auto s = simple(d);
  auto socle = hom_space(s, regular(d)).front();
  auto ses = ExactSeq<GF>::from_maps({socle, kernel_cokernel(socle).cokernel.map});
  auto st = star_of_ses(ses);
  CHECK(st.cert.ok);
  CHECK(st.duals.objects[4].dim() == 0);
  CHECK(st.transposes.objects[1].dim() == 0);
  CHECK(st.transposes.objects[2].dim() == 1);
  CHECK(st.transposes.objects[3].dim() == 2);
  CHECK(st.transposes.objects[4].dim() == 1);

  auto a2 = ring("A2");
  auto ps = indecomposable_projectives(a2, Side::left);
  auto p2_to_p1 = hom_space(ps[1], ps[0]).front();
  auto ses2 = ExactSeq<GF>::from_maps({p2_to_p1, kernel_cokernel(p2_to_p1).cokernel.map});
  auto st2 = star_of_ses(ses2);
  CHECK(st2.cert.ok);
  CHECK(st2.duals.objects[1].dim() == 0);
  CHECK(st2.duals.objects[4].dim() == 1);

  auto split = direct_sum(std::vector<Mod<GF>>{s, regular(d)});
  auto st3 = star_of_ses(ExactSeq<GF>::from_maps({split.injections[0], split.projections[1]}));
  CHECK(st3.cert.ok);
  CHECK(st3.duals.objects[4].dim() == 0);

  for (const auto& name : {"A2", "NG3", "NAKAYAMA(3,2)"}) {
    auto r = ring(name);
    SplitMix64 rng(6);
    for (int t = 0; t < 10; ++t) {
      auto c = random_module(r, Side::left, rng, {}).module;
      auto a = random_module(r, Side::left, rng, {}).module;
      auto k = ext1_class_count(c, a);
      auto e = extension_from_cocycle(c, a, rng.below(k + 1));
      CHECK(star_of_ses(e).cert.ok);
    }
  }
}

TEST_CASE("torsionfree compression") {
  auto a2 = ring("A2");
  auto s1 = simple(a2, 0);
  auto tres = truncated_resolution(s1, 1);
  auto c = torsionfree_compress(s1, tres, 1);
  CHECK(c.cert.ok);
  CHECK(projective_dimension(c.seq.objects[1]).proves_at_most(0));

  auto d = ring("DUAL2");
  auto s = simple(d);
  auto c0 = torsionfree_compress(s, ExactSeq<GF>::from_maps({identity_hom(s)}), 0);
  CHECK(c0.cert.ok);
  CHECK(c0.seq.objects[1].dim() == 0);
  CHECK(c0.seq.objects[2] == s);

  auto c1 = torsionfree_compress(s, truncated_resolution(s, 1), 1);
  CHECK(c1.cert.ok);

  auto nk = ring("NAKAYAMA(3,2)");
  for (const auto& m : simple_modules(nk, Side::left)) {
    auto pd = projective_dimension(m);
    if (!pd.is_certified_finite()) continue;
    auto n = static_cast<std::size_t>(pd.value);
    auto cc = torsionfree_compress(m, truncated_resolution(m, n), n);
    CHECK(cc.cert.ok);
  }

  auto ng = ring("NG3");
  CHECK_THROWS_AS(torsionfree_compress(simple(ng), truncated_resolution(simple(ng), 1), 1, {4}), PreconditionError);
}

TEST_CASE("embedding into finite projective dimension") {
  auto d = ring("DUAL2");
  auto s = simple(d);
  auto e = embed_into_finite_pd(s, 0, ExactSeq<GF>::from_maps({identity_hom(s)}));
  CHECK(e.cert.ok);
  CHECK(projective_dimension(e.seq.objects[2]).proves_at_most(0));

  auto a2 = ring("A2");
  auto s1 = simple(a2, 0);
  auto e1 = embed_into_finite_pd(s1, 1, truncated_resolution(s1, 1));
  CHECK(e1.cert.ok);

  auto p = regular(d);
  auto ep = embed_into_finite_pd(p, 0, ExactSeq<GF>::from_maps({identity_hom(p)}));
  CHECK(ep.cert.ok);
}
