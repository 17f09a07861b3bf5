#include "tfl/resolution.hpp"

namespace tfl {

namespace {

template <class F>
struct Ext1Classes {
  Resolution<F> res;
  Subspace<F> classes;  // echelon representatives in ⊕_l e_l a, ambient a^{rank P_1}
};

template <class F>
Ext1Classes<F> ext1_classes(const Mod<F>& c, const Mod<F>& a) {
  Ext1Classes<F> out{Resolution<F>(c, supports_minimal(c)), {}};
  const F& f = c.field();
  auto cd0 = cochain_degree(out.res, a, 0);
  auto cd1 = cochain_degree(out.res, a, 1);
  auto bounds = Subspace<F>::column_space(cd0.coboundary);
  auto zk = kernel_basis(cd1.coboundary);
  std::vector<Vec<F>> reps;
  for (std::size_t t = 0; t < zk.dim(); ++t) reps.push_back(bounds.reduce(cd1.basis.apply(zk.vector(t))));
  out.classes = Subspace<F>::span(f, cd1.basis.rows(), reps);
  return out;
}

}  // namespace

template <class F>
std::size_t ext1_class_count(const Mod<F>& c, const Mod<F>& a) {
  return ext1_classes(c, a).classes.dim();
}

template <class F>
ExactSeq<F> extension_from_cocycle(const Mod<F>& c, const Mod<F>& a, std::size_t class_index) {
  if (!c.same_category(a)) throw ModuleError("extension of modules over different algebras or sides");
  if (class_index == 0) {
    auto sum = direct_sum(std::vector<Mod<F>>{a, c});
    return ExactSeq<F>::from_maps({sum.injections[0], sum.projections[1]});
  }
  auto data = ext1_classes(c, a);
  if (class_index > data.classes.dim())
    throw std::out_of_range("extension class index " + std::to_string(class_index) + " out of range (Ext^1 has dim " +
                            std::to_string(data.classes.dim()) + ")");
  const F& f = c.field();
  auto& res = data.res;
  auto y = data.classes.vector(class_index - 1);
  const auto& p1 = res.term(1);
  const auto& omega = res.syzygy(1);
  // cocycle on P_1 factors through Ω c
  auto section = solve_columns(res.cover_map(1), Matrix<F>::identity(f, omega.dim()));
  Matrix<F> h(f, a.dim(), omega.dim());
  for (std::size_t j = 0; j < omega.dim(); ++j) {
    auto s = section.column(j);
    Vec<F> col = zero_vec(f, a.dim());
    for (std::size_t l = 0; l < p1.rank(); ++l) {
      Vec<F> yl(y.begin() + l * a.dim(), y.begin() + (l + 1) * a.dim());
      auto z = a.act(p1.component(s, l), yl);
      for (std::size_t r = 0; r < a.dim(); ++r) col[r] = f.add(col[r], z[r]);
    }
    h.set_column(j, col);
  }
  auto p0 = res.term(0).as_module();
  ModHom<F> incl{omega, p0, res.syzygy_embedding(1)};
  ModHom<F> rep{omega, a, std::move(h)};
  auto po = pushout(incl, rep);
  // E -> c induced by (augmentation, 0)
  Matrix<F> aug(f, c.dim(), p0.dim() + a.dim());
  aug.set_block(0, 0, res.cover_map(0));
  auto lift = solve_columns(po.quotient.map.matrix, Matrix<F>::identity(f, po.object.dim()));
  ModHom<F> to_c{po.object, c, aug * lift};
  return ExactSeq<F>::from_maps({po.from_z, to_c});
}

namespace {

template <class F>
Mod<F> random_cokernel(const RingPtr<F>& ring, Side side, SplitMix64& rng, const RandomModuleParams& params) {
  const auto& lam = ring->acting(side);
  const F& f = ring->field();
  std::size_t a = rng.between(0, params.max_source_rank);
  std::size_t b = rng.between(1, std::max<std::size_t>(1, params.max_target_rank));
  std::vector<std::size_t> free_a(a, ring->free_type()), free_b(b, ring->free_type());
  ProjMap<F> map{Projective<F>(ring, side, free_a), Projective<F>(ring, side, free_b), {}};
  auto draw = [&](std::uint64_t n) { return rng.below(n); };
  for (std::size_t l = 0; l < a; ++l) {
    std::vector<Vec<F>> row;
    for (std::size_t k = 0; k < b; ++k) {
      Vec<F> x(lam.dim);
      for (auto& e : x) e = f.random(draw);
      // half of the entries are pushed into the radical so cokernels are not mostly free or zero
      bool into_radical = rng.below(2) == 1;
      if (into_radical && lam.radical) {
        auto rest = lam.radical->reduce(x);
        for (std::size_t i = 0; i < lam.dim; ++i) x[i] = f.sub(x[i], rest[i]);
      }
      row.push_back(std::move(x));
    }
    map.entries.push_back(std::move(row));
  }
  auto target = map.target.as_module();
  return quotient_module(target, Subspace<F>::column_space(map.dense())).module;
}

}  // namespace

template <class F>
RandomModule<F> random_module(const RingPtr<F>& ring, Side side, SplitMix64& rng, const RandomModuleParams& params) {
  RandomModule<F> out;
  if (!params.post_process) {
    out.module = random_cokernel(ring, side, rng, params);
    return out;
  }
  out.step = static_cast<PostStep>(rng.below(5));
  switch (out.step) {
    case PostStep::none:
      out.module = random_cokernel(ring, side, rng, params);
      break;
    case PostStep::syzygy: {
      auto base = random_cokernel(ring, side, rng, params);
      out.module = syzygy(base, 1, supports_minimal(base));
      break;
    }
    case PostStep::transpose:
      out.module = transpose(random_cokernel(ring, opposite(side), rng, params)).module;
      break;
    case PostStep::star:
      out.module = star_dual(random_cokernel(ring, opposite(side), rng, params)).dual;
      break;
    case PostStep::extension: {
      auto c = random_cokernel(ring, side, rng, params);
      auto a = random_cokernel(ring, side, rng, params);
      auto count = ext1_class_count(c, a);
      auto idx = rng.below(count + 1);
      out.module = extension_from_cocycle(c, a, idx).objects[2];
      break;
    }
  }
  return out;
}

#define TFL_INSTANTIATE(F)                                                                       \
  template std::size_t ext1_class_count(const Mod<F>&, const Mod<F>&);                           \
  template ExactSeq<F> extension_from_cocycle(const Mod<F>&, const Mod<F>&, std::size_t);        \
  template RandomModule<F> random_module(const RingPtr<F>&, Side, SplitMix64&, const RandomModuleParams&);

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl
