#include "tfl/constructions.hpp"

namespace tfl {

namespace {

/// e x for an algebra element e acting on a projective in factored coordinates.
template <class F>
Vec<F> act_element(const Projective<F>& p, const Vec<F>& e, const Vec<F>& x) {
  const F& f = p.ring()->field();
  Vec<F> out = zero_vec(f, p.dim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (f.is_zero(e[i])) continue;
    auto y = p.act(i, x);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = f.add(out[r], f.mul(e[i], y[r]));
  }
  return out;
}

/// Map target -> q.module induced on the quotient by a map `ambient -> target` that kills the kernel.
template <class F>
ModHom<F> descend(const Projection<F>& q, const ModHom<F>& from_ambient) {
  const F& f = from_ambient.source.field();
  auto section = solve_columns(q.map.matrix, Matrix<F>::identity(f, q.module.dim()));
  return {q.module, from_ambient.target, from_ambient.matrix * section};
}

template <class F>
void require_exact(Certificate& cert, const ExactSeq<F>& s, const std::string& what) {
  auto rep = s.certify();
  cert.require(rep.exact, what + " is exact" + (rep.exact ? "" : ": " + rep.failures.front()));
}

template <class F>
void require_inf_torsionfree(Certificate& cert, const Mod<F>& m, const AnalysisOptions& opts,
                             const std::string& what) {
  Analysis<F> a(m, opts);
  auto flag = inf_torsionfree(a);
  cert.require(flag.value && flag.certified, what + " is infinity-torsionfree (" + flag.note + ")");
}

template <class F>
bool certified_inf_torsionfree(const Mod<F>& m, const AnalysisOptions& opts) {
  Analysis<F> a(m, opts);
  auto flag = inf_torsionfree(a);
  return flag.value && flag.certified;
}

}  // namespace

template <class F>
Construction<F> cosyzygy_embedding(const Mod<F>& m, std::size_t n, AnalysisOptions opts) {
  if (n == 0) throw std::invalid_argument("cosyzygy embedding needs n >= 1");
  Analysis<F> am(m, opts);
  if (!is_n_torsionfree(am, n))
    throw PreconditionError("module is not " + std::to_string(n) + "-torsionfree");
  const F& f = m.field();
  bool minimal = supports_minimal(m);
  auto pres = presentation(m, minimal);
  const auto& p0 = pres.relations.target;
  auto mstar = star_dual(m);
  // π* : M* -> P0*, φ ↦ (φ(generator_l))_l
  auto p0star = p0.star();
  std::vector<Vec<F>> pi_star;
  for (const auto& phi : mstar.basis) {
    Vec<F> w = zero_vec(f, p0star.dim());
    for (std::size_t l = 0; l < p0.rank(); ++l) p0star.add_component(w, l, phi.apply(pres.generators[l]));
    pi_star.push_back(std::move(w));
  }
  Resolution<F> q(mstar.dual, supports_minimal(mstar.dual));
  const auto& q0 = q.term(0);
  ProjMap<F> h{q0, p0star, {}};
  for (const auto& g : q.cover_generators(0)) {
    Vec<F> w = zero_vec(f, p0star.dim());
    for (std::size_t t = 0; t < g.size(); ++t)
      if (!f.is_zero(g[t]))
        for (std::size_t r = 0; r < w.size(); ++r) w[r] = f.add(w[r], f.mul(g[t], pi_star[t][r]));
    std::vector<Vec<F>> row;
    for (std::size_t k = 0; k < p0star.rank(); ++k) row.push_back(p0star.component(w, k));
    h.entries.push_back(std::move(row));
  }
  auto u = h.star();  // P0 -> Q0*
  auto section = solve_columns(pres.augmentation, Matrix<F>::identity(f, m.dim()));
  std::vector<ModHom<F>> chain;
  auto q0star = q0.star().as_module();
  chain.push_back({m, q0star, u.dense() * section});
  for (std::size_t i = 1; i < n; ++i) {
    auto d = q.differential(i).star();
    chain.push_back({d.source.as_module(), d.target.as_module(), d.dense()});
  }
  auto kc = kernel_cokernel(chain.back());
  chain.push_back(kc.cokernel.map);
  Construction<F> out{ExactSeq<F>::from_maps(chain), {}};
  require_exact(out.cert, out.seq, "0 -> M -> P_{n-1} -> ... -> P_0 -> A -> 0");
  const auto& a = kc.cokernel.module;
  auto e = ext_dims(a, regular_module(a.ring(), a.side()), n);
  bool perp = true;
  for (std::size_t i = 1; i <= n; ++i) perp = perp && e[i] == 0;
  out.cert.require(perp, "A lies in the left orthogonal class up to degree " + std::to_string(n));
  if (minimal) {
    // Schanuel: M ≅ Ω^n A ⊕ projective, so the minimal syzygy is no larger than M
    auto om = syzygy(a, n, true);
    out.cert.require(om.dim() <= m.dim(), "minimal n-th syzygy of A is a summand-sized piece of M");
  }
  return out;
}

template <class F>
SesStar<F> star_of_ses(const ExactSeq<F>& s) {
  if (s.objects.size() != 5) throw ModuleError("star_of_ses expects 0 -> A -> B -> C -> 0");
  if (!s.certify().exact) throw ModuleError("input sequence is not exact");
  const auto& A = s.objects[1];
  const auto& B = s.objects[2];
  const auto& C = s.objects[3];
  const auto& fmap = s.maps[1];
  const auto& beta = s.maps[2];
  const F& fld = A.field();
  SesStar<F> out;

  auto sa = star_dual(A), sb = star_dual(B), sc = star_dual(C);
  auto beta_star = star_hom(beta, sb, sc);
  auto f_star = star_hom(fmap, sa, sb);
  auto kc = kernel_cokernel(f_star);
  out.duals = ExactSeq<F>::from_maps({beta_star, f_star, kc.cokernel.map});
  require_exact(out.cert, out.duals, "0 -> C* -> B* -> A* -> Coker f* -> 0");

  // horseshoe presentation of B from presentations of A and C
  auto pa = presentation(A, supports_minimal(A));
  auto pc = presentation(C, supports_minimal(C));
  const auto& p0a = pa.relations.target;
  const auto& p0c = pc.relations.target;
  const auto& p1a = pa.relations.source;
  const auto& p1c = pc.relations.source;
  const auto& ring = A.ring();
  auto join = [](std::vector<std::size_t> x, const std::vector<std::size_t>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  Projective<F> p0b(ring, A.side(), join(p0a.types(), p0c.types()));
  Projective<F> p1b(ring, A.side(), join(p1a.types(), p1c.types()));
  std::vector<Vec<F>> bgen;
  for (const auto& g : pa.generators) bgen.push_back(fmap(g));
  std::vector<Vec<F>> lifted;  // σ(generator of P0C) in B
  for (std::size_t l = 0; l < p0c.rank(); ++l) {
    auto b = solve_columns(beta.matrix, Matrix<F>::from_columns(fld, C.dim(), {pc.generators[l]})).column(0);
    b = B.act(p0c.idempotent(l), b);
    lifted.push_back(b);
    bgen.push_back(b);
  }
  Matrix<F> pi_b(fld, B.dim(), p0b.dim());
  for (std::size_t l = 0; l < p0b.rank(); ++l) {
    const auto& sm = p0b.summand(l);
    for (std::size_t t = 0; t < sm.basis.dim(); ++t) pi_b.set_column(p0b.offset(l) + t, B.act(sm.basis.vector(t), bgen[l]));
  }
  ProjMap<F> gb{p1b, p0b, {}};
  const auto zero_lam = zero_vec(fld, ring->dim());
  for (std::size_t l = 0; l < p1a.rank(); ++l) {
    std::vector<Vec<F>> row(pa.relations.entries[l]);
    for (std::size_t k = 0; k < p0c.rank(); ++k) row.push_back(zero_lam);
    gb.entries.push_back(std::move(row));
  }
  std::vector<Vec<F>> a_of;  // a_l ∈ A with f(a_l) = σ(g_C(y_l))
  for (std::size_t l = 0; l < p1c.rank(); ++l) {
    Vec<F> sw = zero_vec(fld, B.dim());
    for (std::size_t k = 0; k < p0c.rank(); ++k) {
      auto z = B.act(pc.relations.entries[l][k], lifted[k]);
      for (std::size_t r = 0; r < z.size(); ++r) sw[r] = fld.add(sw[r], z[r]);
    }
    auto a = solve_columns(fmap.matrix, Matrix<F>::from_columns(fld, B.dim(), {sw})).column(0);
    a_of.push_back(a);
    auto z = solve_columns(pa.augmentation, Matrix<F>::from_columns(fld, A.dim(), {a})).column(0);
    z = act_element(p0a, p1c.idempotent(l), z);
    std::vector<Vec<F>> row;
    for (std::size_t k = 0; k < p0a.rank(); ++k) {
      auto c = p0a.component(z, k);
      for (auto& x : c) x = fld.neg(x);
      row.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < p0c.rank(); ++k) row.push_back(pc.relations.entries[l][k]);
    gb.entries.push_back(std::move(row));
  }
  auto gb_dense = gb.dense();
  out.cert.require((pi_b * gb_dense).is_zero() && rank(pi_b) == B.dim() &&
                       Subspace<F>::column_space(gb_dense) == kernel_basis(pi_b),
                   "horseshoe presentation P1 -> P0 -> B -> 0 is exact");

  auto tr_of = [](const ProjMap<F>& g) {
    auto gs = g.star();
    return quotient_module(gs.target.as_module(), Subspace<F>::column_space(gs.dense()));
  };
  auto tra = tr_of(pa.relations);
  auto trb = tr_of(gb);
  auto trc = tr_of(pc.relations);
  auto p1bs = p1b.star();
  auto p1cs = p1c.star();
  auto p1as = p1a.star();
  // Tr C -> Tr B from the inclusion of P1C* as the second block
  Matrix<F> incl(fld, p1bs.dim(), p1cs.dim());
  for (std::size_t r = 0; r < p1cs.dim(); ++r) incl(p1as.dim() + r, r) = fld.one();
  auto c_to_b = descend(trc, ModHom<F>{p1cs.as_module(), trb.module, trb.map.matrix * incl});
  Matrix<F> proj(fld, p1as.dim(), p1bs.dim());
  for (std::size_t r = 0; r < p1as.dim(); ++r) proj(r, r) = fld.one();
  auto b_to_a = descend(trb, ModHom<F>{p1bs.as_module(), tra.module, tra.map.matrix * proj});
  // connecting map A* -> Tr C: φ ↦ class of (y_l ↦ -φ(a_l))
  Matrix<F> conn(fld, trc.module.dim(), sa.dual.dim());
  for (std::size_t t = 0; t < sa.basis.size(); ++t) {
    Vec<F> w = zero_vec(fld, p1cs.dim());
    for (std::size_t l = 0; l < p1c.rank(); ++l) {
      auto v = sa.basis[t].apply(a_of[l]);
      for (auto& x : v) x = fld.neg(x);
      p1cs.add_component(w, l, v);
    }
    conn.set_column(t, trc.map.matrix.apply(w));
  }
  auto cok_to_c = descend(kc.cokernel, ModHom<F>{sa.dual, trc.module, conn});
  out.transposes = ExactSeq<F>::from_maps({cok_to_c, c_to_b, b_to_a});
  require_exact(out.cert, out.transposes, "0 -> Coker f* -> Tr C -> Tr B -> Tr A -> 0");
  return out;
}

template <class F>
Construction<F> projective_bridge(const ExactSeq<F>& s, AnalysisOptions opts) {
  if (s.objects.size() != 6) throw ModuleError("expected 0 -> M -> T1 -> T0 -> A -> 0");
  if (!s.certify().exact) throw ModuleError("input sequence is not exact");
  const auto& t1 = s.objects[2];
  const auto& t0 = s.objects[3];
  if (!certified_inf_torsionfree(t1, opts) || !certified_inf_torsionfree(t0, opts))
    throw PreconditionError("middle terms are not certified infinity-torsionfree");
  const auto& i = s.maps[1];
  const auto& fmap = s.maps[2];
  const auto& p = s.maps[3];
  const F& fld = t1.field();

  auto emb = cosyzygy_embedding(t1, 1, opts);
  const auto& j = emb.seq.maps[1];  // T1 -> P
  auto kc = kernel_cokernel(fmap);
  const auto& im = kc.image;
  ModHom<F> fbar{t1, im.module, solve_columns(im.map.matrix, fmap.matrix)};
  auto po1 = pushout(j, fbar);  // B
  auto po2 = pushout(im.map, po1.from_z);  // T
  ModHom<F> m_to_p = compose(j, i);
  ModHom<F> p_to_t = compose(po2.from_z, po1.from_y);
  Matrix<F> t0b_to_a(fld, p.target.dim(), t0.dim() + po1.object.dim());
  t0b_to_a.set_block(0, 0, p.matrix);
  auto t_to_a = descend(po2.quotient, ModHom<F>{po2.quotient.map.source, p.target, t0b_to_a});
  Construction<F> out{ExactSeq<F>::from_maps({m_to_p, p_to_t, t_to_a}), emb.cert};
  require_exact(out.cert, out.seq, "0 -> M -> P -> T -> A -> 0");
  require_inf_torsionfree(out.cert, po2.object, opts, "T");
  return out;
}

template <class F>
ExactSeq<F> truncated_resolution(const Mod<F>& m, std::size_t n) {
  Resolution<F> res(m, supports_minimal(m));
  std::vector<ModHom<F>> chain;
  if (n == 0) return ExactSeq<F>::from_maps({identity_hom(m)});
  const auto& om = res.syzygy(n);
  chain.push_back({om, res.term(n - 1).as_module(), res.syzygy_embedding(n)});
  for (std::size_t i = n - 1; i >= 1; --i)
    chain.push_back({res.term(i).as_module(), res.term(i - 1).as_module(), res.differential(i).dense()});
  chain.push_back({res.term(0).as_module(), m, res.cover_map(0)});
  return ExactSeq<F>::from_maps(chain);
}

namespace {

/// 0 -> H -> T -> M -> 0 from the resolution T_k -> ... -> T_0 -> M given as maps d[0] = T_k -> T_{k-1},
/// ..., d[k-1] = T_1 -> T_0, d[k] = T_0 -> M. Returns the two maps H -> T, T -> M.
template <class F>
std::pair<ModHom<F>, ModHom<F>> compress(const std::vector<ModHom<F>>& d, AnalysisOptions opts) {
  const std::size_t k = d.size() - 1;
  const auto& eps = d[k];
  if (k == 0) {
    auto z = zero_module(eps.target.ring(), eps.target.side());
    return {zero_hom(z, eps.target), eps};
  }
  const auto& d1 = d[k - 1];
  auto kc = kernel_cokernel(d1);
  const auto& kin = kc.image;  // K ⊂ T_0
  ModHom<F> d1bar{d1.source, kin.module, solve_columns(kin.map.matrix, d1.matrix)};
  ModHom<F> h, t;
  if (k == 1) {
    auto z = zero_module(d1.source.ring(), d1.source.side());
    h = zero_hom(z, d1.source);
    t = d1bar;
  } else {
    std::vector<ModHom<F>> sub(d.begin(), d.begin() + (k - 1));
    sub.push_back(d1bar);
    std::tie(h, t) = compress(sub, opts);
  }
  auto bridge = projective_bridge(ExactSeq<F>::from_maps({h, compose(kin.map, t), eps}), opts);
  if (!bridge.cert.ok) throw std::logic_error("bridge construction failed: " + bridge.cert.failures.front());
  const auto& b = bridge.seq.maps[2];  // P -> T
  const auto& c = bridge.seq.maps[3];  // T -> M
  auto img = kernel_cokernel(b).image;
  return {img.map, c};
}

}  // namespace

template <class F>
Construction<F> torsionfree_compress(const Mod<F>& m, const ExactSeq<F>& tres, std::size_t n, AnalysisOptions opts) {
  if (tres.objects.size() != n + 4) throw ModuleError("resolution does not have length " + std::to_string(n));
  if (!(tres.objects[n + 2] == m)) throw ModuleError("resolution does not end in the given module");
  if (!tres.certify().exact) throw ModuleError("resolution is not exact");
  for (std::size_t i = 1; i <= n + 1; ++i)
    if (!certified_inf_torsionfree(tres.objects[i], opts))
      throw PreconditionError("resolution term " + std::to_string(n + 1 - i) + " is not certified infinity-torsionfree");
  std::vector<ModHom<F>> d(tres.maps.begin() + 1, tres.maps.end() - 1);
  auto [h, t] = compress(d, opts);
  Construction<F> out{ExactSeq<F>::from_maps({h, t}), {}};
  require_exact(out.cert, out.seq, "0 -> H -> T -> M -> 0");
  AnalysisOptions pd_opts = opts;
  pd_opts.bound = std::max<int>(opts.bound, static_cast<int>(n));
  auto pd = projective_dimension(h.source, pd_opts.bound);
  int limit = static_cast<int>(n) - 1;
  bool pd_ok = h.source.dim() == 0 || pd.proves_at_most(std::max(limit, 0));
  if (n == 0) pd_ok = h.source.dim() == 0;
  out.cert.require(pd_ok, "pd H <= n-1 (pd H = " + pd.to_string() + ")");
  require_inf_torsionfree(out.cert, t.source, opts, "T");
  return out;
}

template <class F>
Construction<F> embed_into_finite_pd(const Mod<F>& m, std::size_t n, const ExactSeq<F>& tres, AnalysisOptions opts) {
  auto c = torsionfree_compress(m, tres, n, opts);
  if (!c.cert.ok) return {c.seq, c.cert};
  const auto& t_to_m = c.seq.maps[2];
  const auto& tprime = t_to_m.source;
  Construction<F> out{{}, c.cert};
  const F& fld = m.field();
  if (tprime.dim() == 0) {
    auto z = zero_module(m.ring(), m.side());
    out.seq = ExactSeq<F>::from_maps({identity_hom(m), zero_hom(m, z)});
  } else {
    auto e = cosyzygy_embedding(tprime, 1, opts);
    for (const auto& f : e.cert.failures) out.cert.require(false, f);
    const auto& j = e.seq.maps[1];
    const auto& q = e.seq.maps[2];
    auto po = pushout(j, t_to_m);  // N
    Matrix<F> pm_to_t(fld, q.target.dim(), j.target.dim() + m.dim());
    pm_to_t.set_block(0, 0, q.matrix);
    auto n_to_t = descend(po.quotient, ModHom<F>{po.quotient.map.source, q.target, pm_to_t});
    out.seq = ExactSeq<F>::from_maps({po.from_z, n_to_t});
  }
  require_exact(out.cert, out.seq, "0 -> M -> N -> T -> 0");
  const auto& nmod = out.seq.objects[2];
  const auto& tmod = out.seq.objects[3];
  auto pd = projective_dimension(nmod, std::max<int>(opts.bound, static_cast<int>(n)));
  out.cert.require(nmod.dim() == 0 || pd.proves_at_most(static_cast<int>(n)), "pd N <= n (pd N = " + pd.to_string() + ")");
  auto e1 = ext_dims(tmod, regular_module(tmod.ring(), tmod.side()), 1);
  out.cert.require(e1[1] == 0, "Ext^1(T, A) = 0");
  require_inf_torsionfree(out.cert, tmod, opts, "T");
  return out;
}

#define TFL_INSTANTIATE(F)                                                                                   \
  template Construction<F> cosyzygy_embedding(const Mod<F>&, std::size_t, AnalysisOptions);                  \
  template SesStar<F> star_of_ses(const ExactSeq<F>&);                                                       \
  template Construction<F> projective_bridge(const ExactSeq<F>&, AnalysisOptions);                           \
  template Construction<F> torsionfree_compress(const Mod<F>&, const ExactSeq<F>&, std::size_t, AnalysisOptions); \
  template Construction<F> embed_into_finite_pd(const Mod<F>&, std::size_t, const ExactSeq<F>&, AnalysisOptions); \
  template ExactSeq<F> truncated_resolution(const Mod<F>&, std::size_t);

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl
