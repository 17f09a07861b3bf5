#include "tfl/module.hpp"

#include <sstream>

namespace tfl {

template <class F>
Mod<F>::Mod(RingPtr<F> ring, Side side, std::size_t dim, std::vector<Matrix<F>> action)
    : ring_(std::move(ring)), side_(side), dim_(dim) {
  if (!ring_) throw ModuleError("module without an algebra");
  if (action.size() != ring_->dim())
    throw ModuleError("action list has " + std::to_string(action.size()) + " matrices, algebra has dimension " +
                      std::to_string(ring_->dim()));
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i].rows() != dim || action[i].cols() != dim)
      throw ModuleError("action matrix " + std::to_string(i) + " is not " + std::to_string(dim) + "x" +
                        std::to_string(dim));
    require_same_field(action[i].field(), ring_->field());
  }
  action_ = std::make_shared<const std::vector<Matrix<F>>>(std::move(action));
}

template <class F>
Matrix<F> Mod<F>::act(const Vec<F>& a) const {
  Matrix<F> m(field(), dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i) m.add_scaled((*action_)[i], a[i]);
  return m;
}

template <class F>
Vec<F> Mod<F>::act(const Vec<F>& a, const Vec<F>& x) const {
  const F& f = field();
  Vec<F> out = zero_vec(f, dim_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    auto y = (*action_)[i].apply(x);
    for (std::size_t r = 0; r < dim_; ++r)
      if (!f.is_zero(y[r])) out[r] = f.add(out[r], f.mul(a[i], y[r]));
  }
  return out;
}

template <class F>
ValidationReport validate_module(const Mod<F>& m) {
  ValidationReport rep;
  const auto& a = m.algebra();
  const F& f = m.field();
  if (m.act(a.unit) != Matrix<F>::identity(f, m.dim())) {
    rep.fail("the unit does not act as the identity");
    return rep;
  }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix<F> rhs(f, m.dim(), m.dim());
      for (std::size_t k = 0; k < a.dim; ++k) rhs.add_scaled(m.action(k), a.c(i, j, k));
      if (m.action(i) * m.action(j) != rhs) {
        std::ostringstream os;
        os << "action is not multiplicative at basis pair (i,j)=(" << i << "," << j << ")";
        rep.fail(os.str());
        return rep;
      }
    }
  return rep;
}

template <class F>
ValidationReport validate_hom(const ModHom<F>& h) {
  ValidationReport rep;
  if (!h.source.same_category(h.target)) {
    rep.fail("source and target live over different algebras or sides");
    return rep;
  }
  if (h.matrix.rows() != h.target.dim() || h.matrix.cols() != h.source.dim()) {
    rep.fail("hom matrix has the wrong shape");
    return rep;
  }
  for (std::size_t i = 0; i < h.source.algebra().dim; ++i)
    if (h.matrix * h.source.action(i) != h.target.action(i) * h.matrix) {
      rep.fail("map does not commute with basis element " + std::to_string(i));
      return rep;
    }
  return rep;
}

template <class F>
ExactnessReport<F> ExactSeq<F>::certify() const {
  ExactnessReport<F> rep;
  if (maps.size() + 1 != objects.size()) {
    rep.exact = false;
    rep.failures.push_back("sequence has " + std::to_string(objects.size()) + " objects but " +
                           std::to_string(maps.size()) + " maps");
    return rep;
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    rep.euler_characteristic += (i % 2 ? -1 : 1) * static_cast<long long>(objects[i].dim());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& h = maps[i];
    if (!(h.source == objects[i]) || !(h.target == objects[i + 1])) {
      rep.exact = false;
      rep.failures.push_back("map " + std::to_string(i) + " does not connect its neighbours");
      return rep;
    }
    auto v = validate_hom(h);
    if (!v.ok) {
      rep.exact = false;
      rep.failures.push_back("map " + std::to_string(i) + ": " + v.errors.front());
    }
  }
  for (std::size_t i = 1; i + 1 < objects.size(); ++i) {
    auto image = Subspace<F>::column_space(maps[i - 1].matrix);
    auto kernel = kernel_basis(maps[i].matrix);
    if (!(image == kernel)) {
      rep.exact = false;
      rep.failures.push_back("not exact at position " + std::to_string(i) + " (image dim " +
                             std::to_string(image.dim()) + ", kernel dim " + std::to_string(kernel.dim()) + ")");
    }
  }
  return rep;
}

template <class F>
ExactSeq<F> ExactSeq<F>::from_maps(const std::vector<ModHom<F>>& chain) {
  if (chain.empty()) throw ModuleError("empty chain");
  ExactSeq s;
  const auto& first = chain.front().source;
  const auto& last = chain.back().target;
  auto z0 = zero_module(first.ring(), first.side());
  auto z1 = zero_module(last.ring(), last.side());
  s.objects.push_back(z0);
  s.maps.push_back(zero_hom(z0, first));
  for (const auto& h : chain) {
    s.objects.push_back(h.source);
    s.maps.push_back(h);
  }
  s.objects.push_back(last);
  s.maps.push_back(zero_hom(last, z1));
  s.objects.push_back(z1);
  return s;
}

template <class F>
Mod<F> zero_module(const RingPtr<F>& ring, Side side) {
  return Mod<F>(ring, side, 0, std::vector<Matrix<F>>(ring->dim(), Matrix<F>(ring->field(), 0, 0)));
}

template <class F>
Mod<F> regular_module(const RingPtr<F>& ring, Side side) {
  const auto& a = ring->acting(side);
  return Mod<F>(ring, side, a.dim, a.left_mult);
}

template <class F>
Mod<F> free_module(const RingPtr<F>& ring, std::size_t rank, Side side) {
  std::vector<Mod<F>> copies(rank, regular_module(ring, side));
  if (rank == 0) return zero_module(ring, side);
  return direct_sum(copies).sum;
}

template <class F>
std::vector<Mod<F>> indecomposable_projectives(const RingPtr<F>& ring, Side side) {
  if (!ring->acting(side).has_idempotents())
    throw UnsupportedError("algebra has no primitive idempotents; indecomposable projectives unavailable");
  std::vector<Mod<F>> out;
  for (std::size_t j = 0; j < ring->free_type(); ++j) {
    const auto& s = ring->summand(side, j);
    out.emplace_back(ring, side, s.basis.dim(), s.action);
  }
  return out;
}

template <class F>
std::vector<Mod<F>> simple_modules(const RingPtr<F>& ring, Side side) {
  std::vector<Mod<F>> out;
  for (const auto& p : indecomposable_projectives(ring, side)) out.push_back(semisimple_top(p).module);
  return out;
}

template <class F>
ModHom<F> identity_hom(const Mod<F>& m) {
  return {m, m, Matrix<F>::identity(m.field(), m.dim())};
}

template <class F>
ModHom<F> zero_hom(const Mod<F>& source, const Mod<F>& target) {
  return {source, target, Matrix<F>(source.field(), target.dim(), source.dim())};
}

template <class F>
ModHom<F> compose(const ModHom<F>& second, const ModHom<F>& first) {
  if (first.target.dim() != second.source.dim() || !first.target.same_category(second.source))
    throw ModuleError("composition of non-composable maps");
  return {first.source, second.target, second.matrix * first.matrix};
}

template <class F>
Inclusion<F> submodule(const Mod<F>& m, const Subspace<F>& u) {
  if (u.ambient() != m.dim()) throw ModuleError("subspace has the wrong ambient dimension");
  const F& f = m.field();
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < m.algebra().dim; ++i) {
    Matrix<F> a(f, u.dim(), u.dim());
    for (std::size_t t = 0; t < u.dim(); ++t) {
      auto y = m.action(i).apply(u.vector(t));
      if (!u.contains(y)) throw ModuleError("subspace is not a submodule");
      a.set_column(t, u.coordinates(y));
    }
    action.push_back(std::move(a));
  }
  Mod<F> sub(m.ring(), m.side(), u.dim(), std::move(action));
  return {sub, {sub, m, u.basis().transpose()}};
}

template <class F>
Projection<F> quotient_module(const Mod<F>& m, const Subspace<F>& u) {
  if (u.ambient() != m.dim()) throw ModuleError("subspace has the wrong ambient dimension");
  const F& f = m.field();
  auto keep = u.non_pivots();
  std::vector<std::size_t> pos(m.dim(), static_cast<std::size_t>(-1));
  for (std::size_t q = 0; q < keep.size(); ++q) pos[keep[q]] = q;
  // projection: non-pivot e_j stays, pivot e_j becomes -(its echelon row) on the non-pivots
  Matrix<F> proj(f, keep.size(), m.dim());
  for (std::size_t q = 0; q < keep.size(); ++q) proj(q, keep[q]) = f.one();
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t q = 0; q < keep.size(); ++q) proj(q, u.pivots()[r]) = f.neg(u.basis()(r, keep[q]));
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < m.algebra().dim; ++i) {
    Matrix<F> cols(f, m.dim(), keep.size());
    for (std::size_t q = 0; q < keep.size(); ++q)
      for (std::size_t r = 0; r < m.dim(); ++r) cols(r, q) = m.action(i)(r, keep[q]);
    auto a = proj * cols;
    // invariance: the image of u must vanish in the quotient
    for (std::size_t t = 0; t < u.dim(); ++t)
      if (!is_zero_vec(f, proj.apply(m.action(i).apply(u.vector(t)))))
        throw ModuleError("subspace is not a submodule");
    action.push_back(std::move(a));
  }
  Mod<F> q(m.ring(), m.side(), keep.size(), std::move(action));
  return {q, {m, q, std::move(proj)}};
}

template <class F>
Subspace<F> generated_submodule(const Mod<F>& m, const std::vector<Vec<F>>& gens) {
  // A*v is already a submodule, so one pass over the basis of A suffices
  std::vector<Vec<F>> vecs;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < m.algebra().dim; ++i) vecs.push_back(m.action(i).apply(g));
  return Subspace<F>::span(m.field(), m.dim(), vecs);
}

template <class F>
Subspace<F> radical_submodule(const Mod<F>& m) {
  const auto& a = m.algebra();
  if (!a.radical) throw UnsupportedError("radical unavailable for this algebra");
  std::vector<Vec<F>> vecs;
  for (std::size_t t = 0; t < a.radical->dim(); ++t) {
    auto r = m.act(a.radical->vector(t));
    for (std::size_t j = 0; j < m.dim(); ++j) vecs.push_back(r.column(j));
  }
  return Subspace<F>::span(m.field(), m.dim(), vecs);
}

template <class F>
Projection<F> semisimple_top(const Mod<F>& m) {
  return quotient_module(m, radical_submodule(m));
}

template <class F>
KernelCokernel<F> kernel_cokernel(const ModHom<F>& h) {
  auto image = Subspace<F>::column_space(h.matrix);
  return {submodule(h.source, kernel_basis(h.matrix)), submodule(h.target, image), quotient_module(h.target, image)};
}

template <class F>
DirectSum<F> direct_sum(const std::vector<Mod<F>>& ms) {
  if (ms.empty()) throw ModuleError("direct sum of an empty list");
  const auto& first = ms.front();
  std::size_t total = 0;
  for (const auto& m : ms) {
    if (!m.same_category(first)) throw ModuleError("direct sum of modules over different algebras or sides");
    total += m.dim();
  }
  const F& f = first.field();
  std::vector<Matrix<F>> action(first.algebra().dim, Matrix<F>(f, total, total));
  std::size_t off = 0;
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < action.size(); ++i) action[i].set_block(off, off, m.action(i));
    off += m.dim();
  }
  DirectSum<F> out;
  out.sum = Mod<F>(first.ring(), first.side(), total, std::move(action));
  off = 0;
  for (const auto& m : ms) {
    Matrix<F> inj(f, total, m.dim()), proj(f, m.dim(), total);
    for (std::size_t t = 0; t < m.dim(); ++t) {
      inj(off + t, t) = f.one();
      proj(t, off + t) = f.one();
    }
    out.injections.push_back({m, out.sum, std::move(inj)});
    out.projections.push_back({out.sum, m, std::move(proj)});
    off += m.dim();
  }
  return out;
}

template <class F>
Pushout<F> pushout(const ModHom<F>& f, const ModHom<F>& g) {
  if (!(f.source == g.source)) throw ModuleError("pushout maps have different sources");
  auto sum = direct_sum(std::vector<Mod<F>>{f.target, g.target});
  const F& fld = f.source.field();
  std::vector<Vec<F>> rel;
  for (std::size_t j = 0; j < f.source.dim(); ++j) {
    Vec<F> v = f.matrix.column(j);
    auto w = g.matrix.column(j);
    for (auto& e : w) v.push_back(fld.neg(e));
    rel.push_back(std::move(v));
  }
  auto q = quotient_module(sum.sum, Subspace<F>::span(fld, sum.sum.dim(), rel));
  Pushout<F> out;
  out.object = q.module;
  out.from_y = compose(q.map, sum.injections[0]);
  out.from_z = compose(q.map, sum.injections[1]);
  out.quotient = std::move(q);
  return out;
}

template <class F>
std::vector<ModHom<F>> hom_space_by_intertwiners(const Mod<F>& m, const Mod<F>& n) {
  if (!m.same_category(n)) throw ModuleError("Hom between different algebras or sides");
  const F& f = m.field();
  const std::size_t nm = m.dim(), nn = n.dim(), d = m.algebra().dim;
  Matrix<F> eq(f, d * nn * nm, nn * nm);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& am = m.action(i);
    const auto& an = n.action(i);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) {
        std::size_t row = (i * nn + r) * nm + c;
        // (X am)(r,c) - (an X)(r,c)
        for (std::size_t s = 0; s < nm; ++s)
          if (!f.is_zero(am(s, c))) eq(row, r * nm + s) = f.add(eq(row, r * nm + s), am(s, c));
        for (std::size_t s = 0; s < nn; ++s)
          if (!f.is_zero(an(r, s))) eq(row, s * nm + c) = f.sub(eq(row, s * nm + c), an(r, s));
      }
  }
  auto k = kernel_basis(eq);
  std::vector<ModHom<F>> out;
  for (std::size_t t = 0; t < k.dim(); ++t) {
    Matrix<F> x(f, nn, nm);
    auto v = k.vector(t);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) x(r, c) = v[r * nm + c];
    out.push_back({m, n, std::move(x)});
  }
  return out;
}

namespace {

template <class F>
Vec<F> flatten(const Matrix<F>& m) {
  return m.data();
}

}  // namespace

template <class F>
Vec<F> StarDual<F>::coordinates(const Matrix<F>& phi) const {
  auto v = flatten(phi);
  if (!flat.contains(v)) throw ModuleError("map is not in the dual basis span");
  return flat.coordinates(v);
}

template <class F>
StarDual<F> star_dual(const Mod<F>& m) {
  auto reg = regular_module(m.ring(), m.side());
  auto homs = hom_space(m, reg);
  const auto& lam = m.algebra();
  const F& f = m.field();
  StarDual<F> out;
  std::vector<Vec<F>> flats;
  for (auto& h : homs) {
    flats.push_back(flatten(h.matrix));
    out.basis.push_back(std::move(h.matrix));
  }
  out.flat = Subspace<F>::span(f, lam.dim * m.dim(), flats);
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < lam.dim; ++i) {
    Matrix<F> a(f, out.basis.size(), out.basis.size());
    for (std::size_t t = 0; t < out.basis.size(); ++t)
      a.set_column(t, out.coordinates(lam.right_mult[i] * out.basis[t]));
    action.push_back(std::move(a));
  }
  out.dual = Mod<F>(m.ring(), opposite(m.side()), out.basis.size(), std::move(action));
  return out;
}

template <class F>
ModHom<F> star_hom(const ModHom<F>& h, const StarDual<F>& source_star, const StarDual<F>& target_star) {
  const F& f = h.source.field();
  Matrix<F> m(f, source_star.dual.dim(), target_star.dual.dim());
  for (std::size_t t = 0; t < target_star.basis.size(); ++t)
    m.set_column(t, source_star.coordinates(target_star.basis[t] * h.matrix));
  return {target_star.dual, source_star.dual, std::move(m)};
}

template <class F>
ModHom<F> evaluation_hom(const Mod<F>& m) {
  auto s = star_dual(m);
  auto ss = star_dual(s.dual);
  const F& f = m.field();
  const std::size_t d = m.algebra().dim;
  Matrix<F> ev(f, ss.dual.dim(), m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Matrix<F> phi(f, d, s.basis.size());
    for (std::size_t t = 0; t < s.basis.size(); ++t) phi.set_column(t, s.basis[t].column(j));
    ev.set_column(j, ss.coordinates(phi));
  }
  return {m, ss.dual, std::move(ev)};
}

template <class F>
Mod<F> vector_space_dual(const Mod<F>& m) {
  std::vector<Matrix<F>> action;
  for (const auto& a : m.actions()) action.push_back(a.transpose());
  return Mod<F>(m.ring(), opposite(m.side()), m.dim(), std::move(action));
}

template <class F>
ModHom<F> vector_space_dual_hom(const ModHom<F>& h, const Mod<F>& dual_source, const Mod<F>& dual_target) {
  return {dual_target, dual_source, h.matrix.transpose()};
}

const char* to_string(PostStep s) {
  switch (s) {
    case PostStep::none: return "none";
    case PostStep::syzygy: return "syzygy";
    case PostStep::transpose: return "transpose";
    case PostStep::star: return "star";
    case PostStep::extension: return "extension";
  }
  return "?";
}

#define TFL_INSTANTIATE(F)                                                                                   \
  template class Mod<F>;                                                                                     \
  template struct ExactSeq<F>;                                                                               \
  template ValidationReport validate_module(const Mod<F>&);                                                  \
  template ValidationReport validate_hom(const ModHom<F>&);                                                  \
  template Mod<F> zero_module(const RingPtr<F>&, Side);                                                      \
  template Mod<F> regular_module(const RingPtr<F>&, Side);                                                   \
  template Mod<F> free_module(const RingPtr<F>&, std::size_t, Side);                                         \
  template std::vector<Mod<F>> indecomposable_projectives(const RingPtr<F>&, Side);                          \
  template std::vector<Mod<F>> simple_modules(const RingPtr<F>&, Side);                                      \
  template ModHom<F> identity_hom(const Mod<F>&);                                                            \
  template ModHom<F> zero_hom(const Mod<F>&, const Mod<F>&);                                                 \
  template ModHom<F> compose(const ModHom<F>&, const ModHom<F>&);                                            \
  template Inclusion<F> submodule(const Mod<F>&, const Subspace<F>&);                                        \
  template Projection<F> quotient_module(const Mod<F>&, const Subspace<F>&);                                 \
  template Subspace<F> generated_submodule(const Mod<F>&, const std::vector<Vec<F>>&);                       \
  template Subspace<F> radical_submodule(const Mod<F>&);                                                     \
  template Projection<F> semisimple_top(const Mod<F>&);                                                      \
  template KernelCokernel<F> kernel_cokernel(const ModHom<F>&);                                              \
  template DirectSum<F> direct_sum(const std::vector<Mod<F>>&);                                              \
  template Pushout<F> pushout(const ModHom<F>&, const ModHom<F>&);                                           \
  template std::vector<ModHom<F>> hom_space_by_intertwiners(const Mod<F>&, const Mod<F>&);                   \
  template struct StarDual<F>;                                                                               \
  template StarDual<F> star_dual(const Mod<F>&);                                                             \
  template ModHom<F> star_hom(const ModHom<F>&, const StarDual<F>&, const StarDual<F>&);                     \
  template ModHom<F> evaluation_hom(const Mod<F>&);                                                          \
  template Mod<F> vector_space_dual(const Mod<F>&);                                                          \
  template ModHom<F> vector_space_dual_hom(const ModHom<F>&, const Mod<F>&, const Mod<F>&);

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl
