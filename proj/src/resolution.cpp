#include "tfl/resolution.hpp"

namespace tfl {

template <class F>
Projective<F>::Projective(RingPtr<F> ring, Side side, std::vector<std::size_t> types)
    : ring_(std::move(ring)), side_(side), types_(std::move(types)) {
  for (auto t : types_) {
    if (t > ring_->free_type()) throw ModuleError("unknown projective summand type");
    offsets_.push_back(offsets_.back() + ring_->summand(side_, t).basis.dim());
  }
}

template <class F>
Vec<F> Projective<F>::component(const Vec<F>& x, std::size_t slot) const {
  const auto& s = summand(slot);
  Vec<F> coords(x.begin() + offsets_[slot], x.begin() + offsets_[slot + 1]);
  return s.basis.combine(coords);
}

template <class F>
void Projective<F>::add_component(Vec<F>& x, std::size_t slot, const Vec<F>& y) const {
  const auto& s = summand(slot);
  if (!s.basis.contains(y)) throw std::logic_error("element does not lie in the projective summand");
  auto coords = s.basis.coordinates(y);
  const F& f = ring_->field();
  for (std::size_t t = 0; t < coords.size(); ++t)
    x[offsets_[slot] + t] = f.add(x[offsets_[slot] + t], coords[t]);
}

template <class F>
Vec<F> Projective<F>::act(std::size_t basis_index, const Vec<F>& x) const {
  Vec<F> out = zero_vec(ring_->field(), dim());
  for (std::size_t slot = 0; slot < rank(); ++slot) {
    const auto& s = summand(slot);
    Vec<F> coords(x.begin() + offsets_[slot], x.begin() + offsets_[slot + 1]);
    auto y = s.action[basis_index].apply(coords);
    std::copy(y.begin(), y.end(), out.begin() + offsets_[slot]);
  }
  return out;
}

template <class F>
Mod<F> Projective<F>::as_module() const {
  if (types_.empty()) return zero_module(ring_, side_);
  std::vector<Mod<F>> parts;
  for (std::size_t slot = 0; slot < rank(); ++slot) {
    const auto& s = summand(slot);
    parts.emplace_back(ring_, side_, s.basis.dim(), s.action);
  }
  return direct_sum(parts).sum;
}

template <class F>
Matrix<F> ProjMap<F>::dense() const {
  const auto& lam = source.algebra();
  Matrix<F> m(lam.field, target.dim(), source.dim());
  for (std::size_t l = 0; l < source.rank(); ++l) {
    const auto& s = source.summand(l);
    for (std::size_t t = 0; t < s.basis.dim(); ++t) {
      auto b = s.basis.vector(t);
      Vec<F> col = zero_vec(lam.field, target.dim());
      for (std::size_t k = 0; k < target.rank(); ++k) {
        if (is_zero_vec(lam.field, entries[l][k])) continue;
        target.add_component(col, k, lam.multiply(b, entries[l][k]));
      }
      m.set_column(source.offset(l) + t, col);
    }
  }
  return m;
}

template <class F>
ProjMap<F> ProjMap<F>::star() const {
  ProjMap<F> out{target.star(), source.star(), {}};
  out.entries.assign(target.rank(), std::vector<Vec<F>>(source.rank()));
  for (std::size_t l = 0; l < source.rank(); ++l)
    for (std::size_t k = 0; k < target.rank(); ++k) out.entries[k][l] = entries[l][k];
  return out;
}

template <class F>
Cover<F> projective_cover(const Mod<F>& m, bool minimal) {
  const auto& lam = m.algebra();
  const F& f = m.field();
  const auto& ring = m.ring();
  std::vector<std::size_t> types;
  Cover<F> out;
  if (minimal) {
    if (!lam.supports_minimal())
      throw UnsupportedError("minimal projective covers need a radical and primitive idempotents");
    EchelonBuilder<F> top(f, m.dim());
    auto rad = radical_submodule(m);
    for (std::size_t r = 0; r < rad.dim(); ++r) top.insert(rad.vector(r));
    for (std::size_t j = 0; j < lam.idempotents.size(); ++j) {
      auto e = m.act(lam.idempotents[j]);
      for (std::size_t c = 0; c < m.dim() && top.rank() < m.dim(); ++c) {
        auto v = e.column(c);
        if (top.insert(v)) {
          out.generators.push_back(std::move(v));
          types.push_back(j);
        }
      }
    }
    if (top.rank() != m.dim()) throw std::logic_error("idempotents do not decompose the module");
  } else {
    EchelonBuilder<F> gen(f, m.dim());
    for (std::size_t c = 0; c < m.dim() && gen.rank() < m.dim(); ++c) {
      Vec<F> x = zero_vec(f, m.dim());
      x[c] = f.one();
      if (gen.contains(x)) continue;
      for (std::size_t i = 0; i < lam.dim; ++i) gen.insert(m.action(i).apply(x));
      out.generators.push_back(std::move(x));
      types.push_back(ring->free_type());
    }
  }
  out.projective = Projective<F>(ring, m.side(), std::move(types));
  const auto& p = out.projective;
  out.map = Matrix<F>(f, m.dim(), p.dim());
  for (std::size_t l = 0; l < p.rank(); ++l) {
    const auto& s = p.summand(l);
    for (std::size_t t = 0; t < s.basis.dim(); ++t)
      out.map.set_column(p.offset(l) + t, m.act(s.basis.vector(t), out.generators[l]));
  }
  return out;
}

template <class F>
Resolution<F>::Resolution(Mod<F> m, bool minimal) : minimal_(minimal) {
  if (minimal && !m.algebra().supports_minimal())
    throw UnsupportedError("minimal resolutions need a radical and primitive idempotents");
  if (m.dim() == 0) terminated_ = 0;
  syzygies_.push_back(std::move(m));
  embeddings_.emplace_back();
  differentials_.emplace_back();
}

template <class F>
void Resolution<F>::compute_term(std::size_t i) {
  covers_.push_back(projective_cover(syzygies_[i], minimal_));
  if (i == 0) return;
  const auto& cov = covers_[i];
  const auto& prev = covers_[i - 1].projective;
  ProjMap<F> d{cov.projective, prev, {}};
  for (const auto& g : cov.generators) {
    auto w = embeddings_[i].apply(g);
    std::vector<Vec<F>> row;
    for (std::size_t k = 0; k < prev.rank(); ++k) row.push_back(prev.component(w, k));
    d.entries.push_back(std::move(row));
  }
  differentials_.push_back(std::move(d));
}

template <class F>
void Resolution<F>::compute_syzygy(std::size_t i) {
  const auto& cov = covers_[i - 1];
  const auto& p = cov.projective;
  auto k = kernel_basis(cov.map);
  const F& f = p.ring()->field();
  std::vector<Matrix<F>> action;
  for (std::size_t a = 0; a < p.algebra().dim; ++a) {
    Matrix<F> m(f, k.dim(), k.dim());
    for (std::size_t t = 0; t < k.dim(); ++t) m.set_column(t, k.coordinates(p.act(a, k.vector(t))));
    action.push_back(std::move(m));
  }
  syzygies_.emplace_back(p.ring(), p.side(), k.dim(), std::move(action));
  embeddings_.push_back(k.basis().transpose());
  if (k.dim() == 0 && !terminated_) terminated_ = i;
}

template <class F>
void Resolution<F>::extend_to(std::size_t len) {
  while (covers_.size() <= len) {
    std::size_t j = covers_.size();
    while (syzygies_.size() <= j) compute_syzygy(syzygies_.size());
    compute_term(j);
  }
}

template <class F>
const Projective<F>& Resolution<F>::term(std::size_t i) {
  extend_to(i);
  return covers_[i].projective;
}

template <class F>
const ProjMap<F>& Resolution<F>::differential(std::size_t i) {
  if (i == 0) throw std::invalid_argument("differentials start at d_1");
  extend_to(i);
  return differentials_[i];
}

template <class F>
const Matrix<F>& Resolution<F>::cover_map(std::size_t i) {
  extend_to(i);
  return covers_[i].map;
}

template <class F>
const std::vector<Vec<F>>& Resolution<F>::cover_generators(std::size_t i) {
  extend_to(i);
  return covers_[i].generators;
}

template <class F>
const Mod<F>& Resolution<F>::syzygy(std::size_t i) {
  if (i > 0) extend_to(i - 1);
  while (syzygies_.size() <= i) compute_syzygy(syzygies_.size());
  return syzygies_[i];
}

template <class F>
const Matrix<F>& Resolution<F>::syzygy_embedding(std::size_t i) {
  if (i == 0) throw std::invalid_argument("Ω^0 has no embedding");
  syzygy(i);
  return embeddings_[i];
}

template <class F>
CochainDegree<F> cochain_degree(Resolution<F>& res, const Mod<F>& n, std::size_t i) {
  if (!res.target().same_category(n)) throw ModuleError("Ext between different algebras or sides");
  const F& f = n.field();
  const auto& p = res.term(i);
  const auto& q = res.term(i + 1);
  const auto& d = res.differential(i + 1);
  const std::size_t nd = n.dim();
  std::vector<Subspace<F>> pieces;
  std::size_t vdim = 0;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    pieces.push_back(Subspace<F>::column_space(n.act(p.idempotent(k))));
    vdim += pieces.back().dim();
  }
  CochainDegree<F> out{Matrix<F>(f, nd * p.rank(), vdim), Matrix<F>(f, nd * q.rank(), vdim)};
  std::size_t col = 0;
  for (std::size_t k = 0; k < p.rank(); ++k)
    for (std::size_t t = 0; t < pieces[k].dim(); ++t, ++col) {
      auto y = pieces[k].vector(t);
      for (std::size_t r = 0; r < nd; ++r) out.basis(k * nd + r, col) = y[r];
      for (std::size_t l = 0; l < q.rank(); ++l) {
        const auto& x = d.entries[l][k];
        if (is_zero_vec(f, x)) continue;
        auto z = n.act(x, y);
        for (std::size_t r = 0; r < nd; ++r) out.coboundary(l * nd + r, col) = z[r];
      }
    }
  return out;
}

template <class F>
ExtCalculator<F>::ExtCalculator(Resolution<F>& res, Mod<F> n) : res_(res), n_(std::move(n)) {}

template <class F>
void ExtCalculator<F>::ensure(std::size_t i) {
  while (ranks_.size() <= i) {
    auto cd = cochain_degree(res_, n_, ranks_.size());
    vdims_.push_back(cd.basis.cols());
    ranks_.push_back(rank(std::move(cd.coboundary)));
  }
}

template <class F>
std::size_t ExtCalculator<F>::dim(std::size_t i) {
  ensure(i);
  return vdims_[i] - ranks_[i] - (i > 0 ? ranks_[i - 1] : 0);
}

template <class F>
std::vector<std::size_t> ext_dims(Resolution<F>& res, const Mod<F>& n, std::size_t max_i) {
  ExtCalculator<F> calc(res, n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_i; ++i) out.push_back(calc.dim(i));
  return out;
}

template <class F>
std::vector<std::size_t> ext_dims(const Mod<F>& m, const Mod<F>& n, std::size_t max_i) {
  Resolution<F> res(m, supports_minimal(m));
  return ext_dims(res, n, max_i);
}

template <class F>
std::size_t ext_dim(Resolution<F>& res, const Mod<F>& n, std::size_t i) {
  ExtCalculator<F> calc(res, n);
  return calc.dim(i);
}

template <class F>
Mod<F> ext_module_to_regular(Resolution<F>& res, std::size_t i) {
  const auto& m = res.target();
  auto reg = regular_module(m.ring(), m.side());
  auto cd = cochain_degree(res, reg, i);
  auto free = free_module(m.ring(), res.term(i).rank(), opposite(m.side()));
  auto zk = kernel_basis(cd.coboundary);
  std::vector<Vec<F>> cycles;
  for (std::size_t t = 0; t < zk.dim(); ++t) cycles.push_back(cd.basis.apply(zk.vector(t)));
  auto z = Subspace<F>::span(m.field(), cd.basis.rows(), cycles);
  auto zmod = submodule(free, z);
  std::vector<Vec<F>> bounds;
  if (i > 0) {
    auto prev = cochain_degree(res, reg, i - 1);
    for (std::size_t c = 0; c < prev.coboundary.cols(); ++c) bounds.push_back(z.coordinates(prev.coboundary.column(c)));
  }
  return quotient_module(zmod.module, Subspace<F>::span(m.field(), z.dim(), bounds)).module;
}

template <class F>
Presentation<F> presentation(const Mod<F>& m, bool minimal) {
  Resolution<F> res(m, minimal);
  return {res.differential(1), res.cover_map(0), res.cover_generators(0), minimal};
}

template <class F>
Mod<F> syzygy(const Mod<F>& m, std::size_t n, bool minimal) {
  Resolution<F> res(m, minimal);
  return res.syzygy(n);
}

template <class F>
Mod<F> transpose_of_presentation(const Presentation<F>& p) {
  auto dstar = p.relations.star();
  auto target = dstar.target.as_module();
  return quotient_module(target, Subspace<F>::column_space(dstar.dense())).module;
}

template <class F>
Transpose<F> transpose(const Mod<F>& m, bool prefer_minimal) {
  bool minimal = prefer_minimal && supports_minimal(m);
  return {transpose_of_presentation(presentation(m, minimal)), !minimal};
}

template <class F>
std::vector<ModHom<F>> hom_space(const Mod<F>& m, const Mod<F>& n) {
  if (!m.same_category(n)) throw ModuleError("Hom between different algebras or sides");
  const F& f = m.field();
  if (m.dim() == 0 || n.dim() == 0) return {};
  Resolution<F> res(m, supports_minimal(m));
  const auto& p0 = res.term(0);
  auto cd = cochain_degree(res, n, 0);
  auto kz = kernel_basis(cd.coboundary);
  // section of the augmentation: x = Σ_l s_l(x) g_l
  auto section = solve_columns(res.cover_map(0), Matrix<F>::identity(f, m.dim()));
  std::vector<std::vector<Matrix<F>>> rho(m.dim());
  for (std::size_t x = 0; x < m.dim(); ++x) {
    auto s = section.column(x);
    for (std::size_t l = 0; l < p0.rank(); ++l) rho[x].push_back(n.act(p0.component(s, l)));
  }
  std::vector<Vec<F>> flats;
  for (std::size_t t = 0; t < kz.dim(); ++t) {
    auto y = cd.basis.apply(kz.vector(t));
    Matrix<F> h(f, n.dim(), m.dim());
    for (std::size_t x = 0; x < m.dim(); ++x) {
      Vec<F> col = zero_vec(f, n.dim());
      for (std::size_t l = 0; l < p0.rank(); ++l) {
        Vec<F> yl(y.begin() + l * n.dim(), y.begin() + (l + 1) * n.dim());
        auto z = rho[x][l].apply(yl);
        for (std::size_t r = 0; r < n.dim(); ++r) col[r] = f.add(col[r], z[r]);
      }
      h.set_column(x, col);
    }
    flats.push_back(h.data());
  }
  auto flat = Subspace<F>::span(f, n.dim() * m.dim(), flats);
  std::vector<ModHom<F>> out;
  for (std::size_t t = 0; t < flat.dim(); ++t) {
    Matrix<F> h(f, n.dim(), m.dim());
    auto v = flat.vector(t);
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) h(r, c) = v[r * m.dim() + c];
    out.push_back({m, n, std::move(h)});
  }
  return out;
}

#define TFL_INSTANTIATE(F)                                                                   \
  template class Projective<F>;                                                              \
  template struct ProjMap<F>;                                                                \
  template Cover<F> projective_cover(const Mod<F>&, bool);                                   \
  template class Resolution<F>;                                                              \
  template CochainDegree<F> cochain_degree(Resolution<F>&, const Mod<F>&, std::size_t);      \
  template class ExtCalculator<F>;                                                           \
  template std::vector<std::size_t> ext_dims(Resolution<F>&, const Mod<F>&, std::size_t);    \
  template std::vector<std::size_t> ext_dims(const Mod<F>&, const Mod<F>&, std::size_t);     \
  template std::size_t ext_dim(Resolution<F>&, const Mod<F>&, std::size_t);                  \
  template Mod<F> ext_module_to_regular(Resolution<F>&, std::size_t);                        \
  template Presentation<F> presentation(const Mod<F>&, bool);                                \
  template Mod<F> syzygy(const Mod<F>&, std::size_t, bool);                                  \
  template Mod<F> transpose_of_presentation(const Presentation<F>&);                         \
  template Transpose<F> transpose(const Mod<F>&, bool);                                      \
  template std::vector<ModHom<F>> hom_space(const Mod<F>&, const Mod<F>&);

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl
