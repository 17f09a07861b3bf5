#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "tfl/module.hpp"

namespace tfl {

/// A finitely generated projective ⊕_slot Λe_slot, kept in factored form so that
/// large terms never need dense action matrices.
template <class F>
class Projective {
 public:
  Projective() = default;
  Projective(RingPtr<F> ring, Side side, std::vector<std::size_t> types);

  const RingPtr<F>& ring() const { return ring_; }
  Side side() const { return side_; }
  const Algebra<F>& algebra() const { return ring_->acting(side_); }
  std::size_t rank() const { return types_.size(); }
  std::size_t dim() const { return offsets_.back(); }
  const std::vector<std::size_t>& types() const { return types_; }
  std::size_t type(std::size_t slot) const { return types_[slot]; }
  std::size_t offset(std::size_t slot) const { return offsets_[slot]; }
  const Summand<F>& summand(std::size_t slot) const { return ring_->summand(side_, types_[slot]); }
  const Vec<F>& idempotent(std::size_t slot) const { return summand(slot).idempotent; }

  /// Slot component of x, as an element of Λ.
  Vec<F> component(const Vec<F>& x, std::size_t slot) const;
  /// Adds the element y ∈ Λe_slot into slot `slot` of x.
  void add_component(Vec<F>& x, std::size_t slot, const Vec<F>& y) const;
  /// e_i x, slot by slot.
  Vec<F> act(std::size_t basis_index, const Vec<F>& x) const;

  Mod<F> as_module() const;
  /// Hom(P, Λ) as a projective over the other side: same idempotents.
  Projective star() const { return Projective(ring_, opposite(side_), types_); }

 private:
  RingPtr<F> ring_;
  Side side_ = Side::left;
  std::vector<std::size_t> types_;
  std::vector<std::size_t> offsets_{0};
};

/// Map between projectives: generator l of the source goes to Σ_k entries[l][k] · g_k,
/// with entries[l][k] ∈ e_l Λ e_k. On elements, (y_l) ↦ (Σ_l y_l entries[l][k])_k.
template <class F>
struct ProjMap {
  Projective<F> source;
  Projective<F> target;
  std::vector<std::vector<Vec<F>>> entries;

  Matrix<F> dense() const;
  /// Hom(-, Λ) applied: a map target* -> source* over the opposite algebra (transposed entries).
  ProjMap star() const;
};

template <class F>
struct Cover {
  Projective<F> projective;
  std::vector<Vec<F>> generators;  // generators[l] = e_l generators[l]
  Matrix<F> map;                   // module.dim x projective.dim
};

/// Projective cover (minimal: a basis of top lifted through the idempotents) or a free
/// cover by greedily chosen standard basis vectors.
template <class F>
Cover<F> projective_cover(const Mod<F>& m, bool minimal);

/// Whether minimal covers are available on this side.
template <class F>
bool supports_minimal(const Mod<F>& m) {
  return m.algebra().supports_minimal();
}

/// Lazily extended projective resolution ... -> P_1 -> P_0 -> M -> 0.
template <class F>
class Resolution {
 public:
  Resolution(Mod<F> m, bool minimal);

  bool minimal() const { return minimal_; }
  const Mod<F>& target() const { return syzygies_.front(); }
  Side side() const { return target().side(); }

  /// Ensures P_0..P_len are available.
  void extend_to(std::size_t len);
  const Projective<F>& term(std::size_t i);
  /// d_i : P_i -> P_{i-1} for i >= 1.
  const ProjMap<F>& differential(std::size_t i);
  /// P_i -> Ω^i in syzygy coordinates; i = 0 is the augmentation onto M.
  const Matrix<F>& cover_map(std::size_t i);
  const std::vector<Vec<F>>& cover_generators(std::size_t i);
  /// Ω^i, with Ω^0 = M.
  const Mod<F>& syzygy(std::size_t i);
  /// Ω^i -> P_{i-1} (columns span the kernel), i >= 1.
  const Matrix<F>& syzygy_embedding(std::size_t i);
  /// Smallest i with Ω^i = 0 among the computed syzygies.
  std::optional<std::size_t> terminated_at() const { return terminated_; }

 private:
  void compute_term(std::size_t i);
  void compute_syzygy(std::size_t i);

  bool minimal_;
  // deques keep returned references valid while the resolution grows
  std::deque<Mod<F>> syzygies_;
  std::deque<Matrix<F>> embeddings_;  // embeddings_[i] for Ω^i, index 0 unused
  std::deque<Cover<F>> covers_;
  std::deque<ProjMap<F>> differentials_;  // differentials_[i] = d_i, index 0 unused
  std::optional<std::size_t> terminated_;
};

/// Coboundary data of Hom(P_•, N): δ^i : Hom(P_i, N) -> Hom(P_{i+1}, N) on ⊕ e_l N.
template <class F>
struct CochainDegree {
  Matrix<F> basis;     // columns span ⊕_l e_l N inside N^{rank P_i}
  Matrix<F> coboundary;  // δ^i restricted to the basis, in ambient N^{rank P_{i+1}} coordinates
};

template <class F>
CochainDegree<F> cochain_degree(Resolution<F>& res, const Mod<F>& n, std::size_t i);

/// dim Ext^i(M, N) degree by degree, caching coboundary ranks; extends the resolution only as far
/// as the degrees asked for.
template <class F>
class ExtCalculator {
 public:
  ExtCalculator(Resolution<F>& res, Mod<F> n);
  std::size_t dim(std::size_t i);

 private:
  void ensure(std::size_t i);
  Resolution<F>& res_;
  Mod<F> n_;
  std::vector<std::size_t> vdims_, ranks_;
};

/// dim Ext^i(M, N) for i = 0..max_i, from the resolution of M.
template <class F>
std::vector<std::size_t> ext_dims(Resolution<F>& res, const Mod<F>& n, std::size_t max_i);
template <class F>
std::vector<std::size_t> ext_dims(const Mod<F>& m, const Mod<F>& n, std::size_t max_i);
/// dim Ext^i(M, N) for a single degree.
template <class F>
std::size_t ext_dim(Resolution<F>& res, const Mod<F>& n, std::size_t i);

/// Ext^i(M, Λ) with its module structure on the opposite side (right multiplication).
template <class F>
Mod<F> ext_module_to_regular(Resolution<F>& res, std::size_t i);

/// P_1 -> P_0 -> M -> 0.
template <class F>
struct Presentation {
  ProjMap<F> relations;  // d_1 : P_1 -> P_0
  Matrix<F> augmentation;
  std::vector<Vec<F>> generators;
  bool minimal = false;
};
template <class F>
Presentation<F> presentation(const Mod<F>& m, bool minimal);

template <class F>
Mod<F> syzygy(const Mod<F>& m, std::size_t n, bool minimal);

/// Cokernel of d_1* : P_0* -> P_1*. `projective_ambiguity` is set when the presentation was not minimal.
template <class F>
struct Transpose {
  Mod<F> module;
  bool projective_ambiguity = false;
};
template <class F>
Transpose<F> transpose(const Mod<F>& m, bool prefer_minimal = true);
template <class F>
Mod<F> transpose_of_presentation(const Presentation<F>& p);

}  // namespace tfl
