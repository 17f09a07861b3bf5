#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfl/dim_result.hpp"
#include "tfl/resolution.hpp"

namespace tfl {

struct AnalysisOptions {
  int bound = 8;
  /// Syzygy searches stop once a syzygy is larger than this.
  std::size_t max_syzygy_dim = 512;
};

/// dim Ext^i(M, Λ) for the regular module on M's side. When a minimal syzygy Ω^j (0 < j < i)
/// is semisimple the value is assembled from the memoized Ext of the simples.
template <class F>
class ExtToRegular {
 public:
  explicit ExtToRegular(Mod<F> m);
  ExtToRegular(const ExtToRegular&) = delete;
  ExtToRegular& operator=(const ExtToRegular&) = delete;

  const Mod<F>& module() const { return regular_; }
  Resolution<F>& resolution() { return *res_; }
  std::size_t dim(std::size_t i);
  /// Multiplicities of the simples in Ω^j when that syzygy is semisimple.
  std::optional<std::vector<std::size_t>> semisimple_multiplicities(std::size_t j);

 private:

  std::unique_ptr<Resolution<F>> res_;
  Mod<F> regular_;
  std::unique_ptr<ExtCalculator<F>> direct_;
  bool reduce_ = false;
  std::vector<std::optional<std::vector<std::size_t>>> semisimple_;  // per syzygy degree
};

/// dim Ext^i(S_s, Λ) for the simple modules of one side, memoized per ring.
template <class F>
std::size_t simple_ext_to_regular(const RingPtr<F>& ring, Side side, std::size_t s, std::size_t i);

/// id of the regular module on `side`: least n <= bound with Ext^{n+1}(S, Λ) = 0 for every simple S.
template <class F>
DimResult self_injective_dimension(const RingPtr<F>& ring, Side side, int bound);

/// Lazily computed homological data of one module, shared by the invariant functions below.
template <class F>
class Analysis {
 public:
  explicit Analysis(Mod<F> m, AnalysisOptions opts = {});
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const Mod<F>& module() const { return m_; }
  const AnalysisOptions& options() const { return opts_; }
  int bound() const { return opts_.bound; }
  bool minimal() const { return minimal_; }

  Resolution<F>& resolution() { return ext_.resolution(); }
  const Mod<F>& syzygy(std::size_t n) { return resolution().syzygy(n); }
  /// Simple multiplicities of Ω^n when it is semisimple (minimal resolutions only).
  std::optional<std::vector<std::size_t>> semisimple_syzygy(std::size_t n) {
    if (!minimal_) return std::nullopt;
    return ext_.semisimple_multiplicities(n);
  }
  /// dim Ext^i(M, Λ).
  std::size_t ext(std::size_t i) { return ext_.dim(i); }
  const Transpose<F>& transpose();
  /// dim Ext^i(Tr M, Λ) over the opposite side.
  std::size_t ext_transpose(std::size_t i);
  Resolution<F>& transpose_resolution();

  /// Self-injective dimension of the regular module on M's side / the opposite side, or
  /// nullopt when the algebra has no computable radical.
  const std::optional<DimResult>& selfinj();
  const std::optional<DimResult>& selfinj_opposite();
  /// Certified finite value of the above.
  std::optional<int> selfinj_value();
  std::optional<int> selfinj_opposite_value();

 private:
  Mod<F> m_;
  AnalysisOptions opts_;
  bool minimal_;
  ExtToRegular<F> ext_;
  std::optional<Transpose<F>> tr_;
  std::unique_ptr<ExtToRegular<F>> tr_ext_;
  std::optional<std::optional<DimResult>> selfinj_, selfinj_op_;
};

/// A yes/no answer to an "all degrees" question: `certified` when a finiteness certificate
/// discharged the degrees beyond the checked ones, otherwise checked up to `bound`.
struct CertifiedFlag {
  bool value = false;
  bool certified = false;
  int bound = 0;
  std::string note;
};

struct TorsionStatus {
  bool torsionless = false;
  bool reflexive = false;
  CertifiedFlag inf_torsionfree;
};

template <class F>
bool is_n_torsionfree(const Mod<F>& m, std::size_t n);
template <class F>
bool is_n_torsionfree(Analysis<F>& a, std::size_t n);

template <class F>
TorsionStatus torsion_status(const Mod<F>& m, int bound = 8);
template <class F>
TorsionStatus torsion_status(Analysis<F>& a);
/// ∞-torsionfree flag alone, without the evaluation-map cross-check.
template <class F>
CertifiedFlag inf_torsionfree(Analysis<F>& a);

/// ∞-torsionfree flag of the minimal syzygy Ω^n M. Once a syzygy Ω^j (j <= n) is semisimple the
/// flag is assembled from memoized flags of Ω^{n-j} of the simples. nullopt when a syzygy exceeds
/// the size limit first.
template <class F>
std::optional<CertifiedFlag> syzygy_inf_torsionfree(Analysis<F>& a, std::size_t n);

/// Whether M ∈ ⊥A (Ext^i(M, Λ) = 0 for all i >= 1), certified by the one-sided id when finite.
template <class F>
CertifiedFlag in_left_orthogonal(Analysis<F>& a);

template <class F>
DimResult projective_dimension(const Mod<F>& m, int bound = 8);
template <class F>
DimResult projective_dimension(Analysis<F>& a);

template <class F>
DimResult orthogonal_dimension(const Mod<F>& m, int bound = 8);
template <class F>
DimResult orthogonal_dimension(Analysis<F>& a);

template <class F>
DimResult gorenstein_dimension(const Mod<F>& m, int bound = 8);
template <class F>
DimResult gorenstein_dimension(Analysis<F>& a);

/// Torsionfree dimension. Only an upper bound is computed in general: the least n with Ω^n M
/// ∞-torsionfree. `exact` is set when M is ∞-torsionfree, or when the bound is 1 and M is not
/// torsionless.
struct TorsionfreeDimension {
  std::optional<int> upper;
  bool upper_certified = false;
  int lower = 0;
  std::optional<int> exact;
  int bound = 0;
  std::string note;

  bool proves_at_most(int n) const { return upper && upper_certified && *upper <= n; }
  bool proves_greater_than(int n) const { return lower > n; }
  std::string to_string() const;
};

template <class F>
TorsionfreeDimension torsionfree_dimension_upper(const Mod<F>& m, int bound = 8);
template <class F>
TorsionfreeDimension torsionfree_dimension_upper(Analysis<F>& a);

/// Terms I^0..I^length of the minimal injective coresolution of the regular module on `side`,
/// as D of the minimal projective resolution of D(Λ) on the other side. Stops early when it ends.
template <class F>
std::vector<Mod<F>> injective_coresolution(const RingPtr<F>& ring, Side side, std::size_t length);
template <class F>
std::vector<DimResult> injective_coresolution_pd_profile(const RingPtr<F>& ring, Side side, std::size_t length,
                                                         int bound = 8);

/// 0 -> Ext^1(Tr M, Λ) -> M -> M** -> Ext^2(Tr M, Λ) -> 0.
struct AuslanderBridgerReport {
  bool ok = true;
  std::size_t ext1 = 0, ext2 = 0;
  std::size_t module_dim = 0, double_dual_dim = 0;
  std::size_t ev_kernel = 0, ev_cokernel = 0;
  std::vector<std::string> failures;
};
template <class F>
AuslanderBridgerReport auslander_bridger_check(const Mod<F>& m);

}  // namespace tfl
