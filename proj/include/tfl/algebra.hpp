#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tfl/dim_result.hpp"
#include "tfl/matrix.hpp"

namespace tfl {

enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Requested capability the algebra does not have (e.g. a radical over GF(p) without provenance).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra or quiver input.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One term `coeff * path` of a relation. `arrows` lists arrow labels in product order:
/// {"a","b"} is the product a*b, i.e. b followed by a.
struct PathTerm {
  std::string coeff = "1";
  std::vector<std::string> arrows;
};

struct QuiverPresentation {
  struct Arrow {
    std::size_t source = 0;  // 0-based vertex indices
    std::size_t target = 0;
    std::string label;
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  std::size_t nilpotency = 2;

  /// Same quiver with arrows reversed and relation paths read backwards.
  QuiverPresentation reversed() const;
};

/// Finite-dimensional associative unital algebra given by structure constants
/// e_i * e_j = sum_k c(i,j,k) e_k.
template <class F>
struct Algebra {
  using Elem = typename F::Elem;

  F field{};
  std::size_t dim = 0;
  std::vector<Elem> table;  // c(i,j,k) at (i*dim + j)*dim + k
  Vec<F> unit;
  std::optional<Subspace<F>> radical;
  std::vector<Vec<F>> idempotents;  // empty when unknown
  std::vector<std::string> labels;
  std::optional<QuiverPresentation> quiver;
  std::string name;

  // filled by finalize()
  std::vector<Matrix<F>> left_mult;   // L_i : x -> e_i x
  std::vector<Matrix<F>> right_mult;  // R_i : x -> x e_i

  const Elem& c(std::size_t i, std::size_t j, std::size_t k) const { return table[(i * dim + j) * dim + k]; }
  Elem& c(std::size_t i, std::size_t j, std::size_t k) { return table[(i * dim + j) * dim + k]; }

  void finalize();

  Vec<F> basis_vector(std::size_t i) const {
    Vec<F> v = zero_vec(field, dim);
    v[i] = field.one();
    return v;
  }
  Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const;
  /// Matrix of x -> a x.
  Matrix<F> left_matrix(const Vec<F>& a) const;
  /// Matrix of x -> x a.
  Matrix<F> right_matrix(const Vec<F>& a) const;

  bool has_radical() const { return radical.has_value(); }
  bool has_idempotents() const { return !idempotents.empty(); }
  /// Minimal projective covers need the radical and a complete set of primitive idempotents.
  bool supports_minimal() const { return has_radical() && has_idempotents(); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  void fail(std::string msg) {
    ok = false;
    errors.push_back(std::move(msg));
  }
};

template <class F>
ValidationReport validate_algebra(const Algebra<F>& a);

template <class F>
Algebra<F> build_bound_quiver_algebra(const F& field, const QuiverPresentation& q, std::string name = {});

template <class F>
Algebra<F> opposite_algebra(const Algebra<F>& a);

/// Jacobson radical: Dickson's trace-form criterion over QQ, the arrow ideal for quiver algebras.
template <class F>
Subspace<F> compute_radical(const Algebra<F>& a);

/// Smallest k with rad^k = 0, or nullopt when rad is not nilpotent within dim+1 steps.
template <class F>
std::optional<std::size_t> nilpotency_index(const Algebra<F>& a, const Subspace<F>& ideal);

/// K1, DUAL2, TRUNCPOLY(n), A2, NG3, NAKAYAMA(c,N).
template <class F>
Algebra<F> builtin_algebra(const std::string& name, const F& field);

std::vector<std::string> builtin_algebra_names();

/// The indecomposable projective (or free) summand Λe of the acting algebra Λ.
template <class F>
struct Summand {
  Vec<F> idempotent;
  Subspace<F> basis;              // Λe inside Λ, echelon rows
  std::vector<Matrix<F>> action;  // left multiplication by each basis element, in echelon coordinates
};

/// An algebra together with its opposite; left modules act through `base`, right modules
/// are left modules over `opposite`.
template <class F>
class Ring {
 public:
  explicit Ring(Algebra<F> base);

  const Algebra<F>& base() const { return base_; }
  const Algebra<F>& opposite_algebra() const { return opposite_; }
  const Algebra<F>& acting(Side s) const { return s == Side::left ? base_ : opposite_; }
  const F& field() const { return base_.field; }
  std::size_t dim() const { return base_.dim; }
  const std::string& name() const { return base_.name; }

  /// Summand types are the idempotent indices, plus free_type() for Λ itself.
  std::size_t free_type() const { return base_.idempotents.size(); }
  const Summand<F>& summand(Side s, std::size_t type) const {
    return (s == Side::left ? left_summands_ : right_summands_).at(type);
  }

  std::optional<DimResult> cached_selfinjdim(Side s, int bound) const {
    std::lock_guard lock(mu_);
    auto it = selfinj_.find({static_cast<int>(s), bound});
    if (it == selfinj_.end()) return std::nullopt;
    return it->second;
  }
  void store_selfinjdim(Side s, int bound, const DimResult& r) const {
    std::lock_guard lock(mu_);
    selfinj_[{static_cast<int>(s), bound}] = r;
  }

  /// Per-side slot for a cache owned by a higher layer; T must not hold a RingPtr.
  template <class T>
  std::shared_ptr<T> side_cache(Side s) const {
    std::lock_guard lock(mu_);
    auto& slot = caches_[s == Side::left ? 0 : 1];
    if (!slot) slot = std::make_shared<T>();
    return std::static_pointer_cast<T>(slot);
  }

 private:
  Algebra<F> base_;
  Algebra<F> opposite_;
  std::vector<Summand<F>> left_summands_, right_summands_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, DimResult> selfinj_;
  mutable std::shared_ptr<void> caches_[2];
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(Algebra<F> a) {
  return std::make_shared<const Ring<F>>(std::move(a));
}

}  // namespace tfl
