#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tfl/algebra.hpp"
#include "tfl/random.hpp"

namespace tfl {

/// Operands live in different categories (algebra, side) or have incompatible shapes.
class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A module failed a precondition of the requested construction.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional left module over the acting algebra of `side` (right modules are left
/// modules over the opposite algebra). Action matrices are shared, so copies are cheap.
template <class F>
class Mod {
 public:
  Mod() = default;
  Mod(RingPtr<F> ring, Side side, std::size_t dim, std::vector<Matrix<F>> action);

  const RingPtr<F>& ring() const { return ring_; }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const Algebra<F>& algebra() const { return ring_->acting(side_); }
  const F& field() const { return ring_->field(); }
  const Matrix<F>& action(std::size_t i) const { return (*action_)[i]; }
  const std::vector<Matrix<F>>& actions() const { return *action_; }

  /// Matrix of x -> a x.
  Matrix<F> act(const Vec<F>& a) const;
  Vec<F> act(const Vec<F>& a, const Vec<F>& x) const;

  bool same_category(const Mod& o) const { return ring_ == o.ring_ && side_ == o.side_; }
  bool operator==(const Mod& o) const { return same_category(o) && dim_ == o.dim_ && *action_ == *o.action_; }

 private:
  RingPtr<F> ring_;
  Side side_ = Side::left;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Matrix<F>>> action_;
};

/// Module homomorphism; `matrix` is target.dim() x source.dim().
template <class F>
struct ModHom {
  Mod<F> source;
  Mod<F> target;
  Matrix<F> matrix;

  Vec<F> operator()(const Vec<F>& x) const { return matrix.apply(x); }
};

template <class F>
struct ExactnessReport {
  bool exact = true;
  std::vector<std::string> failures;
  long long euler_characteristic = 0;  // alternating sum of dimensions
};

/// objects[0] -> objects[1] -> ... ; maps[i] : objects[i] -> objects[i+1].
template <class F>
struct ExactSeq {
  std::vector<Mod<F>> objects;
  std::vector<ModHom<F>> maps;

  /// Exactness at every interior node plus zero ends: image = kernel everywhere.
  ExactnessReport<F> certify() const;
  /// Builds 0 -> objects... -> 0 with zero modules at both ends from a chain of maps.
  static ExactSeq from_maps(const std::vector<ModHom<F>>& chain);
};

template <class F>
ValidationReport validate_module(const Mod<F>& m);
template <class F>
ValidationReport validate_hom(const ModHom<F>& h);

template <class F>
Mod<F> zero_module(const RingPtr<F>& ring, Side side);
template <class F>
Mod<F> regular_module(const RingPtr<F>& ring, Side side);
template <class F>
Mod<F> free_module(const RingPtr<F>& ring, std::size_t rank, Side side);
/// Λe_j for each primitive idempotent.
template <class F>
std::vector<Mod<F>> indecomposable_projectives(const RingPtr<F>& ring, Side side);
/// Tops of the indecomposable projectives, one per idempotent.
template <class F>
std::vector<Mod<F>> simple_modules(const RingPtr<F>& ring, Side side);

template <class F>
ModHom<F> identity_hom(const Mod<F>& m);
template <class F>
ModHom<F> zero_hom(const Mod<F>& source, const Mod<F>& target);
template <class F>
ModHom<F> compose(const ModHom<F>& second, const ModHom<F>& first);

template <class F>
struct Inclusion {
  Mod<F> module;
  ModHom<F> map;  // module -> ambient
};
template <class F>
struct Projection {
  Mod<F> module;
  ModHom<F> map;  // ambient -> module
};

/// Submodule spanned by an invariant subspace (checked); basis is the echelon basis of `u`.
template <class F>
Inclusion<F> submodule(const Mod<F>& m, const Subspace<F>& u);
/// Quotient by an invariant subspace; basis is the non-pivot coordinates of `u`.
template <class F>
Projection<F> quotient_module(const Mod<F>& m, const Subspace<F>& u);
/// Smallest submodule containing the given vectors.
template <class F>
Subspace<F> generated_submodule(const Mod<F>& m, const std::vector<Vec<F>>& gens);
/// rad(A) M.
template <class F>
Subspace<F> radical_submodule(const Mod<F>& m);

template <class F>
Projection<F> semisimple_top(const Mod<F>& m);

template <class F>
struct KernelCokernel {
  Inclusion<F> kernel;
  Inclusion<F> image;
  Projection<F> cokernel;
};
template <class F>
KernelCokernel<F> kernel_cokernel(const ModHom<F>& h);

template <class F>
struct DirectSum {
  Mod<F> sum;
  std::vector<ModHom<F>> injections;
  std::vector<ModHom<F>> projections;
};
template <class F>
DirectSum<F> direct_sum(const std::vector<Mod<F>>& ms);

template <class F>
struct Pushout {
  Mod<F> object;
  ModHom<F> from_y;
  ModHom<F> from_z;
  Projection<F> quotient;  // (Y ⊕ Z) -> object
};
/// Pushout of Y <-f- X -g-> Z, i.e. (Y ⊕ Z) / {(f x, -g x)}.
template <class F>
Pushout<F> pushout(const ModHom<F>& f, const ModHom<F>& g);

/// Basis of Hom(m, n), canonical: echelon form of the row-major flattened matrices.
template <class F>
std::vector<ModHom<F>> hom_space(const Mod<F>& m, const Mod<F>& n);
/// Same space by solving the intertwining equations directly (quadratic size; small modules only).
template <class F>
std::vector<ModHom<F>> hom_space_by_intertwiners(const Mod<F>& m, const Mod<F>& n);

/// M* = Hom(M, Λ) on the opposite side, together with the basis maps M -> Λ it is built from.
template <class F>
struct StarDual {
  Mod<F> dual;
  std::vector<Matrix<F>> basis;  // each Λ.dim x M.dim
  Subspace<F> flat;              // echelon span of the flattened basis, for coordinates
  Vec<F> coordinates(const Matrix<F>& phi) const;
};
template <class F>
StarDual<F> star_dual(const Mod<F>& m);
/// h* : N* -> M* for h : M -> N.
template <class F>
ModHom<F> star_hom(const ModHom<F>& h, const StarDual<F>& source_star, const StarDual<F>& target_star);
/// x -> (phi -> phi(x)), M -> M**.
template <class F>
ModHom<F> evaluation_hom(const Mod<F>& m);

/// Vector-space dual with transposed action, on the opposite side.
template <class F>
Mod<F> vector_space_dual(const Mod<F>& m);
template <class F>
ModHom<F> vector_space_dual_hom(const ModHom<F>& h, const Mod<F>& dual_source, const Mod<F>& dual_target);

/// Basis of Ext^1(c, a) as cocycle representatives, echelon ordered; see extension_from_cocycle.
template <class F>
std::size_t ext1_class_count(const Mod<F>& c, const Mod<F>& a);
/// 0 -> a -> E -> c -> 0 for the class with the given index (0 = split, k >= 1 = k-th basis class).
template <class F>
ExactSeq<F> extension_from_cocycle(const Mod<F>& c, const Mod<F>& a, std::size_t class_index);

struct RandomModuleParams {
  std::size_t max_source_rank = 2;  // source rank uniform in [0, max]
  std::size_t max_target_rank = 2;  // target rank uniform in [1, max]
  bool post_process = true;
};
enum class PostStep { none, syzygy, transpose, star, extension };
const char* to_string(PostStep s);

template <class F>
struct RandomModule {
  Mod<F> module;
  PostStep step = PostStep::none;
};
/// Cokernel of a random map between free modules, then a seed-chosen post-processing step.
template <class F>
RandomModule<F> random_module(const RingPtr<F>& ring, Side side, SplitMix64& rng, const RandomModuleParams& params);

}  // namespace tfl
