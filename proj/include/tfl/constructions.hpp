#pragma once

#include <string>
#include <vector>

#include "tfl/invariants.hpp"

namespace tfl {

/// Checks performed on a constructed object; `ok` is false as soon as one fails.
struct Certificate {
  bool ok = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    checks.push_back(what);
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

template <class F>
struct Construction {
  ExactSeq<F> seq;
  Certificate cert;
};

/// 0 -> M -> P_{n-1} -> ... -> P_0 -> A -> 0 with projective P_i and A ∈ ⊥n, built by dualizing a
/// projective resolution of M*. Throws PreconditionError unless M is n-torsionfree (n >= 1).
template <class F>
Construction<F> cosyzygy_embedding(const Mod<F>& m, std::size_t n, AnalysisOptions opts = {});

/// For 0 -> A -f-> B -> C -> 0: the sequences 0 -> C* -> B* -> A* -> Coker f* -> 0 and
/// 0 -> Coker f* -> Tr C -> Tr B -> Tr A -> 0, with Tr B taken from the horseshoe presentation.
template <class F>
struct SesStar {
  ExactSeq<F> duals;
  ExactSeq<F> transposes;
  Certificate cert;
};
template <class F>
SesStar<F> star_of_ses(const ExactSeq<F>& s);

/// 0 -> M -> T1 -> T0 -> A -> 0 with T0, T1 ∞-torsionfree becomes 0 -> M -> P -> T -> A -> 0 with P
/// projective and T ∞-torsionfree (two pushouts through an embedding T1 -> P with cokernel in ⊥1).
template <class F>
Construction<F> projective_bridge(const ExactSeq<F>& s, AnalysisOptions opts = {});

/// From 0 -> T_n -> ... -> T_0 -> M -> 0 with ∞-torsionfree T_i, builds 0 -> H -> T -> M -> 0 with
/// pd H <= n-1 and T ∞-torsionfree. `tres` lists 0, T_n, ..., T_0, M, 0 as its objects.
template <class F>
Construction<F> torsionfree_compress(const Mod<F>& m, const ExactSeq<F>& tres, std::size_t n,
                                     AnalysisOptions opts = {});

/// 0 -> M -> N -> T -> 0 with pd N <= n, T ∈ ⊥1 and T ∞-torsionfree.
template <class F>
Construction<F> embed_into_finite_pd(const Mod<F>& m, std::size_t n, const ExactSeq<F>& tres,
                                     AnalysisOptions opts = {});

/// The truncated minimal (or free) resolution 0 -> Ω^n M -> P_{n-1} -> ... -> P_0 -> M -> 0 as a
/// sequence of the shape torsionfree_compress expects.
template <class F>
ExactSeq<F> truncated_resolution(const Mod<F>& m, std::size_t n);

}  // namespace tfl
