#pragma once

#include <string>

#include "tfl/resolution.hpp"

namespace tfl::testing {

using GF = PrimeField;
using QQ = RationalField;

template <class F = GF>
RingPtr<F> ring(const std::string& name, F field = F(101)) {
  return make_ring(builtin_algebra(name, field));
}

inline RingPtr<QQ> qring(const std::string& name) { return make_ring(builtin_algebra(name, QQ{})); }

/// Simple module at (0-based) vertex j.
template <class F>
Mod<F> simple(const RingPtr<F>& r, std::size_t j = 0, Side side = Side::left) {
  return simple_modules(r, side).at(j);
}

template <class F>
Mod<F> regular(const RingPtr<F>& r, Side side = Side::left) {
  return regular_module(r, side);
}

}  // namespace tfl::testing
