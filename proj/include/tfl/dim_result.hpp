#pragma once

#include <optional>
#include <string>

namespace tfl {

/// Value of a homological dimension search. GREATER_THAN(b) means every test up to
/// degree b was executed and failed; `certified` marks finite values whose "for all
/// degrees" part was discharged by a finiteness certificate instead of a bound.
struct DimResult {
  enum class Kind { finite, infinity, greater_than };

  Kind kind = Kind::finite;
  int value = 0;  // the dimension, or the bound for greater_than
  bool certified = false;
  std::string note;

  static DimResult finite(int v, bool certified, std::string note = {}) {
    return {Kind::finite, v, certified, std::move(note)};
  }
  static DimResult infinite(std::string note) { return {Kind::infinity, -1, true, std::move(note)}; }
  static DimResult greater_than(int bound, std::string note = {}) {
    return {Kind::greater_than, bound, true, std::move(note)};
  }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_certified_finite() const { return kind == Kind::finite && certified; }
  std::optional<int> certified_value() const {
    if (is_certified_finite()) return value;
    return std::nullopt;
  }
  /// True when the result proves the dimension is strictly larger than n.
  bool proves_greater_than(int n) const {
    switch (kind) {
      case Kind::infinity: return true;
      case Kind::greater_than: return value >= n;
      case Kind::finite: return certified && value > n;
    }
    return false;
  }
  /// True when the result proves the dimension is at most n.
  bool proves_at_most(int n) const { return kind == Kind::finite && certified && value <= n; }

  std::string to_string() const {
    switch (kind) {
      case Kind::infinity: return "INFINITY";
      case Kind::greater_than: return "GREATER_THAN(" + std::to_string(value) + ")";
      case Kind::finite: return std::to_string(value);
    }
    return "?";
  }

  bool operator==(const DimResult& o) const {
    return kind == o.kind && value == o.value && certified == o.certified;
  }
};

}  // namespace tfl
