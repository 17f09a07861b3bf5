#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace tfl {

/// Raised when operands over different fields meet, or when a field spec is invalid.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  enum class Kind { prime_field, rationals };
  Kind kind = Kind::prime_field;
  std::uint32_t p = 0;  // meaningful iff kind == prime_field

  /// Parses "gf:p" or "qq".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// GF(p) with p < 2^31; elements are canonical residues 0 <= e < p.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  /// GF(2); placeholder so containers of matrices can be default-constructed.
  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - f*b, the inner step of elimination.
  Elem sub_mul(Elem a, Elem f, Elem b) const { return sub(a, mul(f, b)); }
  Elem inv(Elem a) const;

  Elem from_int(std::int64_t v) const;
  /// Accepts "k" or "k/m" with integers k, m.
  Elem parse(std::string_view text) const;
  std::string to_string(Elem a) const { return std::to_string(a); }

  /// Uniform draw from a 64-bit source; `draw(n)` must return a value in [0, n).
  template <class Draw>
  Elem random(Draw&& draw) const {
    return static_cast<Elem>(draw(p_));
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP; values are always kept in lowest terms.
class RationalField {
 public:
  using Elem = boost::multiprecision::mpq_rational;

  FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub_mul(const Elem& a, const Elem& f, const Elem& b) const { return a - f * b; }
  Elem inv(const Elem& a) const;

  Elem from_int(std::int64_t v) const { return Elem(v); }
  Elem parse(std::string_view text) const;
  std::string to_string(const Elem& a) const;

  /// Random rationals are small integers, uniform in [-3, 3].
  template <class Draw>
  Elem random(Draw&& draw) const {
    return Elem(static_cast<long>(draw(7)) - 3);
  }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace tfl
