#include "tfl/field.hpp"

#include <charconv>

namespace tfl {

namespace {

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw FieldError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return {Kind::rationals, 0};
  if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0) {
    auto p = parse_int(text.substr(3));
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
      throw FieldError("field modulus must be a prime below 2^31: " + std::string(text));
    return {Kind::prime_field, static_cast<std::uint32_t>(p)};
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected gf:p or qq)");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "qq" : "gf:" + std::to_string(p);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p))
    throw FieldError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw FieldError("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_int(text));
  Elem num = from_int(parse_int(text.substr(0, slash)));
  Elem den = from_int(parse_int(text.substr(slash + 1)));
  return mul(num, inv(den));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a.is_zero()) throw FieldError("division by zero in QQ");
  return Elem(1) / a;
}

RationalField::Elem RationalField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Elem(parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  return Elem(num) / Elem(den);
}

std::string RationalField::to_string(const Elem& a) const {
  auto num = boost::multiprecision::numerator(a);
  auto den = boost::multiprecision::denominator(a);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace tfl
