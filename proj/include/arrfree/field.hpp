#ifndef ARRFREE_FIELD_HPP
#define ARRFREE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arrfree {

using Rational = mpq_class;

/// Coefficients in Q, exact, always canonical (lowest terms).
class RationalField {
 public:
  using value_type = Rational;
  static constexpr bool kExact = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_rational(const Rational& q) const { return q; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  /// a -= b * c
  void sub_mul(value_type& a, const value_type& b, const value_type& c) const {
    a -= b * c;
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string mode() const { return "exact"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/p for a prime p < 2^31. Values are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool kExact = false;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("modulus must be a prime below 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  value_type from_rational(const Rational& q) const {
    mpz_class p = p_;
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    if (num < 0) num += p;
    return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // a^(p-2)
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
      if (e & 1u) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<value_type>(result);
  }
  void sub_mul(value_type& a, value_type b, value_type c) const { a = sub(a, mul(b, c)); }

  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string mode() const { return "mod:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace arrfree

#endif  // ARRFREE_FIELD_HPP
