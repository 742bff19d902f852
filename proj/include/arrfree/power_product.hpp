#ifndef ARRFREE_POWER_PRODUCT_HPP
#define ARRFREE_POWER_PRODUCT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "arrfree/errors.hpp"

namespace arrfree {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a monomial x_1^a_1 ... x_l^a_l. Stored inline so the
/// Groebner hot path never allocates for a monomial.
class PowerProduct {
 public:
  using exponent_type = std::uint16_t;

  PowerProduct() = default;

  /// The monomial 1 in `nvars` variables.
  explicit PowerProduct(std::size_t nvars) : nvars_(checked_nvars(nvars)) {}

  PowerProduct(std::initializer_list<unsigned> exps) : PowerProduct(std::span(exps.begin(), exps.size())) {}

  explicit PowerProduct(std::span<const unsigned> exps) : nvars_(checked_nvars(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  /// x_i in `nvars` variables (0-based index).
  static PowerProduct variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    PowerProduct t(nvars);
    if (i >= nvars) throw DimensionError("variable index out of range");
    t.set(i, power);
    return t;
  }

  std::size_t size() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= nvars_) throw DimensionError("variable index out of range");
    if (e > std::numeric_limits<exponent_type>::max()) throw ExponentOverflow("exponent too large");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<exponent_type>(e);
  }

  std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

  /// Largest 0-based index of a variable dividing this monomial; -1 for 1.
  int max_variable() const noexcept {
    for (int i = static_cast<int>(nvars_) - 1; i >= 0; --i)
      if (exps_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }

  bool divides(const PowerProduct& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const PowerProduct& other) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
    same_size(a, b);
    PowerProduct r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
      if (e > std::numeric_limits<exponent_type>::max()) throw ExponentOverflow("exponent overflow in product");
      r.exps_[i] = static_cast<exponent_type>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// Exact quotient; `b` must divide `a`.
  friend PowerProduct operator/(const PowerProduct& a, const PowerProduct& b) {
    same_size(a, b);
    if (!b.divides(a)) throw std::domain_error("power product does not divide");
    PowerProduct r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<exponent_type>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend PowerProduct lcm(const PowerProduct& a, const PowerProduct& b) {
    same_size(a, b);
    PowerProduct r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) noexcept {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ &&
           std::equal(a.exps_.begin(), a.exps_.begin() + a.nvars_, b.exps_.begin());
  }

  std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
    return h;
  }

  static void same_size(const PowerProduct& a, const PowerProduct& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("power products have different lengths");
  }

 private:
  static std::uint8_t checked_nvars(std::size_t n) {
    if (n > kMaxVariables) throw DimensionError("too many variables (max 16)");
    return static_cast<std::uint8_t>(n);
  }

  std::array<exponent_type, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// DegRevLex with x_1 > x_2 > ... > x_l: higher total degree wins; on a tie
/// a > b iff the last nonzero entry of a - b is negative.
inline std::strong_ordering cmp_degrevlex(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct::same_size(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

/// Strict "greater" under DegRevLex; sorts leading terms first.
struct DegRevLexGreater {
  bool operator()(const PowerProduct& a, const PowerProduct& b) const { return cmp_degrevlex(a, b) > 0; }
};

struct PowerProductHash {
  std::size_t operator()(const PowerProduct& t) const noexcept { return t.hash(); }
};

/// Display names: x,y,z,w when l <= 4, otherwise x1..xl.
inline std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  if (nvars <= 4) {
    static constexpr const char* kShort[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(kShort[i]);
  } else {
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

/// Renders x^2*y style; "1" for the unit monomial.
inline std::string to_string(const PowerProduct& t, const std::vector<std::string>& names) {
  if (t.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out;
}

inline std::string to_string(const PowerProduct& t) { return to_string(t, default_variable_names(t.size())); }

}  // namespace arrfree

#endif  // ARRFREE_POWER_PRODUCT_HPP
