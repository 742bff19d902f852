#ifndef ARRFREE_MONOMIAL_IDEAL_HPP
#define ARRFREE_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/power_product.hpp"

namespace arrfree {

/// Sort key for generator lists: increasing degree, and inside one degree
/// decreasing DegRevLex (x^4, x^3y, x^2y^2, xy^4, y^6).
inline bool generator_order(const PowerProduct& a, const PowerProduct& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return cmp_degrevlex(a, b) > 0;
}

/// Drops every generator divisible by another one (and duplicates).
inline std::vector<PowerProduct> minimalize(std::vector<PowerProduct> gens) {
  std::sort(gens.begin(), gens.end(), generator_order);
  std::vector<PowerProduct> out;
  for (const auto& t : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const PowerProduct& g) { return g.divides(t); });
    if (!redundant) out.push_back(t);
  }
  return out;
}

/// Monomial ideal in K[x_1..x_l] given by its minimal generators. The empty
/// generator list is the zero ideal; a generator equal to 1 is the whole ring.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  explicit MonomialIdeal(std::size_t nvars, std::vector<PowerProduct> gens = {}) : nvars_(nvars) {
    for (const auto& g : gens)
      if (g.size() != nvars) throw DimensionError("generator has wrong number of variables");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal whole_ring(std::size_t nvars) { return MonomialIdeal(nvars, {PowerProduct(nvars)}); }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<PowerProduct>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_whole_ring() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const PowerProduct& t) const {
    if (t.size() != nvars_) throw DimensionError("power product has wrong number of variables");
    return std::any_of(gens_.begin(), gens_.end(), [&](const PowerProduct& g) { return g.divides(t); });
  }

  /// Largest generator degree; the zero ideal has none.
  unsigned max_degree() const {
    if (gens_.empty()) throw std::domain_error("zero ideal has no generators");
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// Sum of ideals.
  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("ideals live in different rings");
    std::vector<PowerProduct> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(a.nvars_, std::move(g));
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<PowerProduct> gens_;
};

inline std::vector<std::string> generator_strings(const MonomialIdeal& b, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& g : b.generators()) out.push_back(to_string(g, names));
  return out;
}

inline std::vector<std::string> generator_strings(const MonomialIdeal& b) {
  return generator_strings(b, default_variable_names(b.nvars()));
}

/// "<x^2, x*y, y^5>"; the zero ideal prints as "<0>".
inline std::string to_string(const MonomialIdeal& b) {
  if (b.is_zero()) return "<0>";
  std::string out = "<";
  auto strs = generator_strings(b);
  for (std::size_t i = 0; i < strs.size(); ++i) out += (i ? ", " : "") + strs[i];
  return out + ">";
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of degree-d power products in `k` variables.
inline std::uint64_t monomial_count(std::size_t k, unsigned d) {
  if (k == 0) return d == 0 ? 1 : 0;
  return binomial(d + k - 1, k - 1);
}

namespace detail {

// Degree-d power products in x_1..x_k outside the ideal spanned by `gens`,
// all of which only involve x_1..x_k. Splits on the exponent of x_k.
inline std::uint64_t count_outside(std::vector<PowerProduct> gens, std::size_t k, unsigned d) {
  std::erase_if(gens, [&](const PowerProduct& g) { return g.degree() > d; });
  if (std::any_of(gens.begin(), gens.end(), [](const PowerProduct& g) { return g.is_one(); })) return 0;
  if (gens.empty()) return monomial_count(k, d);
  if (k == 1) {
    unsigned a = gens.front()[0];
    for (const auto& g : gens) a = std::min(a, g[0]);
    return d < a ? 1 : 0;
  }
  const std::size_t last = k - 1;
  std::uint64_t total = 0;
  for (unsigned e = 0; e <= d; ++e) {
    std::vector<PowerProduct> colon;
    for (const auto& g : gens) {
      if (g[last] > e) continue;
      PowerProduct h = g;
      h.set(last, 0);
      colon.push_back(h);
    }
    total += count_outside(minimalize(std::move(colon)), k - 1, d - e);
  }
  return total;
}

}  // namespace detail

/// #{degree-d power products in x_1..x_i not in B}, i.e. the Hilbert function
/// of K[x_1..x_i] / (B + (x_{i+1},...,x_l)) in degree d.
inline std::uint64_t count_standard_monomials(const MonomialIdeal& b, std::size_t i, unsigned d) {
  if (i > b.nvars()) throw DimensionError("section index out of range");
  std::vector<PowerProduct> restricted;
  for (const auto& g : b.generators())
    if (g.max_variable() < static_cast<int>(i)) restricted.push_back(g);
  return detail::count_outside(std::move(restricted), i, d);
}

}  // namespace arrfree

#endif  // ARRFREE_MONOMIAL_IDEAL_HPP
