#ifndef ARRFREE_MONOMIAL_HPP
#define ARRFREE_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/monomial_ideal.hpp"
#include "arrfree/strongly_stable.hpp"

namespace arrfree {

enum class SectionMode {
  /// Rows are Hilbert functions of generic sections; needs a Borel ideal.
  strongly_stable,
  /// Plain monomial counts, no sectional meaning claimed.
  raw_count,
};

/// M(i, d) for i = 1..l and d = 0..dmax: number of degree-d power products
/// in x_1..x_i outside B. For strongly stable B this is the sectional matrix
/// of S/B (cutting by the last l-i variables is cutting by generic forms).
class SectionalMatrix {
 public:
  SectionalMatrix(MonomialIdeal source, unsigned dmax, SectionMode mode = SectionMode::strongly_stable)
      : source_(std::move(source)), dmax_(dmax), mode_(mode) {
    if (mode_ == SectionMode::strongly_stable && !is_strongly_stable(source_))
      throw std::invalid_argument("sectional matrix of a non strongly stable ideal; use SectionMode::raw_count");
    values_.assign(source_.nvars(), std::vector<std::uint64_t>(dmax_ + 1, 0));
    for (std::size_t i = 1; i <= source_.nvars(); ++i)
      for (unsigned d = 0; d <= dmax_; ++d) values_[i - 1][d] = count_standard_monomials(source_, i, d);
  }

  std::size_t rows() const noexcept { return values_.size(); }
  unsigned dmax() const noexcept { return dmax_; }
  SectionMode mode() const noexcept { return mode_; }
  const MonomialIdeal& source() const noexcept { return source_; }
  const std::vector<std::vector<std::uint64_t>>& values() const noexcept { return values_; }

  /// Row i is 1-based as in M(i, d); d = 0..dmax.
  std::uint64_t operator()(std::size_t i, unsigned d) const {
    if (i < 1 || i > rows() || d > dmax_) throw std::out_of_range("sectional matrix position out of range");
    return values_[i - 1][d];
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& row) {
      return std::all_of(row.begin(), row.end(), [](std::uint64_t v) { return v == 0; });
    });
  }

  friend bool operator==(const SectionalMatrix& a, const SectionalMatrix& b) {
    return a.values_ == b.values_ && a.source_ == b.source_;
  }

 private:
  MonomialIdeal source_;
  unsigned dmax_;
  SectionMode mode_;
  std::vector<std::vector<std::uint64_t>> values_;
};

/// reg + 2 (the freeness test reads up to d0 + 2 <= reg + 2); 2 for the
/// zero ideal.
inline unsigned default_dmax(const MonomialIdeal& b) { return b.is_zero() ? 2 : b.max_degree() + 2; }

inline SectionalMatrix sectional_matrix(const MonomialIdeal& b, std::optional<unsigned> dmax = std::nullopt,
                                        SectionMode mode = SectionMode::strongly_stable) {
  return SectionalMatrix(b, dmax.value_or(default_dmax(b)), mode);
}

/// True iff some minimal generator of degree d lies in K[x_1..x_i] and is
/// divisible by x_i (i is 1-based).
inline bool has_corner_generator(const MonomialIdeal& b, std::size_t i, unsigned d) {
  return std::any_of(b.generators().begin(), b.generators().end(), [&](const PowerProduct& g) {
    return g.degree() == d && g.max_variable() == static_cast<int>(i) - 1;
  });
}

/// M(i, d) = M(i-1, d) + M(i, d-1), for 2 <= i <= l and 1 <= d <= dmax.
///
/// For strongly stable sources the answer is cross-checked against the
/// generators: equality holds exactly when no minimal generator of degree d
/// inside K[x_1..x_i] is divisible by x_i.
inline bool triangle_equality(const SectionalMatrix& m, std::size_t i, unsigned d) {
  if (i < 2 || i > m.rows() || d < 1 || d > m.dmax()) throw std::out_of_range("triangle position out of range");
  bool eq = m(i, d) == m(i - 1, d) + m(i, d - 1);
  if (m.mode() == SectionMode::strongly_stable && eq == has_corner_generator(m.source(), i, d))
    throw InternalConsistencyError("triangle equality disagrees with the generator set at (" + std::to_string(i) +
                                   "," + std::to_string(d) + ")");
  return eq;
}

/// nullopt stands for an infinite reduction number.
using ReductionNumber = std::optional<unsigned>;

/// r_i = min{d | x_{l-i}^{d+1} in B}, 0 <= i <= l-1.
inline ReductionNumber reduction_number(const MonomialIdeal& b, std::size_t i) {
  const std::size_t l = b.nvars();
  if (i >= l) throw std::out_of_range("reduction number index out of range");
  const std::size_t var = l - i - 1;  // 0-based index of x_{l-i}
  std::optional<unsigned> best;
  for (const auto& g : b.generators()) {
    if (g.degree() != g[var]) continue;  // not a pure power of x_{l-i}
    unsigned d = g.degree() == 0 ? 0 : g.degree() - 1;
    if (!best || d < *best) best = d;
  }
  return best;
}

/// max{d | M(l-i, d) != 0} read off a matrix; nullopt when row l-i does not
/// reach zero inside the stored range.
inline ReductionNumber reduction_number(const SectionalMatrix& m, std::size_t i) {
  const std::size_t row = m.rows() - i;
  if (m(row, m.dmax()) != 0) return std::nullopt;
  for (unsigned d = m.dmax() + 1; d-- > 0;)
    if (m(row, d) != 0) return d;
  return 0;  // whole ring: row is identically zero
}

/// Highest degree of a minimal generator.
inline unsigned regularity_stable(const StronglyStableIdeal& b) {
  if (b.ideal().is_zero()) throw std::domain_error("regularity of the zero ideal is undefined");
  return b.ideal().max_degree();
}

/// Graded Betti numbers of a strongly stable ideal by the Eliahou-Kervaire
/// count beta_{i,i+j} = sum_k C(k-1, i) m_{k,j}.
struct BettiTable {
  /// m[{k, j}]: minimal generators of degree j whose largest variable is x_k.
  std::map<std::pair<std::size_t, unsigned>, std::uint64_t> m_table;
  /// betti[i][total degree] = beta_{i, total degree}.
  std::vector<std::map<unsigned, std::uint64_t>> betti;

  std::map<unsigned, std::uint64_t> beta0() const { return betti.empty() ? std::map<unsigned, std::uint64_t>{} : betti[0]; }
  std::map<unsigned, std::uint64_t> beta1() const { return betti.size() < 2 ? std::map<unsigned, std::uint64_t>{} : betti[1]; }

  std::uint64_t operator()(std::size_t i, unsigned degree) const {
    if (i >= betti.size()) return 0;
    auto it = betti[i].find(degree);
    return it == betti[i].end() ? 0 : it->second;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline BettiTable betti_eliahou_kervaire(const StronglyStableIdeal& b) {
  BettiTable t;
  const std::size_t l = b.nvars();
  t.betti.resize(std::max<std::size_t>(l, 1));
  for (const auto& g : b.generators()) {
    // the unit generator behaves like k = 1 (no syzygies)
    std::size_t k = static_cast<std::size_t>(std::max(g.max_variable(), 0)) + 1;
    ++t.m_table[{k, g.degree()}];
  }
  for (const auto& [key, count] : t.m_table) {
    const auto [k, j] = key;
    for (std::size_t i = 0; i + 1 <= k; ++i) {
      std::uint64_t c = binomial(k - 1, i) * count;
      if (c != 0) t.betti[i][static_cast<unsigned>(i) + j] += c;
    }
  }
  while (t.betti.size() > 1 && t.betti.back().empty()) t.betti.pop_back();
  return t;
}

/// x_1^{n-1}, x_1^{n-2} x_2^{lambda_1}, ..., x_2^{lambda_{n-1}}.
struct LexSegmentShape {
  std::size_t n = 0;
  std::vector<unsigned> lambda;  // lambda_1 < ... < lambda_{n-1}

  friend bool operator==(const LexSegmentShape&, const LexSegmentShape&) = default;
};

/// Recognizes the Cohen-Macaulay codimension-2 strongly stable shape: only
/// x_1, x_2 occur, exactly one generator per x_1-power from n-1 down to 0,
/// and the x_2-exponents strictly increase.
inline std::optional<LexSegmentShape> is_cm_codim2_stable(const StronglyStableIdeal& b) {
  const MonomialIdeal& ideal = b.ideal();
  if (ideal.nvars() < 2 || ideal.is_zero() || ideal.is_whole_ring()) return std::nullopt;
  std::vector<PowerProduct> gens = ideal.generators();
  for (const auto& g : gens)
    if (g.max_variable() > 1) return std::nullopt;
  std::sort(gens.begin(), gens.end(), [](const PowerProduct& a, const PowerProduct& c) { return a[0] > c[0]; });
  if (gens.front()[1] != 0) return std::nullopt;
  const std::size_t n = gens.front()[0] + 1;
  if (gens.size() != n) return std::nullopt;
  LexSegmentShape shape{n, {}};
  for (std::size_t i = 1; i < n; ++i) {
    if (gens[i][0] != n - 1 - i) return std::nullopt;
    unsigned lam = gens[i][1];
    if (lam == 0 || (!shape.lambda.empty() && lam <= shape.lambda.back())) return std::nullopt;
    shape.lambda.push_back(lam);
  }
  return shape;
}

/// Generator-side Cohen-Macaulay test for strongly stable B of codimension
/// c: a pure power of x_c is a generator and no generator uses x_{c+1..l}.
inline bool is_cohen_macaulay_stable(const StronglyStableIdeal& b, std::size_t codim) {
  const MonomialIdeal& ideal = b.ideal();
  if (codim < 1 || codim > ideal.nvars()) throw std::out_of_range("codimension out of range");
  bool pure_power = false;
  for (const auto& g : ideal.generators()) {
    if (g.max_variable() >= static_cast<int>(codim)) return false;
    if (g.degree() > 0 && g[codim - 1] == g.degree()) pure_power = true;
  }
  return pure_power;
}

/// Sectional-matrix Cohen-Macaulay test: d0 = r_{l-c} is finite and the
/// triangle equality holds in row c+1 for every 1 <= d <= reg. The matrix
/// must reach degree reg (and one past d0 so finiteness is visible).
inline bool is_cohen_macaulay_sectional(const SectionalMatrix& m, std::size_t codim, unsigned regularity) {
  const std::size_t l = m.rows();
  if (codim < 1 || codim > l) throw std::out_of_range("codimension out of range");
  if (m.dmax() < regularity + 1) throw std::out_of_range("sectional matrix too short for the CM test");
  if (!reduction_number(m, l - codim)) return false;
  if (codim == l) return true;
  for (unsigned d = 1; d <= regularity; ++d)
    if (!triangle_equality(m, codim + 1, d)) return false;
  return true;
}

}  // namespace arrfree

#endif  // ARRFREE_MONOMIAL_HPP
