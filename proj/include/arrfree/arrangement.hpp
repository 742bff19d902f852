#ifndef ARRFREE_ARRANGEMENT_HPP
#define ARRFREE_ARRANGEMENT_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/gin.hpp"
#include "arrfree/linear_change.hpp"
#include "arrfree/monomial.hpp"
#include "arrfree/polynomial.hpp"
#include "arrfree/strongly_stable.hpp"

namespace arrfree {

/// A form handed to an arrangement is not a nonzero linear homogeneous
/// polynomial.
class InvalidForm : public std::invalid_argument {
 public:
  InvalidForm(std::size_t index, const std::string& what)
      : std::invalid_argument("hyperplane " + std::to_string(index + 1) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Central hyperplane arrangement {alpha_1 = 0, ..., alpha_n = 0} in K^l.
class Arrangement {
 public:
  Arrangement(std::size_t nvars, std::vector<QPolynomial> forms, std::vector<std::string> labels = {})
      : nvars_(nvars), forms_(std::move(forms)), labels_(std::move(labels)) {
    if (nvars_ < 1) throw DimensionError("arrangement needs at least one variable");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      const auto& f = forms_[i];
      if (f.nvars() != nvars_) throw DimensionError("hyperplane " + std::to_string(i + 1) + " has wrong dimension");
      if (f.is_zero()) throw InvalidForm(i, "form is zero");
      if (f.total_degree() != 1 || !f.is_homogeneous()) throw InvalidForm(i, "form is not linear homogeneous");
    }
    if (!labels_.empty() && labels_.size() != forms_.size())
      throw std::invalid_argument("one label per hyperplane expected");
  }

  /// Row r holds the coefficients of alpha_r.
  static Arrangement from_coefficients(const RationalMatrix& rows, std::size_t nvars) {
    std::vector<QPolynomial> forms;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != nvars) throw DimensionError("coefficient row " + std::to_string(r + 1) + " has wrong length");
      std::vector<Term<RationalField>> terms;
      for (std::size_t c = 0; c < nvars; ++c)
        if (sgn(rows[r][c]) != 0) terms.push_back({PowerProduct::variable(nvars, c), rows[r][c]});
      forms.emplace_back(nvars, std::move(terms));
    }
    return Arrangement(nvars, std::move(forms));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return forms_.size(); }
  const std::vector<QPolynomial>& forms() const noexcept { return forms_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  RationalMatrix coefficient_matrix() const {
    RationalMatrix m(forms_.size(), std::vector<Rational>(nvars_, 0));
    for (std::size_t r = 0; r < forms_.size(); ++r)
      for (const auto& t : forms_[r].terms()) m[r][static_cast<std::size_t>(t.monomial.max_variable())] = t.coefficient;
    return m;
  }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.nvars_ == b.nvars_ && a.forms_ == b.forms_;
  }

 private:
  std::size_t nvars_;
  std::vector<QPolynomial> forms_;
  std::vector<std::string> labels_;
};

struct ArrangementFlags {
  bool central = true;
  bool distinct = true;
  bool essential = false;
  std::size_t n = 0;
  std::size_t l = 0;
};

/// Centrality is guaranteed by construction; distinctness is a pairwise
/// proportionality test; essential means the coefficient matrix has rank l.
inline ArrangementFlags validate(const Arrangement& a) {
  ArrangementFlags flags;
  flags.n = a.size();
  flags.l = a.nvars();
  const RationalMatrix m = a.coefficient_matrix();
  for (std::size_t i = 0; i < m.size() && flags.distinct; ++i)
    for (std::size_t j = i + 1; j < m.size() && flags.distinct; ++j)
      if (rank({m[i], m[j]}) < 2) flags.distinct = false;
  flags.essential = !m.empty() && rank(m) == a.nvars();
  return flags;
}

/// Q(A), the product of the forms.
inline QPolynomial defining_polynomial(const Arrangement& a) {
  QPolynomial q = QPolynomial::constant(a.nvars(), 1);
  for (const auto& f : a.forms()) q *= f;
  return q;
}

/// The l partial derivatives of Q(A). Q itself is left out because
/// n Q = sum x_i dQ/dx_i for homogeneous Q of degree n; that identity is
/// checked here.
inline std::vector<QPolynomial> jacobian_ideal(const Arrangement& a) {
  const QPolynomial q = defining_polynomial(a);
  std::vector<QPolynomial> partials;
  QPolynomial euler(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    partials.push_back(partial_derivative(q, i));
    euler += QPolynomial::variable(a.nvars(), i) * partials.back();
  }
  if (!(euler == q.scaled(Rational(static_cast<long>(a.size())))))
    throw InternalConsistencyError("Euler identity failed for the defining polynomial");
  return partials;
}

/// e_1 <= ... <= e_l, all positive.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {
    if (e_.empty()) throw std::invalid_argument("exponent vector is empty");
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) throw std::invalid_argument("exponents must be positive");
      if (i > 0 && e_[i] < e_[i - 1]) throw std::invalid_argument("exponents must be non-decreasing");
    }
  }
  ExponentVector(std::initializer_list<unsigned> e) : ExponentVector(std::vector<unsigned>(e)) {}

  const std::vector<unsigned>& values() const noexcept { return e_; }
  std::size_t size() const noexcept { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_.at(i); }
  unsigned sum() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<unsigned> e_;
};

inline std::string to_string(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

namespace detail {

inline std::map<unsigned, std::uint64_t> degree_counts(const MonomialIdeal& b) {
  std::map<unsigned, std::uint64_t> out;
  for (const auto& g : b.generators()) ++out[g.degree()];
  return out;
}

inline std::uint64_t count_at(const std::map<unsigned, std::uint64_t>& m, unsigned d) {
  auto it = m.find(d);
  return it == m.end() ? 0 : it->second;
}

}  // namespace detail

/// Exponents of an essential free arrangement read off its rgin: the top
/// exponent is lambda_{n-1} - n + 2 and #{i | e_i = a} = beta_{0,a+n-2} -
/// beta_{0,a+n-1} for the smaller values.
inline ExponentVector exponents_from_rgin(const StronglyStableIdeal& b, std::size_t l) {
  auto shape = is_cm_codim2_stable(b);
  if (!shape) throw NotAFreeRgin("ideal is not a Cohen-Macaulay codimension-2 lex segment: " + to_string(b));
  const std::size_t n = shape->n;
  const unsigned top_lambda = shape->lambda.back();
  if (top_lambda + 2 < n + 1) throw NotAFreeRgin("top x_2 exponent too small for a free rgin");
  const unsigned top = top_lambda + 2 - static_cast<unsigned>(n);
  const auto beta0 = detail::degree_counts(b.ideal());

  std::vector<unsigned> e;
  for (unsigned alpha = 1; alpha < top; ++alpha) {
    auto hi = detail::count_at(beta0, alpha + static_cast<unsigned>(n) - 2);
    auto lo = detail::count_at(beta0, alpha + static_cast<unsigned>(n) - 1);
    if (hi < lo) throw NotAFreeRgin("generator degree counts increase at degree " + std::to_string(alpha + n - 1));
    e.insert(e.end(), hi - lo, alpha);
  }
  if (e.size() > l) throw NotAFreeRgin("more small exponents than variables");
  e.resize(l, top);
  if (e.front() != 1 || std::accumulate(e.begin(), e.end(), std::size_t{0}) != n)
    throw NotAFreeRgin("degree data do not come from an essential free arrangement with l = " + std::to_string(l));
  return ExponentVector(std::move(e));
}

/// The lex-segment ideal forced by the exponents: l generators in degree
/// n-1 and #{i | e_i > j-n+1} in each degree j >= n.
inline StronglyStableIdeal rgin_from_exponents(const ExponentVector& e) {
  if (e[0] != 1) throw std::invalid_argument("exponents of an essential arrangement start with 1");
  const std::size_t l = e.size();
  const unsigned n = e.sum();
  std::vector<unsigned> degrees(l, n - 1);
  const unsigned top = e.values().back();
  for (unsigned j = n; j + 2 <= n + top; ++j) {
    auto count = std::count_if(e.values().begin(), e.values().end(), [&](unsigned ei) { return ei + n > j + 1; });
    degrees.insert(degrees.end(), static_cast<std::size_t>(count), j);
  }
  // generator i (0-based) is x_1^{n-1-i} x_2^{lambda_i}, degree d_i
  std::vector<PowerProduct> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    PowerProduct t(l);
    t.set(0, n - 1 - static_cast<unsigned>(i));
    if (i > 0) t.set(1, degrees[i] - (n - 1 - static_cast<unsigned>(i)));
    gens.push_back(t);
  }
  return StronglyStableIdeal(MonomialIdeal(l, std::move(gens)));
}

/// {x_1} together with {x_1 - a x_k | 1 <= a <= e_k} for k = 2..l; free with
/// exponents e (supersolvable).
inline Arrangement supersolvable_from_exponents(const ExponentVector& e) {
  if (e[0] != 1) throw std::invalid_argument("first exponent must be 1");
  const std::size_t l = e.size();
  RationalMatrix rows;
  std::vector<Rational> first(l, 0);
  first[0] = 1;
  rows.push_back(first);
  for (std::size_t k = 1; k < l; ++k) {
    for (unsigned a = 1; a <= e[k]; ++a) {
      std::vector<Rational> row(l, 0);
      row[0] = 1;
      row[k] = -static_cast<long>(a);
      rows.push_back(row);
    }
  }
  return Arrangement::from_coefficients(rows, l);
}

enum class Method { rgin, sectional, both };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::rgin: return "rgin";
    case Method::sectional: return "sectional";
    case Method::both: return "both";
  }
  return "both";
}

/// Freeness read off the generators of B = rgin(J(A)): B = S, or x_1^{n-1}
/// and a power of x_2 are minimal generators and no generator uses x_3..x_l.
inline bool rgin_says_free(const StronglyStableIdeal& b, std::size_t n) {
  const MonomialIdeal& ideal = b.ideal();
  if (ideal.is_whole_ring()) return true;
  bool has_x1 = false, has_x2 = false;
  for (const auto& g : ideal.generators()) {
    if (g.max_variable() > 1) return false;
    if (g.degree() > 0 && g[0] == g.degree() && g.degree() + 1 == n) has_x1 = true;
    if (ideal.nvars() >= 2 && g.degree() > 0 && g[1] == g.degree()) has_x2 = true;
  }
  return has_x1 && has_x2;
}

/// Evaluation of the row-3 test on a sectional matrix of S/J(A).
struct SectionalEvaluation {
  bool zero_matrix = false;
  std::optional<unsigned> d0;
  std::array<std::uint64_t, 3> row3{};  // M(3,d0), M(3,d0+1), M(3,d0+2)
  std::uint64_t row2_sum = 0;           // sum_{d<=d0} M(2,d)
  bool condition1 = false;
  bool condition2 = false;
  bool free = false;
};

/// free iff M is zero, or M(3,d0) = M(3,d0+1) = M(3,d0+2) and
/// M(3,d0) = sum_{d<=d0} M(2,d), with d0 = r_{l-2}. Line arrangements
/// (l <= 2) are free without reading row 3.
inline SectionalEvaluation evaluate_sectional_freeness(const SectionalMatrix& m) {
  SectionalEvaluation ev;
  const std::size_t l = m.rows();
  ev.zero_matrix = m.is_zero();
  if (ev.zero_matrix) {
    ev.free = true;
    return ev;
  }
  if (l < 2) throw InternalConsistencyError("nonzero quotient in one variable cannot come from a Jacobian");
  ev.d0 = reduction_number(m, l - 2);
  if (!ev.d0) throw InternalConsistencyError("r_{l-2} of a Jacobian ideal must be finite");
  if (l == 2) {
    ev.free = true;
    return ev;
  }
  const unsigned d0 = *ev.d0;
  if (m.dmax() < d0 + 2) throw std::out_of_range("sectional matrix must reach d0 + 2");
  for (unsigned k = 0; k < 3; ++k) ev.row3[k] = m(3, d0 + k);
  for (unsigned d = 0; d <= d0; ++d) ev.row2_sum += m(2, d);
  ev.condition1 = ev.row3[0] == ev.row3[1] && ev.row3[1] == ev.row3[2];
  ev.condition2 = ev.row3[0] == ev.row2_sum;
  ev.free = ev.condition1 && ev.condition2;
  return ev;
}

struct FreenessReport {
  bool free = false;
  bool trivially_free = false;  // rgin(J(A)) = S
  Method method = Method::both;
  std::size_t n = 0;
  std::size_t l = 0;
  bool essential = false;
  StronglyStableIdeal rgin{MonomialIdeal(1)};
  SectionalMatrix sectional{MonomialIdeal(1), 0};
  std::optional<unsigned> d0;
  std::optional<unsigned> regularity;
  std::optional<ExponentVector> exponents;
  BettiTable betti;
  GinCertificate provenance;
  std::optional<bool> rgin_verdict;
  std::optional<SectionalEvaluation> sectional_verdict;
  std::optional<LexSegmentShape> shape;
  std::vector<std::string> notes;
};

namespace detail {

// Shape facts a free rgin must have; a failure means the certificate lied.
inline void check_free_shape(const StronglyStableIdeal& b, const ArrangementFlags& flags,
                             const std::optional<LexSegmentShape>& shape, std::optional<unsigned> d0) {
  if (!shape) throw InternalConsistencyError("free rgin is not a lex segment");
  for (std::size_t i = 0; i + 1 < shape->lambda.size(); ++i) {
    unsigned gap = shape->lambda[i + 1] - shape->lambda[i];
    if (gap != 1 && gap != 2) throw InternalConsistencyError("lambda gap outside {1,2}");
  }
  if (shape->n != flags.n) throw InternalConsistencyError("free rgin must have n generators");
  auto counts = degree_counts(b.ideal());
  unsigned lo = static_cast<unsigned>(flags.n) - 1, hi = b.ideal().max_degree();
  for (unsigned d = lo; d <= hi; ++d)
    if (count_at(counts, d) == 0) throw InternalConsistencyError("free rgin has a degree hole at " + std::to_string(d));
  if (counts.begin()->first != lo) throw InternalConsistencyError("free rgin has a generator below degree n-1");
  if (d0 && shape->lambda.back() != *d0 + 1) throw InternalConsistencyError("lambda_{n-1} != d0 + 1");
  if (flags.essential) {
    if (count_at(counts, lo) != flags.l) throw InternalConsistencyError("free essential rgin needs l generators in degree n-1");
    if (hi + flags.l + 1 > 2 * flags.n) throw InternalConsistencyError("regularity above 2n - l - 1");
  }
}

}  // namespace detail

/// Full freeness analysis of a central arrangement: rgin(J(A)) under `cfg`,
/// its sectional matrix, Betti numbers and, for essential free arrangements,
/// the exponents. With Method::both the two verdicts must agree.
inline FreenessReport analyze(const Arrangement& a, const GinConfig& cfg, Method method = Method::both,
                              std::optional<unsigned> dmax = std::nullopt) {
  const ArrangementFlags flags = validate(a);
  if (!flags.distinct) throw std::invalid_argument("arrangement has repeated hyperplanes");
  if (flags.n == 0) throw std::invalid_argument("arrangement has no hyperplanes");

  GinResult g = rgin(jacobian_ideal(a), cfg);
  FreenessReport r;
  r.method = method;
  r.n = flags.n;
  r.l = flags.l;
  r.essential = flags.essential;
  r.rgin = g.ideal;
  r.provenance = g.certificate;
  const MonomialIdeal& b = r.rgin.ideal();
  r.trivially_free = b.is_whole_ring();
  r.regularity = regularity_stable(r.rgin);
  unsigned needed = default_dmax(b);
  r.sectional = sectional_matrix(b, std::max(needed, dmax.value_or(needed)));
  r.betti = betti_eliahou_kervaire(r.rgin);
  r.shape = is_cm_codim2_stable(r.rgin);
  if (!r.trivially_free && flags.l >= 2) r.d0 = reduction_number(b, flags.l - 2);
  if (g.certificate.modular()) r.notes.push_back("modular surrogate: verdict is Monte-Carlo over two primes");

  if (method != Method::sectional) r.rgin_verdict = rgin_says_free(r.rgin, flags.n);
  if (method != Method::rgin) {
    r.sectional_verdict = evaluate_sectional_freeness(r.sectional);
    if (r.sectional_verdict->d0 != r.d0) throw InternalConsistencyError("d0 from the matrix disagrees with rgin");
  }
  if (flags.l <= 2) {
    r.free = true;
    if (r.rgin_verdict && !*r.rgin_verdict) throw InternalConsistencyError("line arrangement judged non-free by rgin");
  } else if (r.rgin_verdict && r.sectional_verdict) {
    if (*r.rgin_verdict != r.sectional_verdict->free) throw InternalConsistencyError("rgin and sectional verdicts disagree");
    r.free = *r.rgin_verdict;
  } else {
    r.free = r.rgin_verdict ? *r.rgin_verdict : r.sectional_verdict->free;
  }

  if (r.free && !r.trivially_free) detail::check_free_shape(r.rgin, flags, r.shape, r.d0);
  if (r.free) {
    if (!flags.essential) {
      r.notes.push_back("exponents require an essential arrangement");
    } else if (r.trivially_free) {
      r.exponents = ExponentVector{1};
    } else {
      r.exponents = exponents_from_rgin(r.rgin, flags.l);
      if (r.exponents->sum() != flags.n) throw InternalConsistencyError("exponents do not sum to n");
    }
  }
  return r;
}

inline FreenessReport is_free_via_rgin(const Arrangement& a, const GinConfig& cfg) { return analyze(a, cfg, Method::rgin); }

inline FreenessReport is_free_via_sectional(const Arrangement& a, const GinConfig& cfg) {
  return analyze(a, cfg, Method::sectional);
}

enum class RealizabilityFailure { none, not_cm_codim2, beta0_dmin_not_l, degree_hole, beta0_chain };

struct RealizabilityVerdict {
  bool realizable = false;
  RealizabilityFailure failure = RealizabilityFailure::none;
  std::vector<std::string> reasons;  // first one matches `failure`
  std::optional<ExponentVector> exponents;
  std::optional<Arrangement> arrangement;
  bool lambda_chain_condition = false;
  bool verified_end_to_end = false;  // rgin(J(A)) recomputed and equal to B
};

namespace detail {

inline StronglyStableIdeal embed(const StronglyStableIdeal& b, std::size_t l) {
  std::vector<PowerProduct> gens;
  for (const auto& g : b.generators()) {
    if (g.max_variable() >= static_cast<int>(l)) throw DimensionError("ideal uses more than l variables");
    PowerProduct t(l);
    for (std::size_t i = 0; i < std::min(l, g.size()); ++i) t.set(i, g[i]);
    gens.push_back(t);
  }
  return StronglyStableIdeal(MonomialIdeal(l, std::move(gens)));
}

// #{i | lambda_i = i} >= #{i | lambda_i = i+1} >= ... up to lambda_{n-1}.
inline bool lambda_chain_holds(const LexSegmentShape& shape) {
  const std::size_t n = shape.n;
  const unsigned top = shape.lambda.back();
  if (top + 1 < n) return false;
  std::vector<std::size_t> counts(top + 2 - n, 0);
  for (std::size_t i = 1; i <= shape.lambda.size(); ++i) {
    unsigned lam = shape.lambda[i - 1];
    if (lam < i) return false;
    std::size_t k = lam - i;
    if (k >= counts.size()) return false;
    ++counts[k];
  }
  for (std::size_t k = 0; k + 1 < counts.size(); ++k)
    if (counts[k] < counts[k + 1]) return false;
  return true;
}

}  // namespace detail

/// Whether B is rgin(J(A)) for some free arrangement A in K^l, and if so
/// which one: l generators in the lowest degree, generator counts dropping
/// strictly once and then never increasing, no missing degree. A positive
/// answer comes with exponents and the supersolvable arrangement; when
/// `verify` is given, rgin(J(A)) is recomputed and compared with B.
inline RealizabilityVerdict realizable_as_free(const StronglyStableIdeal& input, std::size_t l,
                                               const std::optional<GinConfig>& verify = std::nullopt) {
  if (l < 2) throw DimensionError("realizability needs l >= 2");
  const StronglyStableIdeal b = detail::embed(input, l);
  RealizabilityVerdict v;
  auto fail = [&](RealizabilityFailure f, std::string why) {
    if (v.failure == RealizabilityFailure::none) v.failure = f;
    v.reasons.push_back(std::move(why));
  };

  auto shape = is_cm_codim2_stable(b);
  if (!shape) {
    fail(RealizabilityFailure::not_cm_codim2, "not Cohen-Macaulay of codimension 2");
    return v;
  }
  v.lambda_chain_condition = detail::lambda_chain_holds(*shape);

  const auto beta0 = detail::degree_counts(b.ideal());
  const unsigned dmin = beta0.begin()->first;
  const unsigned dmax = beta0.rbegin()->first;
  auto beta = [&](unsigned d) { return detail::count_at(beta0, d); };
  auto b0 = [](unsigned d) { return "beta0," + std::to_string(d); };

  if (beta(dmin) != l) {
    fail(RealizabilityFailure::beta0_dmin_not_l, b0(dmin) + " = " + std::to_string(beta(dmin)) +
                                                     (beta(dmin) < l ? " < " : " > ") + std::to_string(l) + " = l");
  }
  for (unsigned d = dmin + 1; d < dmax; ++d)
    if (beta(d) == 0) fail(RealizabilityFailure::degree_hole, "missing degree " + std::to_string(d));
  if (dmax > dmin && beta(dmin) <= beta(dmin + 1)) {
    fail(RealizabilityFailure::beta0_chain, "flat beta chain: " + b0(dmin) + " = " + std::to_string(beta(dmin)) +
                                                " <= " + std::to_string(beta(dmin + 1)) + " = " + b0(dmin + 1));
  }
  for (unsigned d = dmin + 1; d < dmax; ++d) {
    if (beta(d) < beta(d + 1))
      fail(RealizabilityFailure::beta0_chain, std::to_string(beta(d)) + " = " + b0(d) + " < " + b0(d + 1) + " = " +
                                                  std::to_string(beta(d + 1)));
  }

  const bool yes = v.reasons.empty();
  if (beta(dmin) == l && yes != v.lambda_chain_condition)
    throw InternalConsistencyError("realizability conditions disagree with the lambda-count chain");
  if (!yes) return v;

  // exponents: beta_{0,j-1} - beta_{0,j} entries equal to j - dmin, the rest dmax - dmin + 1
  std::vector<unsigned> e;
  for (unsigned j = dmin + 1; j <= dmax; ++j) e.insert(e.end(), beta(j - 1) - beta(j), j - dmin);
  if (e.size() > l) throw InternalConsistencyError("too many exponents");
  if (dmax > dmin && l - e.size() != beta(dmax)) throw InternalConsistencyError("top exponent count mismatch");
  e.resize(l, dmax - dmin + 1);
  ExponentVector ev(std::move(e));
  if (ev.sum() != dmin + 1) throw InternalConsistencyError("exponents do not sum to the generator count");
  if (!(exponents_from_rgin(b, l) == ev)) throw InternalConsistencyError("two exponent procedures disagree");
  if (!(rgin_from_exponents(ev) == b)) throw InternalConsistencyError("exponents do not rebuild the ideal");

  v.realizable = true;
  v.exponents = ev;
  v.arrangement = supersolvable_from_exponents(ev);
  if (verify) {
    GinResult g = rgin(jacobian_ideal(*v.arrangement), *verify);
    if (!(g.ideal == b)) throw InternalConsistencyError("rgin(J(A)) of the constructed arrangement is not B");
    v.verified_end_to_end = true;
  }
  return v;
}

/// Experiment harness: every minimal generator divisible by x_3 should have
/// degree >= d0 + 1 where d0 = min{d | x_2^{d+1} in B}.
struct ConjectureCheck {
  bool holds = true;
  bool vacuous = false;  // no generator involves x_3
  std::optional<unsigned> d0;
  std::vector<PowerProduct> witnesses;  // generators violating the bound
  std::string note;
};

inline ConjectureCheck check_conjecture_z(const StronglyStableIdeal& b) {
  ConjectureCheck c;
  std::vector<PowerProduct> third;
  if (b.nvars() >= 3)
    for (const auto& g : b.generators())
      if (g[2] > 0) third.push_back(g);
  if (b.nvars() >= 2) c.d0 = reduction_number(b.ideal(), b.nvars() - 2);
  if (third.empty()) {
    c.vacuous = true;
    c.note = "no minimal generator involves the third variable";
    return c;
  }
  if (!c.d0) {
    c.note = "d0 undefined: no pure power of the second variable";
    return c;
  }
  for (const auto& g : third)
    if (g.degree() < *c.d0 + 1) c.witnesses.push_back(g);
  c.holds = c.witnesses.empty();
  return c;
}

}  // namespace arrfree

#endif  // ARRFREE_ARRANGEMENT_HPP
