#ifndef ARRFREE_POLYNOMIAL_HPP
#define ARRFREE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/field.hpp"
#include "arrfree/power_product.hpp"

namespace arrfree {

template <class Field>
struct Term {
  PowerProduct monomial;
  typename Field::value_type coefficient;
};

/// Sparse polynomial in `nvars` variables over `Field`. Terms are kept sorted
/// by decreasing DegRevLex, so the leading term is the first one, and no
/// stored coefficient is zero.
template <class Field>
class Polynomial {
 public:
  using field_type = Field;
  using value_type = typename Field::value_type;
  using term_type = Term<Field>;

  Polynomial() = default;

  explicit Polynomial(std::size_t nvars, Field field = Field{}) : nvars_(nvars), field_(std::move(field)) {}

  /// Normalizing constructor: sorts, merges equal monomials, drops zeros.
  Polynomial(std::size_t nvars, std::vector<term_type> terms, Field field = Field{})
      : nvars_(nvars), field_(std::move(field)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.monomial.size() != nvars_) throw DimensionError("term has wrong number of variables");
    normalize();
  }

  static Polynomial constant(std::size_t nvars, const value_type& c, Field field = Field{}) {
    return monomial(PowerProduct(nvars), c, std::move(field));
  }

  static Polynomial monomial(const PowerProduct& t, const value_type& c, Field field = Field{}) {
    Polynomial p(t.size(), std::move(field));
    if (!p.field_.is_zero(c)) p.terms_.push_back({t, c});
    return p;
  }

  /// The variable x_i (0-based).
  static Polynomial variable(std::size_t nvars, std::size_t i, Field field = Field{}) {
    Field f = field;
    return monomial(PowerProduct::variable(nvars, i), f.one(), std::move(field));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<term_type>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const PowerProduct& leading_monomial() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front().monomial;
  }
  const value_type& leading_coefficient() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front().coefficient;
  }

  /// -1 for the zero polynomial.
  int total_degree() const noexcept { return is_zero() ? -1 : static_cast<int>(terms_.front().monomial.degree()); }

  bool is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const term_type& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
  }

  /// Coefficient of `t` (zero when absent).
  value_type coefficient(const PowerProduct& t) const {
    for (const auto& term : terms_)
      if (term.monomial == t) return term.coefficient;
    return field_.zero();
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.merge(g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.merge(g, true); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = field_.neg(t.coefficient);
    return r;
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    std::vector<term_type> prod;
    prod.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) prod.push_back({a.monomial * b.monomial, f.field_.mul(a.coefficient, b.coefficient)});
    return Polynomial(f.nvars_, std::move(prod), f.field_);
  }

  Polynomial scaled(const value_type& c) const {
    if (field_.is_zero(c)) return Polynomial(nvars_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = field_.mul(t.coefficient, c);
    return r;
  }

  /// c * t * f; ordering is preserved since DegRevLex is multiplicative.
  Polynomial times_term(const PowerProduct& t, const value_type& c) const {
    if (field_.is_zero(c)) return Polynomial(nvars_, field_);
    Polynomial r(nvars_, field_);
    r.terms_.reserve(terms_.size());
    for (const auto& term : terms_) r.terms_.push_back({term.monomial * t, field_.mul(term.coefficient, c)});
    return r;
  }

  /// Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const {
    if (is_zero() || field_.is_one(leading_coefficient())) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.nvars_ != g.nvars_ || !(f.field_ == g.field_) || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].monomial == g.terms_[i].monomial) || !(f.terms_[i].coefficient == g.terms_[i].coefficient))
        return false;
    return true;
  }

  void check_compatible(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw DimensionError("polynomials live in rings of different dimension");
    if (!(field_ == g.field_)) throw FieldMismatch("polynomials have different coefficient fields");
  }

  /// Reinterprets the coefficients in another field (e.g. Q -> Z/p).
  template <class Other, class Convert>
  Polynomial<Other> map_coefficients(Other target, Convert convert) const {
    std::vector<Term<Other>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.monomial, convert(t.coefficient)});
    return Polynomial<Other>(nvars_, std::move(out), std::move(target));
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const term_type& a, const term_type& b) { return cmp_degrevlex(a.monomial, b.monomial) > 0; });
    std::vector<term_type> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial)
        merged.back().coefficient = field_.add(merged.back().coefficient, t.coefficient);
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [&](const term_type& t) { return field_.is_zero(t.coefficient); });
    terms_ = std::move(merged);
  }

  Polynomial merge(const Polynomial& g, bool subtract) const {
    check_compatible(g);
    Polynomial r(nvars_, field_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    auto other = [&](const value_type& c) { return subtract ? field_.neg(c) : c; };
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        r.terms_.push_back(*a++);
      } else if (a == terms_.end()) {
        r.terms_.push_back({b->monomial, other(b->coefficient)});
        ++b;
      } else {
        auto c = cmp_degrevlex(a->monomial, b->monomial);
        if (c > 0) {
          r.terms_.push_back(*a++);
        } else if (c < 0) {
          r.terms_.push_back({b->monomial, other(b->coefficient)});
          ++b;
        } else {
          auto s = subtract ? field_.sub(a->coefficient, b->coefficient) : field_.add(a->coefficient, b->coefficient);
          if (!field_.is_zero(s)) r.terms_.push_back({a->monomial, std::move(s)});
          ++a;
          ++b;
        }
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  Field field_{};
  std::vector<term_type> terms_;
};

/// Formal partial derivative with respect to x_i (0-based).
template <class Field>
Polynomial<Field> partial_derivative(const Polynomial<Field>& f, std::size_t i) {
  if (i >= f.nvars()) throw DimensionError("derivative index out of range");
  const Field& k = f.field();
  std::vector<Term<Field>> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[i];
    if (e == 0) continue;
    PowerProduct m = t.monomial;
    m.set(i, e - 1);
    out.push_back({m, k.mul(t.coefficient, k.from_int(static_cast<long>(e)))});
  }
  return Polynomial<Field>(f.nvars(), std::move(out), k);
}

template <class Field>
std::string to_string(const Polynomial<Field>& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  const Field& k = f.field();
  std::string out;
  for (const auto& t : f.terms()) {
    std::string c = k.to_string(t.coefficient);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += to_string(t.monomial, names);
    }
  }
  return out;
}

template <class Field>
std::string to_string(const Polynomial<Field>& f) {
  return to_string(f, default_variable_names(f.nvars()));
}

using QPolynomial = Polynomial<RationalField>;

}  // namespace arrfree

#endif  // ARRFREE_POLYNOMIAL_HPP
