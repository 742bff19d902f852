#ifndef ARRFREE_LINEAR_CHANGE_HPP
#define ARRFREE_LINEAR_CHANGE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/field.hpp"
#include "arrfree/polynomial.hpp"

namespace arrfree {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant and rank by fraction-carrying Gaussian elimination.
namespace detail {

struct Elimination {
  Rational determinant;
  std::size_t rank;
};

inline Elimination eliminate(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      det = -det;
    }
    det *= m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  if (rank < rows || rows != cols) det = 0;
  return {det, rank};
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& m) { return detail::eliminate(m).rank; }

inline Rational determinant(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionError("determinant of a non-square matrix");
  return detail::eliminate(m).determinant;
}

/// Invertible change of coordinates x_j -> sum_k matrix[j][k] x_k.
class LinearChange {
 public:
  explicit LinearChange(RationalMatrix matrix) : matrix_(std::move(matrix)) {
    for (const auto& row : matrix_)
      if (row.size() != matrix_.size()) throw DimensionError("linear change must be square");
    if (matrix_.empty()) throw DimensionError("linear change needs at least one variable");
    if (sgn(determinant(matrix_)) == 0) throw std::invalid_argument("linear change is singular");
  }

  static LinearChange identity(std::size_t l) {
    RationalMatrix m(l, std::vector<Rational>(l, 0));
    for (std::size_t i = 0; i < l; ++i) m[i][i] = 1;
    return LinearChange(std::move(m));
  }

  std::size_t dimension() const noexcept { return matrix_.size(); }
  const RationalMatrix& matrix() const noexcept { return matrix_; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return matrix_.at(row).at(col); }

  LinearChange inverse() const {
    const std::size_t l = dimension();
    RationalMatrix a = matrix_;
    RationalMatrix inv(l, std::vector<Rational>(l, 0));
    for (std::size_t i = 0; i < l; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < l; ++c) {
      std::size_t p = c;
      while (sgn(a[p][c]) == 0) ++p;
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      Rational s = 1 / a[c][c];
      for (std::size_t k = 0; k < l; ++k) {
        a[c][k] *= s;
        inv[c][k] *= s;
      }
      for (std::size_t r = 0; r < l; ++r) {
        if (r == c || sgn(a[r][c]) == 0) continue;
        Rational f = a[r][c];
        for (std::size_t k = 0; k < l; ++k) {
          a[r][k] -= f * a[c][k];
          inv[r][k] -= f * inv[c][k];
        }
      }
    }
    return LinearChange(std::move(inv));
  }

  friend bool operator==(const LinearChange&, const LinearChange&) = default;

 private:
  RationalMatrix matrix_;
};

/// f(g x): every x_j is replaced by the linear form sum_k g[j][k] x_k.
/// Composing with g.inverse() afterwards restores f.
template <class Field>
Polynomial<Field> apply_linear_change(const Polynomial<Field>& f, const LinearChange& g) {
  const std::size_t l = f.nvars();
  if (g.dimension() != l) throw DimensionError("linear change dimension does not match polynomial ring");
  const Field& k = f.field();

  std::vector<Polynomial<Field>> images;
  images.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<Term<Field>> terms;
    for (std::size_t c = 0; c < l; ++c) terms.push_back({PowerProduct::variable(l, c), k.from_rational(g(j, c))});
    images.emplace_back(l, std::move(terms), k);
  }

  // powers[j][e] = images[j]^e, grown on demand
  std::vector<std::vector<Polynomial<Field>>> powers(l);
  for (std::size_t j = 0; j < l; ++j) powers[j].push_back(Polynomial<Field>::constant(l, k.one(), k));
  auto power = [&](std::size_t j, unsigned e) -> const Polynomial<Field>& {
    while (powers[j].size() <= e) powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][e];
  };

  Polynomial<Field> result(l, k);
  for (const auto& t : f.terms()) {
    Polynomial<Field> img = Polynomial<Field>::constant(l, t.coefficient, k);
    for (std::size_t j = 0; j < l; ++j)
      if (t.monomial[j] != 0) img = img * power(j, t.monomial[j]);
    result += img;
  }
  return result;
}

}  // namespace arrfree

#endif  // ARRFREE_LINEAR_CHANGE_HPP
