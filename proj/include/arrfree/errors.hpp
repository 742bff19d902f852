#ifndef ARRFREE_ERRORS_HPP
#define ARRFREE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrfree {

/// Operands live in polynomial rings with different numbers of variables,
/// or an index falls outside the ring.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two polynomials carry different coefficient fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponent or degree would not fit in the packed representation.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Buchberger was asked to stop above a total degree and reached it.
class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every batch of random coordinate changes produced a non-Borel leading
/// term ideal or trials disagreed.
class GenericityExhausted : public std::runtime_error {
 public:
  GenericityExhausted(const std::string& what, std::vector<std::string> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}

  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

/// A monomial ideal handed to an exponent/arrangement conversion does not
/// have the lex-segment shape of a free arrangement's rgin.
class NotAFreeRgin : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem-backed cross check failed. Seeing this means a bug or a
/// non-generic coordinate change slipped through certification.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arrfree

#endif  // ARRFREE_ERRORS_HPP
