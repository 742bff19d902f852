#ifndef ARRFREE_STRONGLY_STABLE_HPP
#define ARRFREE_STRONGLY_STABLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "arrfree/monomial_ideal.hpp"

namespace arrfree {

/// First Borel move x_j -> x_i (i < j) on a minimal generator that leaves B.
struct BorelViolation {
  PowerProduct generator;
  std::size_t from;  // j, 0-based
  std::size_t to;    // i, 0-based
};

inline std::optional<BorelViolation> find_borel_violation(const MonomialIdeal& b) {
  for (const auto& t : b.generators()) {
    for (std::size_t j = 1; j < t.size(); ++j) {
      if (t[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        PowerProduct moved = t;
        moved.set(j, t[j] - 1);
        moved.set(i, t[i] + 1);
        if (!b.contains(moved)) return BorelViolation{t, j, i};
      }
    }
  }
  return std::nullopt;
}

/// Closed under every move x_j -> x_i with i < j. Checking the minimal
/// generators is enough: a move on a multiple u*t lands in u*(moved t) or
/// stays a multiple of t.
inline bool is_strongly_stable(const MonomialIdeal& b) { return !find_borel_violation(b).has_value(); }

/// A monomial ideal certified to be strongly stable (Borel-fixed).
class StronglyStableIdeal {
 public:
  /// Throws std::invalid_argument when `b` fails the Borel check.
  explicit StronglyStableIdeal(MonomialIdeal b) : base_(std::move(b)) {
    if (!is_strongly_stable(base_)) throw std::invalid_argument("ideal is not strongly stable: " + to_string(base_));
  }

  const MonomialIdeal& ideal() const noexcept { return base_; }
  std::size_t nvars() const noexcept { return base_.nvars(); }
  const std::vector<PowerProduct>& generators() const noexcept { return base_.generators(); }
  bool certified() const noexcept { return true; }

  friend bool operator==(const StronglyStableIdeal&, const StronglyStableIdeal&) = default;

 private:
  MonomialIdeal base_;
};

inline std::string to_string(const StronglyStableIdeal& b) { return to_string(b.ideal()); }

}  // namespace arrfree

#endif  // ARRFREE_STRONGLY_STABLE_HPP
