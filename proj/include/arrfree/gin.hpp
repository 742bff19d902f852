#ifndef ARRFREE_GIN_HPP
#define ARRFREE_GIN_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/field.hpp"
#include "arrfree/groebner.hpp"
#include "arrfree/linear_change.hpp"
#include "arrfree/monomial_ideal.hpp"
#include "arrfree/polynomial.hpp"
#include "arrfree/strongly_stable.hpp"

namespace arrfree {

/// Coefficient arithmetic used for the leading-term computations.
struct CoeffMode {
  /// Empty: exact rationals. Otherwise trials cycle through these primes.
  std::vector<std::uint32_t> primes;

  static CoeffMode exact() { return {}; }
  static CoeffMode modular(std::uint32_t p1 = 32003, std::uint32_t p2 = 31991) { return {{p1, p2}}; }

  bool is_exact() const noexcept { return primes.empty(); }

  /// "exact" or "mod:p1,p2"
  std::string to_string() const {
    if (is_exact()) return "exact";
    std::string out = "mod:";
    for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + std::to_string(primes[i]);
    return out;
  }

  friend bool operator==(const CoeffMode&, const CoeffMode&) = default;
};

struct GinConfig {
  std::uint64_t seed = 0;
  unsigned trials = 2;
  long entry_bound = 10;
  unsigned max_retries = 5;
  CoeffMode coeff_mode = CoeffMode::exact();
  GroebnerOptions groebner{};

  void validate() const {
    if (trials < 2) throw std::invalid_argument("gin needs at least two agreeing trials");
    if (entry_bound < 1) throw std::invalid_argument("entry bound must be positive");
    if (max_retries < 1) throw std::invalid_argument("max_retries must be positive");
    if (!coeff_mode.is_exact()) {
      if (coeff_mode.primes.size() != 2 || coeff_mode.primes[0] == coeff_mode.primes[1])
        throw std::invalid_argument("modular mode needs two distinct primes");
      for (auto p : coeff_mode.primes) PrimeField{p};
    }
  }
};

/// Uniform integer in [lo, hi] by rejection on raw 64-bit draws, so a seed
/// gives the same values under every standard library.
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = top - top % range;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return lo + static_cast<long>(x % range);
}

inline long uniform_entry(std::mt19937_64& rng, long bound) { return uniform_int(rng, -bound, bound); }

/// Integer matrix with entries uniform in [-bound, bound], resampled from the
/// same stream until it is invertible.
inline LinearChange random_linear_change(std::size_t l, std::mt19937_64& rng, long bound) {
  if (l < 1) throw DimensionError("dimension must be positive");
  if (bound < 1) throw std::invalid_argument("entry bound must be positive");
  for (;;) {
    RationalMatrix m(l, std::vector<Rational>(l));
    for (auto& row : m)
      for (auto& e : row) e = uniform_entry(rng, bound);
    if (sgn(determinant(m)) != 0) return LinearChange(std::move(m));
  }
}

/// Stream for trial `trial` of batch `batch`; independent of other trials.
inline std::mt19937_64 trial_stream(std::uint64_t seed, unsigned batch, unsigned trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), batch, trial};
  return std::mt19937_64(seq);
}

/// What a certified rgin was computed from.
struct GinCertificate {
  std::uint64_t seed = 0;
  unsigned trials = 0;
  unsigned batch = 0;  // index of the batch that agreed
  CoeffMode coeff_mode;
  std::vector<RationalMatrix> matrices;  // one per trial of the accepted batch

  bool modular() const noexcept { return !coeff_mode.is_exact(); }
};

struct GinResult {
  StronglyStableIdeal ideal;
  GinCertificate certificate;
};

/// LT(g(I)) for one coordinate change over `field`.
template <class Field>
MonomialIdeal leading_ideal_after_change(const std::vector<QPolynomial>& gens, const LinearChange& g, const Field& field,
                                         const GroebnerOptions& options) {
  std::vector<Polynomial<Field>> moved;
  moved.reserve(gens.size());
  for (const auto& f : gens) {
    auto converted = f.map_coefficients(field, [&](const Rational& q) { return field.from_rational(q); });
    moved.push_back(apply_linear_change(converted, g));
  }
  return leading_term_ideal(buchberger(moved, options));
}

namespace detail {

inline bool invertible_mod(const LinearChange& g, std::uint32_t p) {
  mpz_class det = determinant(g.matrix()).get_num() % p;
  return det != 0;
}

}  // namespace detail

/// Generic initial ideal under DegRevLex.
///
/// Each trial applies a fresh random coordinate change and computes the
/// leading term ideal. A batch is accepted when every trial is strongly
/// stable and all trials agree; otherwise a new batch is drawn, up to
/// max_retries batches. In modular mode trials alternate between the two
/// primes so agreement is across both characteristics.
inline GinResult rgin(const std::vector<QPolynomial>& gens, const GinConfig& cfg) {
  cfg.validate();
  if (gens.empty()) throw std::invalid_argument("rgin needs at least one generator");
  const std::size_t l = gens.front().nvars();
  for (const auto& f : gens)
    if (f.nvars() != l) throw DimensionError("generators live in rings of different dimension");

  std::vector<std::string> candidates;
  for (unsigned batch = 0; batch < cfg.max_retries; ++batch) {
    std::vector<MonomialIdeal> results;
    std::vector<RationalMatrix> matrices;
    bool ok = true;
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
      auto rng = trial_stream(cfg.seed, batch, trial);
      LinearChange g = random_linear_change(l, rng, cfg.entry_bound);
      MonomialIdeal lt;
      if (cfg.coeff_mode.is_exact()) {
        lt = leading_ideal_after_change(gens, g, RationalField{}, cfg.groebner);
      } else {
        std::uint32_t p = cfg.coeff_mode.primes[trial % cfg.coeff_mode.primes.size()];
        while (!detail::invertible_mod(g, p)) g = random_linear_change(l, rng, cfg.entry_bound);
        lt = leading_ideal_after_change(gens, g, PrimeField{p}, cfg.groebner);
      }
      candidates.push_back(to_string(lt));
      matrices.push_back(g.matrix());
      if (!is_strongly_stable(lt) || (!results.empty() && !(lt == results.front()))) ok = false;
      results.push_back(std::move(lt));
      if (!ok) break;
    }
    if (ok) {
      GinCertificate cert{cfg.seed, cfg.trials, batch, cfg.coeff_mode, std::move(matrices)};
      return GinResult{StronglyStableIdeal(std::move(results.front())), std::move(cert)};
    }
  }
  throw GenericityExhausted("no agreeing strongly stable leading term ideal after " +
                                std::to_string(cfg.max_retries) + " batches",
                            std::move(candidates));
}

/// rgin of a monomial ideal given by its generators.
inline GinResult rgin(const MonomialIdeal& b, const GinConfig& cfg) {
  if (b.is_zero()) throw std::invalid_argument("rgin of the zero ideal");
  std::vector<QPolynomial> gens;
  for (const auto& t : b.generators()) gens.push_back(QPolynomial::monomial(t, 1));
  return rgin(gens, cfg);
}

}  // namespace arrfree

#endif  // ARRFREE_GIN_HPP
