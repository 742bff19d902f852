#ifndef ARRFREE_GROEBNER_HPP
#define ARRFREE_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arrfree/errors.hpp"
#include "arrfree/monomial_ideal.hpp"
#include "arrfree/polynomial.hpp"

namespace arrfree {

struct GroebnerOptions {
  /// Abort with DegreeCapExceeded once an S-pair above this degree comes up.
  std::optional<unsigned> max_degree;
};

/// Reduced DegRevLex Groebner basis: monic, interreduced, sorted by
/// increasing leading term. An empty basis is the zero ideal.
template <class Field>
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, Field field, std::vector<Polynomial<Field>> elements)
      : nvars_(nvars), field_(std::move(field)), elements_(std::move(elements)) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Polynomial<Field>>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::size_t nvars_;
  Field field_;
  std::vector<Polynomial<Field>> elements_;
};

namespace detail {

template <class Field>
using Workspace = std::map<PowerProduct, typename Field::value_type, DegRevLexGreater>;

template <class Field>
void load(Workspace<Field>& ws, const Polynomial<Field>& f) {
  for (const auto& t : f.terms()) ws.emplace(t.monomial, t.coefficient);
}

// ws -= c * t * g, where c * t * LT(g) cancels the current head of ws.
template <class Field>
void subtract_multiple(Workspace<Field>& ws, const Field& k, const Polynomial<Field>& g, const PowerProduct& t,
                       const typename Field::value_type& c) {
  ws.erase(ws.begin());
  const auto& terms = g.terms();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    PowerProduct m = terms[i].monomial * t;
    auto [it, inserted] = ws.try_emplace(m, k.zero());
    k.sub_mul(it->second, c, terms[i].coefficient);
    if (k.is_zero(it->second)) ws.erase(it);
  }
}

// Full reduction of f by `divisors`, always using the first divisor (in list
// order) whose leading monomial divides the current term.
template <class Field>
Polynomial<Field> reduce(const Polynomial<Field>& f, const std::vector<const Polynomial<Field>*>& divisors) {
  const Field& k = f.field();
  Workspace<Field> ws;
  load(ws, f);
  std::vector<Term<Field>> remainder;
  std::vector<typename Field::value_type> inverse_lc;
  inverse_lc.reserve(divisors.size());
  for (const auto* g : divisors) inverse_lc.push_back(k.inv(g->leading_coefficient()));

  while (!ws.empty()) {
    const auto& [m, c] = *ws.begin();
    std::size_t found = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i]->leading_monomial().divides(m)) {
        found = i;
        break;
      }
    }
    if (found == divisors.size()) {
      remainder.push_back({m, c});
      ws.erase(ws.begin());
      continue;
    }
    const Polynomial<Field>& g = *divisors[found];
    PowerProduct quotient = m / g.leading_monomial();
    typename Field::value_type factor = k.mul(c, inverse_lc[found]);
    subtract_multiple(ws, k, g, quotient, factor);
  }
  return Polynomial<Field>(f.nvars(), std::move(remainder), k);
}

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  const Field& k = f.field();
  PowerProduct l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<Field> a = f.times_term(l / f.leading_monomial(), k.inv(f.leading_coefficient()));
  Polynomial<Field> b = g.times_term(l / g.leading_monomial(), k.inv(g.leading_coefficient()));
  return a - b;
}

}  // namespace detail

/// Remainder of f on division by G (in list order). f - r lies in (G) and no
/// term of r is divisible by a leading term of G.
template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const std::vector<Polynomial<Field>>& divisors) {
  std::vector<const Polynomial<Field>*> ptrs;
  for (const auto& g : divisors) {
    f.check_compatible(g);
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return detail::reduce(f, ptrs);
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& basis) {
  return normal_form(f, basis.elements());
}

/// Buchberger's algorithm under DegRevLex.
///
/// Pairs are chosen by the normal strategy (smallest lcm first, ties broken
/// by DegRevLex then by index) and pruned with the Gebauer-Moeller update,
/// which realizes both the coprime-leading-term and the chain criterion.
/// Zero generators are discarded; an all-zero list gives the empty basis.
template <class Field>
GroebnerBasis<Field> buchberger(const std::vector<Polynomial<Field>>& gens, const GroebnerOptions& options = {}) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const std::size_t nvars = gens.front().nvars();
  const Field field = gens.front().field();
  for (const auto& g : gens) gens.front().check_compatible(g);

  struct Pair {
    std::size_t i, j;
    PowerProduct lcm;
  };

  std::vector<Polynomial<Field>> basis;  // every element ever added
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_divisors = [&] {
    std::vector<const Polynomial<Field>*> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (active[i]) out.push_back(&basis[i]);
    return out;
  };

  // Gebauer-Moeller update for a new element h (already monic, nonzero).
  auto update = [&](Polynomial<Field> h) {
    const std::size_t hi = basis.size();
    const PowerProduct lth = h.leading_monomial();
    basis.push_back(std::move(h));
    active.push_back(true);

    std::vector<Pair> pending;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) pending.push_back({g, hi, lcm(basis[g].leading_monomial(), lth)});

    // chain criterion among the new pairs; coprime pairs pass through here
    // so that they can still dominate others, then get dropped below
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < pending.size(); ++a) {
      const Pair& p = pending[a];
      auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      bool coprime = basis[p.i].leading_monomial().coprime(lth);
      if (coprime || (std::none_of(pending.begin() + static_cast<std::ptrdiff_t>(a) + 1, pending.end(), divides_p) &&
                      std::none_of(kept.begin(), kept.end(), divides_p)))
        kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return basis[p.i].leading_monomial().coprime(lth); });

    // old pairs made redundant by h
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lth.divides(p.lcm)) return false;
      return !(lcm(basis[p.i].leading_monomial(), lth) == p.lcm) && !(lcm(basis[p.j].leading_monomial(), lth) == p.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());

    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lth.divides(basis[g].leading_monomial())) active[g] = false;
  };

  // Seed with the inputs, each reduced against what is already there.
  std::vector<Polynomial<Field>> seeds;
  for (const auto& g : gens)
    if (!g.is_zero()) seeds.push_back(g);
  std::stable_sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) {
    return cmp_degrevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& g : seeds) {
    Polynomial<Field> h = detail::reduce(g, active_divisors());
    if (!h.is_zero()) update(h.monic());
  }

  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = cmp_degrevlex(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    if (options.max_degree && p.lcm.degree() > *options.max_degree)
      throw DegreeCapExceeded("Groebner computation exceeded degree cap " + std::to_string(*options.max_degree));
    Polynomial<Field> s = detail::s_polynomial(basis[p.i], basis[p.j]);
    Polynomial<Field> h = detail::reduce(s, active_divisors());
    if (!h.is_zero()) update(h.monic());
  }

  // interreduce the minimal basis
  std::vector<Polynomial<Field>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (active[i]) minimal.push_back(basis[i]);
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return cmp_degrevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial<Field>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial<Field>*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    reduced.push_back(detail::reduce(minimal[i], others).monic());
  }
  return GroebnerBasis<Field>(nvars, field, std::move(reduced));
}

/// Ideal of leading monomials of a reduced basis.
template <class Field>
MonomialIdeal leading_term_ideal(const GroebnerBasis<Field>& basis) {
  std::vector<PowerProduct> lts;
  for (const auto& g : basis.elements()) lts.push_back(g.leading_monomial());
  return MonomialIdeal(basis.nvars(), std::move(lts));
}

/// Number of degree-d power products of S = K[x_1..x_l] outside B, i.e. the
/// Hilbert function of S/B. The zero ideal gives the full count.
inline std::uint64_t hilbert_function(const MonomialIdeal& b, unsigned d) {
  return count_standard_monomials(b, b.nvars(), d);
}

}  // namespace arrfree

#endif  // ARRFREE_GROEBNER_HPP
