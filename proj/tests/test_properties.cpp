#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "support.hpp"

using namespace arrfree;
using namespace testing_support;

namespace {

PowerProduct random_monomial(std::mt19937_64& rng, std::size_t l, unsigned degree) {
  PowerProduct t(l);
  for (unsigned k = 0; k < degree; ++k) {
    auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(l) - 1));
    t.set(i, t[i] + 1);
  }
  return t;
}

// Smallest strongly stable ideal containing a few random monomials.
MonomialIdeal random_borel(std::mt19937_64& rng, std::size_t l, unsigned max_degree) {
  std::set<std::vector<unsigned>> seen;
  std::vector<PowerProduct> todo, all;
  for (long k = uniform_int(rng, 1, 3); k > 0; --k)
    todo.push_back(random_monomial(rng, l, static_cast<unsigned>(uniform_int(rng, 1, max_degree))));
  while (!todo.empty()) {
    PowerProduct t = todo.back();
    todo.pop_back();
    std::vector<unsigned> key = t.exponents();
    if (!seen.insert(key).second) continue;
    all.push_back(t);
    for (std::size_t j = 1; j < l; ++j) {
      if (t[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        PowerProduct u = t;
        u.set(j, t[j] - 1);
        u.set(i, t[i] + 1);
        todo.push_back(u);
      }
    }
  }
  return MonomialIdeal(l, std::move(all));
}

QPolynomial random_form(std::mt19937_64& rng, std::size_t l, unsigned degree, unsigned terms) {
  QPolynomial f(l);
  for (unsigned k = 0; k < terms; ++k) {
    long c = uniform_entry(rng, 3);
    if (c != 0) f += QPolynomial::monomial(random_monomial(rng, l, degree), c);
  }
  return f;
}

void expect_triangle_inequality(const SectionalMatrix& m) {
  for (std::size_t i = 2; i <= m.rows(); ++i)
    for (unsigned d = 1; d <= m.dmax(); ++d) EXPECT_LE(m(i, d), m(i - 1, d) + m(i, d - 1)) << "(" << i << "," << d << ")";
}

std::vector<ExponentVector> all_exponents(unsigned max_sum, std::size_t min_l, std::size_t max_l) {
  std::vector<ExponentVector> out;
  std::vector<unsigned> e{1};
  auto extend = [&](auto&& self, unsigned sum) -> void {
    if (e.size() >= min_l) out.emplace_back(e);
    if (e.size() == max_l) return;
    for (unsigned next = e.back(); sum + next <= max_sum; ++next) {
      e.push_back(next);
      self(self, sum + next);
      e.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

struct ArrangementCase {
  std::string label;
  Arrangement arrangement;
  std::optional<ExponentVector> built_from;
};

// For a central arrangement in three variables chi(t) = (t - 1)(t^2 - (n - 1)t
// + b2 - n + 1) with b2 = sum over intersection lines X of (|A_X| - 1). A free
// arrangement has chi splitting over the integers, so a quadratic factor with
// a non-square discriminant certifies non-freeness.
bool chi_certifies_not_free(const Arrangement& a) {
  const RationalMatrix c = a.coefficient_matrix();
  std::map<std::vector<Rational>, std::set<std::size_t>> points;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      std::vector<Rational> p{c[i][1] * c[j][2] - c[i][2] * c[j][1], c[i][2] * c[j][0] - c[i][0] * c[j][2],
                              c[i][0] * c[j][1] - c[i][1] * c[j][0]};
      Rational lead = *std::find_if(p.begin(), p.end(), [](const Rational& x) { return sgn(x) != 0; });
      for (auto& x : p) x /= lead;
      points[p].insert({i, j});
    }
  long n = static_cast<long>(c.size()), b2 = 0;
  for (const auto& [p, lines] : points) b2 += static_cast<long>(lines.size()) - 1;
  long disc = (n - 1) * (n - 1) - 4 * (b2 - n + 1);
  if (disc < 0) return true;
  long r = std::lround(std::sqrt(static_cast<double>(disc)));
  return r * r != disc;
}

// 10 supersolvable arrangements and 10 perturbations of supersolvable line
// arrangements, each perturbation certified non-free by chi.
const std::vector<ArrangementCase>& corpus() {
  static const std::vector<ArrangementCase> cases = [] {
    std::vector<ArrangementCase> out;
    const std::vector<ExponentVector> seeds{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3},
                                            {1, 1, 4}, {1, 3, 3}, {1, 2, 4}, {1, 1, 1, 2}, {1, 1, 2, 2}};
    for (const auto& e : seeds) out.push_back({"supersolvable " + to_string(e), supersolvable_from_exponents(e), e});
    const std::vector<ExponentVector> bases{{1, 1, 3}, {1, 2, 2}, {1, 2, 3}, {1, 1, 4}, {1, 3, 3},
                                            {1, 2, 4}, {1, 3, 4}, {1, 2, 5}, {1, 3, 5}, {1, 4, 4}};
    std::mt19937_64 rng(2024);
    for (const auto& e : bases) {
      Arrangement base = supersolvable_from_exponents(e);
      RationalMatrix rows = base.coefficient_matrix();
      for (int attempt = 0;; ++attempt) {
        if (attempt == 1000) throw std::runtime_error("no certified perturbation of " + to_string(e));
        for (auto& x : rows.back()) x = uniform_entry(rng, 5);
        if (rows.back() == RationalMatrix::value_type(3, 0) || rank(rows) != 3) continue;
        Arrangement a = Arrangement::from_coefficients(rows, base.nvars());
        if (validate(a).distinct && chi_certifies_not_free(a)) {
          out.push_back({"perturbed " + to_string(e), a, std::nullopt});
          break;
        }
      }
    }
    return out;
  }();
  return cases;
}

const std::vector<FreenessReport>& corpus_reports() {
  static const std::vector<FreenessReport> reports = [] {
    std::vector<FreenessReport> out;
    for (const auto& c : corpus()) out.push_back(analyze(c.arrangement, seeded(5), Method::both));
    return out;
  }();
  return reports;
}

}  // namespace

TEST(Property, RginIsIdempotentOnBorelIdeals) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 60; ++k) {
    std::size_t l = 2 + static_cast<std::size_t>(k % 3);
    MonomialIdeal b = random_borel(rng, l, 6);
    ASSERT_TRUE(is_strongly_stable(b)) << to_string(b);
    GinConfig cfg = seeded(static_cast<std::uint64_t>(k));
    if (l == 4) cfg.coeff_mode = CoeffMode::modular();
    EXPECT_EQ(rgin(b, cfg).ideal.ideal(), b) << to_string(b);
  }
}

TEST(Property, RginIsIdempotentInFourVariables) {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 50; ++k) {
    MonomialIdeal b = random_borel(rng, 4, 4);
    EXPECT_EQ(rgin(b, seeded(static_cast<std::uint64_t>(k))).ideal.ideal(), b) << to_string(b);
  }
}

TEST(Property, TriangleInequalityOnBorelMatrices) {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 100; ++k) {
    std::size_t l = 2 + static_cast<std::size_t>(k % 4);
    MonomialIdeal b = random_borel(rng, l, 6);
    auto m = sectional_matrix(b);
    expect_triangle_inequality(m);
    // the cross-check inside triangle_equality throws on any mismatch
    for (std::size_t i = 2; i <= l; ++i)
      for (unsigned d = 1; d <= m.dmax(); ++d) EXPECT_NO_THROW(triangle_equality(m, i, d));
  }
}

TEST(Property, SectionalMatrixMatchesBruteForce) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 50; ++k) {
    MonomialIdeal b = random_borel(rng, 3, 5);
    auto m = sectional_matrix(b, 7);
    for (std::size_t i = 1; i <= 3; ++i) {
      for (unsigned d = 0; d <= 7; ++d) {
        std::uint64_t count = 0;
        for (unsigned a = 0; a <= d; ++a)
          for (unsigned c = 0; a + c <= d; ++c) {
            PowerProduct t{a, c, d - a - c};
            if (t.max_variable() < static_cast<int>(i) && !b.contains(t)) ++count;
          }
        EXPECT_EQ(m(i, d), count) << to_string(b) << " at (" << i << "," << d << ")";
      }
    }
  }
}

TEST(Property, HilbertFunctionInvariantUnderRgin) {
  std::mt19937_64 rng(505);
  int checked = 0;
  while (checked < 50) {
    std::vector<QPolynomial> gens;
    for (long k = uniform_int(rng, 2, 3); k > 0; --k) {
      auto degree = static_cast<unsigned>(uniform_int(rng, 1, 3));
      QPolynomial f = random_form(rng, 3, degree, static_cast<unsigned>(uniform_int(rng, 2, 4)));
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    MonomialIdeal lt = leading_term_ideal(buchberger(gens));
    if (lt.is_zero()) continue;
    auto r = rgin(gens, seeded(static_cast<std::uint64_t>(checked)));
    for (unsigned d = 0; d <= lt.max_degree() + 3; ++d)
      EXPECT_EQ(hilbert_function(r.ideal.ideal(), d), hilbert_function(lt, d)) << "case " << checked << " degree " << d;
    expect_triangle_inequality(sectional_matrix(r.ideal.ideal()));
    ++checked;
  }
}

TEST(Property, VerdictAgreementOnCorpus) {
  const auto& reports = corpus_reports();
  ASSERT_EQ(reports.size(), 20u);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    ASSERT_TRUE(r.rgin_verdict && r.sectional_verdict);
    EXPECT_EQ(*r.rgin_verdict, r.sectional_verdict->free) << corpus()[k].label;
    if (corpus()[k].built_from) {
      EXPECT_TRUE(r.free) << corpus()[k].label;
      if (r.l == 3) EXPECT_FALSE(chi_certifies_not_free(corpus()[k].arrangement)) << corpus()[k].label;
    } else {
      EXPECT_FALSE(r.free) << corpus()[k].label;
    }
    expect_triangle_inequality(r.sectional);
  }
}

TEST(Property, SupersolvableConstructionIsSound) {
  const auto& reports = corpus_reports();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& c = corpus()[k];
    if (!c.built_from) continue;
    const auto& r = reports[k];
    ASSERT_TRUE(r.exponents.has_value()) << c.label;
    EXPECT_EQ(*r.exponents, *c.built_from);
    EXPECT_EQ(r.rgin, rgin_from_exponents(*c.built_from)) << c.label;
  }
}

TEST(Property, SupersolvableConstructionAllSmallExponents) {
  for (const auto& e : all_exponents(8, 2, 4)) {
    GinConfig cfg = seeded(e.sum());
    cfg.coeff_mode = CoeffMode::modular();
    auto r = analyze(supersolvable_from_exponents(e), cfg, Method::both);
    EXPECT_TRUE(r.free) << to_string(e);
    ASSERT_TRUE(r.exponents.has_value()) << to_string(e);
    EXPECT_EQ(*r.exponents, e);
    EXPECT_EQ(r.rgin, rgin_from_exponents(e)) << to_string(e);
  }
}

TEST(Property, GeneratorDegreesHaveNoHoles) {
  for (const auto& r : corpus_reports()) {
    const auto& b = r.rgin.ideal();
    std::set<unsigned> degrees;
    for (const auto& g : b.generators()) degrees.insert(g.degree());
    EXPECT_EQ(*degrees.begin(), r.n - 1) << to_string(b);
    for (unsigned d = *degrees.begin(); d <= *degrees.rbegin(); ++d) EXPECT_TRUE(degrees.count(d)) << to_string(b);
  }
}

TEST(Property, FreeArrangementBounds) {
  for (const auto& r : corpus_reports()) {
    if (!r.free || !r.essential) continue;
    EXPECT_EQ(r.rgin.generators().size(), r.n);
    EXPECT_LE(*r.regularity + r.l + 1, 2 * r.n);
    ASSERT_TRUE(r.shape.has_value());
    EXPECT_EQ(r.shape->lambda.back(), *r.d0 + 1);
    for (std::size_t i = 0; i + 1 < r.shape->lambda.size(); ++i) {
      unsigned gap = r.shape->lambda[i + 1] - r.shape->lambda[i];
      EXPECT_TRUE(gap == 1 || gap == 2);
    }
  }
}

TEST(Property, ExponentRoundTrips) {
  auto cases = all_exponents(10, 2, 4);
  ASSERT_GE(cases.size(), 50u);
  for (const auto& e : cases) {
    StronglyStableIdeal b = rgin_from_exponents(e);
    EXPECT_EQ(exponents_from_rgin(b, e.size()), e) << to_string(e);
    auto v = realizable_as_free(b, e.size());
    EXPECT_TRUE(v.realizable) << to_string(e);
    if (v.exponents) EXPECT_EQ(*v.exponents, e);
    EXPECT_TRUE(v.lambda_chain_condition) << to_string(e);
    EXPECT_EQ(rgin_from_exponents(exponents_from_rgin(b, e.size())), b);
  }
}

TEST(Property, RealizabilityAgreesWithLambdaCondition) {
  // every lex segment with l generators in the lowest degree, l = 2, 3
  int checked = 0;
  for (std::size_t l = 2; l <= 3; ++l) {
    for (unsigned n = 3; n <= 7; ++n) {
      // lambda_1 < ... < lambda_{n-1} with lambda_i <= 2i + 2
      std::vector<unsigned> lam;
      auto rec = [&](auto&& self, unsigned i) -> void {
        if (i == n) {
          std::vector<PowerProduct> gens{PowerProduct::variable(l, 0, n - 1)};
          for (unsigned k = 1; k < n; ++k) {
            PowerProduct t(l);
            t.set(0, n - 1 - k);
            t.set(1, lam[k - 1]);
            gens.push_back(t);
          }
          MonomialIdeal b(l, gens);
          if (!is_strongly_stable(b)) return;
          auto v = realizable_as_free(StronglyStableIdeal(b), l);
          if (v.failure != RealizabilityFailure::beta0_dmin_not_l && v.failure != RealizabilityFailure::not_cm_codim2) {
            EXPECT_EQ(v.realizable, v.lambda_chain_condition) << to_string(b);
            ++checked;
          }
          return;
        }
        for (unsigned x = lam.empty() ? 1 : lam.back() + 1; x <= 2 * i + 2; ++x) {
          lam.push_back(x);
          self(self, i + 1);
          lam.pop_back();
        }
      };
      rec(rec, 1);
    }
  }
  EXPECT_GE(checked, 50);
}
