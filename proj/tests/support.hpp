#ifndef ARRFREE_TESTS_SUPPORT_HPP
#define ARRFREE_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "arrfree/arrfree.hpp"

namespace testing_support {

using namespace arrfree;

inline QPolynomial poly(const std::string& text, std::size_t l = 3) {
  return parse_polynomial(text, default_variable_names(l));
}

inline std::vector<QPolynomial> polys(std::initializer_list<const char*> texts, std::size_t l = 3) {
  std::vector<QPolynomial> out;
  for (const char* t : texts) out.push_back(poly(t, l));
  return out;
}

inline MonomialIdeal ideal(std::initializer_list<const char*> gens, std::size_t l = 3) {
  return ideal_from_strings(std::vector<std::string>(gens.begin(), gens.end()), l);
}

inline StronglyStableIdeal borel(std::initializer_list<const char*> gens, std::size_t l = 3) {
  return StronglyStableIdeal(ideal(gens, l));
}

inline Arrangement arrangement(std::initializer_list<const char*> forms, std::size_t l = 3) {
  return Arrangement(l, polys(forms, l));
}

inline PowerProduct pp(std::initializer_list<unsigned> e) { return PowerProduct(e); }

inline GinConfig seeded(std::uint64_t seed = 7) {
  GinConfig cfg;
  cfg.seed = seed;
  return cfg;
}

inline std::vector<std::uint64_t> row(const SectionalMatrix& m, std::size_t i) { return m.values().at(i - 1); }

}  // namespace testing_support

#endif  // ARRFREE_TESTS_SUPPORT_HPP
