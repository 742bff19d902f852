#ifndef ARRFREE_REPORT_IO_HPP
#define ARRFREE_REPORT_IO_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrfree/arrangement.hpp"
#include "arrfree/input.hpp"
#include "arrfree/monomial.hpp"

namespace arrfree {

using json = nlohmann::ordered_json;

namespace detail {

inline json degree_map(const std::map<unsigned, std::uint64_t>& m) {
  json out = json::object();
  for (const auto& [deg, count] : m) out[std::to_string(deg)] = count;
  return out;
}

inline json optional_degree(const std::optional<unsigned>& d) { return d ? json(*d) : json(nullptr); }

inline std::optional<unsigned> read_optional_degree(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<unsigned>();
}

inline json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) {
      if (e.get_den() == 1 && e.get_num().fits_slong_p())
        r.push_back(e.get_num().get_si());
      else
        r.push_back(e.get_str());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
  RationalMatrix m;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(e.is_string() ? Rational(e.get<std::string>()) : Rational(e.get<long>()));
    m.push_back(std::move(r));
  }
  return m;
}

inline CoeffMode coeff_mode_from_string(const std::string& s) {
  if (s == "exact") return CoeffMode::exact();
  if (s.rfind("mod:", 0) != 0) throw std::invalid_argument("coefficient mode must be exact or mod:<p>[,<p2>]");
  CoeffMode mode;
  std::stringstream in(s.substr(4));
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad prime '" + part + "'");
    mode.primes.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (mode.primes.size() == 1) mode.primes.push_back(mode.primes[0] == 31991 ? 32003 : 31991);
  if (mode.primes.size() != 2) throw std::invalid_argument("modular mode takes one or two primes");
  return mode;
}

}  // namespace detail

/// "exact", "mod:p" (paired with a second default prime) or "mod:p1,p2".
inline CoeffMode parse_coeff_mode(const std::string& s) { return detail::coeff_mode_from_string(s); }

inline MonomialIdeal ideal_from_strings(const std::vector<std::string>& gens, std::size_t l) {
  const auto names = default_variable_names(l);
  std::vector<PowerProduct> out;
  for (const auto& g : gens) {
    QPolynomial f = parse_polynomial(g, names);
    if (f.terms().size() != 1) throw std::invalid_argument("'" + g + "' is not a monomial");
    out.push_back(f.leading_monomial());
  }
  return MonomialIdeal(l, std::move(out));
}

inline json sectional_json(const SectionalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.values()) rows.push_back(row);
  return rows;
}

inline json to_json(const FreenessReport& r) {
  json j;
  j["free"] = r.free;
  j["trivially_free"] = r.trivially_free;
  j["method"] = to_string(r.method);
  j["n"] = r.n;
  j["l"] = r.l;
  j["essential"] = r.essential;
  j["rgin"] = generator_strings(r.rgin.ideal());
  j["exponents"] = r.exponents ? json(r.exponents->values()) : json(nullptr);
  j["d0"] = detail::optional_degree(r.d0);
  j["regularity"] = detail::optional_degree(r.regularity);
  j["sectional_matrix"] = sectional_json(r.sectional);
  j["betti"] = {{"b0", detail::degree_map(r.betti.beta0())}, {"b1", detail::degree_map(r.betti.beta1())}};
  json matrices = json::array();
  for (const auto& m : r.provenance.matrices) matrices.push_back(detail::matrix_json(m));
  j["provenance"] = {{"seed", r.provenance.seed},
                     {"trials", r.provenance.trials},
                     {"batch", r.provenance.batch},
                     {"coeff_mode", r.provenance.coeff_mode.to_string()},
                     {"matrices", matrices}};
  j["rgin_verdict"] = r.rgin_verdict ? json(*r.rgin_verdict) : json(nullptr);
  if (r.sectional_verdict) {
    const auto& s = *r.sectional_verdict;
    j["sectional_verdict"] = {{"free", s.free},
                              {"zero_matrix", s.zero_matrix},
                              {"d0", detail::optional_degree(s.d0)},
                              {"row3", s.row3},
                              {"row2_sum", s.row2_sum},
                              {"condition1", s.condition1},
                              {"condition2", s.condition2}};
  } else {
    j["sectional_verdict"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

/// Inverse of to_json. The sectional matrix, Betti table and lex-segment
/// shape are rebuilt from the rgin and checked against the stored values.
inline FreenessReport report_from_json(const json& j) {
  FreenessReport r;
  r.free = j.at("free").get<bool>();
  r.trivially_free = j.at("trivially_free").get<bool>();
  const std::string method = j.at("method").get<std::string>();
  r.method = method == "rgin" ? Method::rgin : method == "sectional" ? Method::sectional : Method::both;
  r.n = j.at("n").get<std::size_t>();
  r.l = j.at("l").get<std::size_t>();
  r.essential = j.at("essential").get<bool>();
  r.rgin = StronglyStableIdeal(ideal_from_strings(j.at("rgin").get<std::vector<std::string>>(), r.l));
  if (!j.at("exponents").is_null()) r.exponents = ExponentVector(j.at("exponents").get<std::vector<unsigned>>());
  r.d0 = detail::read_optional_degree(j.at("d0"));
  r.regularity = detail::read_optional_degree(j.at("regularity"));

  const auto& rows = j.at("sectional_matrix");
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty sectional matrix");
  r.sectional = SectionalMatrix(r.rgin.ideal(), static_cast<unsigned>(rows.front().size() - 1));
  if (sectional_json(r.sectional) != rows) throw std::invalid_argument("sectional matrix does not match the rgin");
  r.betti = betti_eliahou_kervaire(r.rgin);
  if (detail::degree_map(r.betti.beta0()) != j.at("betti").at("b0") ||
      detail::degree_map(r.betti.beta1()) != j.at("betti").at("b1"))
    throw std::invalid_argument("Betti numbers do not match the rgin");
  r.shape = is_cm_codim2_stable(r.rgin);

  const auto& p = j.at("provenance");
  r.provenance.seed = p.at("seed").get<std::uint64_t>();
  r.provenance.trials = p.at("trials").get<unsigned>();
  r.provenance.batch = p.at("batch").get<unsigned>();
  r.provenance.coeff_mode = parse_coeff_mode(p.at("coeff_mode").get<std::string>());
  for (const auto& m : p.at("matrices")) r.provenance.matrices.push_back(detail::matrix_from_json(m));

  if (!j.at("rgin_verdict").is_null()) r.rgin_verdict = j.at("rgin_verdict").get<bool>();
  if (const auto& s = j.at("sectional_verdict"); !s.is_null()) {
    SectionalEvaluation ev;
    ev.free = s.at("free").get<bool>();
    ev.zero_matrix = s.at("zero_matrix").get<bool>();
    ev.d0 = detail::read_optional_degree(s.at("d0"));
    ev.row3 = s.at("row3").get<std::array<std::uint64_t, 3>>();
    ev.row2_sum = s.at("row2_sum").get<std::uint64_t>();
    ev.condition1 = s.at("condition1").get<bool>();
    ev.condition2 = s.at("condition2").get<bool>();
    r.sectional_verdict = ev;
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

/// Sectional matrix as a text table. The d0 column is flagged in the
/// header, the row-3 cells read by the freeness test are bracketed, and a
/// trailing '*' marks cells where the triangle equality fails.
inline std::string render_sectional(const SectionalMatrix& m, std::optional<unsigned> d0 = std::nullopt) {
  std::size_t width = 4;
  for (const auto& row : m.values())
    for (auto v : row) width = std::max(width, std::to_string(v).size() + 4);
  std::ostringstream out;
  out << std::setw(8) << "d";
  for (unsigned d = 0; d <= m.dmax(); ++d) {
    std::string h = std::to_string(d);
    if (d0 && d == *d0) h = "d0=" + h;
    out << std::setw(static_cast<int>(std::max(width, h.size() + 1))) << h;
  }
  out << '\n';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    out << std::setw(8) << ("M(" + std::to_string(i) + ",d)");
    for (unsigned d = 0; d <= m.dmax(); ++d) {
      std::string cell = std::to_string(m(i, d));
      if (i == 3 && d0 && d >= *d0 && d <= *d0 + 2) cell = "[" + cell + "]";
      if (i >= 2 && d >= 1 && m(i, d) != m(i - 1, d) + m(i, d - 1)) cell += "*";
      std::string h = std::to_string(d);
      if (d0 && d == *d0) h = "d0=" + h;
      out << std::setw(static_cast<int>(std::max(width, h.size() + 1))) << cell;
    }
    out << '\n';
  }
  return out.str();
}

inline std::string render_betti(const BettiTable& b) {
  std::ostringstream out;
  for (std::size_t i = 0; i < b.betti.size(); ++i) {
    out << "  beta" << i << ":";
    for (const auto& [deg, count] : b.betti[i]) out << " (" << deg << ")" << count;
    out << '\n';
  }
  return out.str();
}

inline std::string render_report(const FreenessReport& r) {
  std::ostringstream out;
  out << "hyperplanes: " << r.n << "  dimension: " << r.l << "  " << (r.essential ? "essential" : "not essential")
      << '\n';
  out << "rgin(J): " << to_string(r.rgin) << '\n';
  out << "free: " << (r.free ? "yes" : "no");
  if (r.trivially_free) out << " (J = S)";
  out << "  [method " << to_string(r.method) << "]\n";
  if (r.rgin_verdict) out << "  generator test: " << (*r.rgin_verdict ? "free" : "not free") << '\n';
  if (r.sectional_verdict) {
    const auto& s = *r.sectional_verdict;
    out << "  sectional test: " << (s.free ? "free" : "not free");
    if (s.zero_matrix) {
      out << " (zero matrix)";
    } else if (r.l >= 3 && s.d0) {
      out << "  M(3,d0..d0+2) = " << s.row3[0] << ", " << s.row3[1] << ", " << s.row3[2]
          << "  sum M(2,d<=d0) = " << s.row2_sum;
    }
    out << '\n';
  }
  if (r.exponents) out << "exponents: " << to_string(*r.exponents) << '\n';
  if (r.d0) out << "d0: " << *r.d0 << '\n';
  if (r.regularity) out << "regularity: " << *r.regularity << '\n';
  out << "betti numbers:\n" << render_betti(r.betti);
  out << "sectional matrix:\n" << render_sectional(r.sectional, r.l >= 3 ? r.d0 : std::nullopt);
  out << "provenance: seed " << r.provenance.seed << ", trials " << r.provenance.trials << ", batch "
      << r.provenance.batch << ", coefficients " << r.provenance.coeff_mode.to_string() << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out.str();
}

/// Arrangement in the input grammar, so it can be fed back in.
inline std::string render_arrangement(const Arrangement& a) {
  const auto names = default_variable_names(a.nvars());
  std::ostringstream out;
  out << "vars";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
  for (const auto& f : a.forms()) out << "hyperplane " << to_string(f, names) << '\n';
  return out.str();
}

}  // namespace arrfree

#endif  // ARRFREE_REPORT_IO_HPP
