#ifndef ARRFREE_CLI_HPP
#define ARRFREE_CLI_HPP

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrfree/arrangement.hpp"
#include "arrfree/input.hpp"
#include "arrfree/report_io.hpp"

namespace arrfree::cli {

enum ExitCode : int { ok = 0, usage = 1, parse_error = 2, computation_failure = 3 };

/// Input that parsed but cannot be used for the requested command.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string method = "both";
  std::uint64_t seed = 0;
  unsigned trials = 2;
  long entry_bound = 10;
  unsigned max_retries = 5;
  std::string coeff = "exact";
  std::optional<unsigned> dmax;
  std::optional<unsigned> max_degree;
  bool json = false;
  std::vector<unsigned> exponents;
  std::optional<std::size_t> dim;
  bool verify = false;
};

namespace detail {

inline GinConfig gin_config(const Options& o) {
  GinConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.entry_bound = o.entry_bound;
  cfg.max_retries = o.max_retries;
  try {
    cfg.coeff_mode = parse_coeff_mode(o.coeff);
    cfg.groebner.max_degree = o.max_degree;
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("config", e.what());
  }
  return cfg;
}

inline InputDocument load(const Options& o) {
  try {
    return parse_input_file(o.file);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

inline Arrangement load_arrangement(const InputDocument& doc) {
  if (doc.kind != DocumentKind::arrangement) throw InputError(doc.source + ": expected hyperplane lines");
  Arrangement a = doc.arrangement();
  auto flags = validate(a);
  if (!flags.distinct) throw InputError(doc.source + ": repeated hyperplane (two forms are proportional)");
  return a;
}

inline Method parse_method(const std::string& m) {
  if (m == "rgin") return Method::rgin;
  if (m == "sectional") return Method::sectional;
  return Method::both;
}

inline json provenance_json(const GinCertificate& c) {
  FreenessReport r;
  r.provenance = c;
  return to_json(r)["provenance"];
}

// rgin of whatever the document describes: J(A), a monomial ideal or a
// polynomial ideal. Strongly stable monomial input is returned unchanged.
inline std::pair<StronglyStableIdeal, std::optional<GinCertificate>> document_rgin(const InputDocument& doc,
                                                                                  const GinConfig& cfg) {
  if (doc.kind == DocumentKind::arrangement) {
    GinResult g = rgin(jacobian_ideal(load_arrangement(doc)), cfg);
    return {g.ideal, g.certificate};
  }
  if (doc.kind == DocumentKind::ideal) {
    MonomialIdeal b = doc.monomial_ideal();
    if (is_strongly_stable(b)) return {StronglyStableIdeal(b), std::nullopt};
    GinResult g = rgin(b, cfg);
    return {g.ideal, g.certificate};
  }
  GinResult g = rgin(doc.items, cfg);
  return {g.ideal, g.certificate};
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  Arrangement a = load_arrangement(load(o));
  FreenessReport r = analyze(a, gin_config(o), parse_method(o.method), o.dmax);
  if (o.json)
    out << to_json(r).dump(2) << '\n';
  else
    out << render_report(r);
  return ok;
}

inline int cmd_rgin(const Options& o, std::ostream& out) {
  auto [b, cert] = document_rgin(load(o), gin_config(o));
  if (o.json) {
    json j;
    j["rgin"] = generator_strings(b.ideal());
    j["provenance"] = cert ? provenance_json(*cert) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << to_string(b) << '\n';
  }
  return ok;
}

inline int cmd_sm(const Options& o, std::ostream& out) {
  auto [b, cert] = document_rgin(load(o), gin_config(o));
  SectionalMatrix m = sectional_matrix(b.ideal(), o.dmax);
  std::optional<unsigned> d0;
  if (b.nvars() >= 2 && !b.ideal().is_whole_ring()) d0 = reduction_number(b.ideal(), b.nvars() - 2);
  if (o.json) {
    json j;
    j["rgin"] = generator_strings(b.ideal());
    j["d0"] = d0 ? json(*d0) : json(nullptr);
    j["sectional_matrix"] = sectional_json(m);
    out << j.dump(2) << '\n';
  } else {
    out << "rgin: " << to_string(b) << '\n' << render_sectional(m, b.nvars() >= 3 ? d0 : std::nullopt);
  }
  return ok;
}

inline int cmd_exponents(const Options& o, std::ostream& out) {
  InputDocument doc = load(o);
  std::optional<ExponentVector> e;
  if (doc.kind == DocumentKind::arrangement) {
    FreenessReport r = analyze(load_arrangement(doc), gin_config(o), Method::rgin);
    if (!r.free) throw NotAFreeRgin("arrangement is not free");
    if (!r.essential) throw NotAFreeRgin("exponents require an essential arrangement");
    e = r.exponents;
  } else if (doc.kind == DocumentKind::ideal) {
    MonomialIdeal b = doc.monomial_ideal();
    if (!is_strongly_stable(b)) throw NotAFreeRgin("ideal is not strongly stable");
    e = exponents_from_rgin(StronglyStableIdeal(b), o.dim.value_or(doc.nvars()));
  } else {
    throw InputError(doc.source + ": exponents need an arrangement or a monomial ideal");
  }
  if (o.json) {
    out << json{{"exponents", e->values()}}.dump(2) << '\n';
  } else {
    out << to_string(*e) << '\n';
  }
  return ok;
}

inline int cmd_construct(const Options& o, std::ostream& out) {
  ExponentVector e = [&] {
    try {
      return ExponentVector(o.exponents);
    } catch (const std::invalid_argument& ex) {
      throw CLI::ValidationError("--exponents", ex.what());
    }
  }();
  if (o.dim && *o.dim != e.size())
    throw CLI::ValidationError("--dim", "dimension " + std::to_string(*o.dim) + " does not match " +
                                            std::to_string(e.size()) + " exponents");
  if (e[0] != 1) throw CLI::ValidationError("--exponents", "first exponent must be 1");
  Arrangement a = supersolvable_from_exponents(e);
  if (o.json) {
    std::vector<std::string> forms;
    for (const auto& f : a.forms()) forms.push_back(to_string(f));
    out << json{{"exponents", e.values()}, {"l", a.nvars()}, {"hyperplanes", forms}}.dump(2) << '\n';
  } else {
    out << render_arrangement(a);
  }
  return ok;
}

inline int cmd_realize(const Options& o, std::ostream& out) {
  InputDocument doc = load(o);
  if (doc.kind != DocumentKind::ideal) throw InputError(doc.source + ": realize needs gen lines");
  MonomialIdeal b = doc.monomial_ideal();
  const std::size_t l = o.dim.value_or(doc.nvars());
  RealizabilityVerdict v;
  if (!is_strongly_stable(b)) {
    v.reasons.push_back("not strongly stable");
  } else {
    std::optional<GinConfig> verify;
    if (o.verify) verify = gin_config(o);
    v = realizable_as_free(StronglyStableIdeal(b), l, verify);
  }
  if (o.json) {
    json j;
    j["realizable"] = v.realizable;
    j["reasons"] = v.reasons;
    j["exponents"] = v.exponents ? json(v.exponents->values()) : json(nullptr);
    std::vector<std::string> forms;
    if (v.arrangement)
      for (const auto& f : v.arrangement->forms()) forms.push_back(to_string(f));
    j["hyperplanes"] = forms;
    j["verified"] = v.verified_end_to_end;
    out << j.dump(2) << '\n';
  } else {
    out << (v.realizable ? "YES" : "NO") << '\n';
    for (const auto& why : v.reasons) out << "reason: " << why << '\n';
    if (v.exponents) out << "exponents: " << to_string(*v.exponents) << '\n';
    if (v.arrangement) out << render_arrangement(*v.arrangement);
    if (v.verified_end_to_end) out << "verified: rgin(J(A)) = B\n";
  }
  return ok;
}

inline int cmd_conjecture(const Options& o, std::ostream& out) {
  auto [b, cert] = document_rgin(load(o), gin_config(o));
  ConjectureCheck c = check_conjecture_z(b);
  const auto names = default_variable_names(b.nvars());
  if (o.json) {
    std::vector<std::string> w;
    for (const auto& t : c.witnesses) w.push_back(to_string(t, names));
    out << json{{"holds", c.holds},
                {"vacuous", c.vacuous},
                {"d0", c.d0 ? json(*c.d0) : json(nullptr)},
                {"witnesses", w},
                {"note", c.note}}
               .dump(2)
        << '\n';
  } else {
    out << "rgin: " << to_string(b) << '\n' << "holds: " << (c.holds ? "yes" : "no") << '\n';
    if (c.d0) out << "d0: " << *c.d0 << '\n';
    for (const auto& t : c.witnesses)
      out << "witness: " << to_string(t, names) << " (degree " << t.degree() << " < " << *c.d0 + 1 << ")\n";
    if (!c.note.empty()) out << "note: " << c.note << '\n';
  }
  return ok;
}

}  // namespace detail

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code: 0 success, 1 usage, 2 unreadable or invalid input,
/// 3 computation failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Freeness of central hyperplane arrangements via generic initial ideals"};
  app.require_subcommand(1);
  Options o;

  auto add_gin = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed for the coordinate changes");
    sub->add_option("--trials", o.trials, "agreeing trials required")->check(CLI::Range(2u, 64u));
    sub->add_option("--entry-bound", o.entry_bound, "matrix entries drawn from [-b, b]")->check(CLI::PositiveNumber);
    sub->add_option("--max-retries", o.max_retries, "batches before giving up")->check(CLI::PositiveNumber);
    sub->add_option("--coeff", o.coeff, "exact | mod:<p>[,<p2>]");
    sub->add_option("--max-degree", o.max_degree, "abort Groebner computations above this degree");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "input file")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* analyze_cmd = app.add_subcommand("analyze", "full freeness report for an arrangement");
  add_file(analyze_cmd);
  add_gin(analyze_cmd);
  add_json(analyze_cmd);
  analyze_cmd->add_option("--method", o.method, "rgin | sectional | both")
      ->check(CLI::IsMember({"rgin", "sectional", "both"}));
  analyze_cmd->add_option("--dmax", o.dmax, "last degree of the sectional matrix");

  auto* rgin_cmd = app.add_subcommand("rgin", "generic initial ideal of J(A) or of an ideal");
  add_file(rgin_cmd);
  add_gin(rgin_cmd);
  add_json(rgin_cmd);

  auto* sm_cmd = app.add_subcommand("sm", "sectional matrix");
  add_file(sm_cmd);
  add_gin(sm_cmd);
  add_json(sm_cmd);
  sm_cmd->add_option("--dmax", o.dmax, "last degree of the matrix");

  auto* exp_cmd = app.add_subcommand("exponents", "exponents of a free arrangement or of a free rgin");
  add_file(exp_cmd);
  add_gin(exp_cmd);
  add_json(exp_cmd);
  exp_cmd->add_option("--dim", o.dim, "ambient dimension l for ideal input");

  auto* construct_cmd = app.add_subcommand("construct", "supersolvable arrangement with given exponents");
  construct_cmd->add_option("--exponents", o.exponents, "comma separated, first entry 1")->required()->delimiter(',');
  construct_cmd->add_option("--dim", o.dim, "ambient dimension (must equal the number of exponents)");
  add_json(construct_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "is a strongly stable ideal the rgin of a free arrangement");
  add_file(realize_cmd);
  add_gin(realize_cmd);
  add_json(realize_cmd);
  realize_cmd->add_option("--dim", o.dim, "ambient dimension l (default: number of variables)");
  realize_cmd->add_flag("--verify", o.verify, "recompute rgin(J(A)) for the constructed arrangement");

  auto* conj_cmd = app.add_subcommand("conjecture", "degree bound for generators involving the third variable");
  add_file(conj_cmd);
  add_gin(conj_cmd);
  add_json(conj_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*analyze_cmd) return detail::cmd_analyze(o, out);
    if (*rgin_cmd) return detail::cmd_rgin(o, out);
    if (*sm_cmd) return detail::cmd_sm(o, out);
    if (*exp_cmd) return detail::cmd_exponents(o, out);
    if (*construct_cmd) return detail::cmd_construct(o, out);
    if (*realize_cmd) return detail::cmd_realize(o, out);
    if (*conj_cmd) return detail::cmd_conjecture(o, out);
    return usage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  } catch (const ParseError& e) {
    err << o.file << ":" << e.what() << '\n';
    return parse_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const GenericityExhausted& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& c : e.candidates()) err << "  candidate: " << c << '\n';
    return computation_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return computation_failure;
  }
}

}  // namespace arrfree::cli

#endif  // ARRFREE_CLI_HPP
