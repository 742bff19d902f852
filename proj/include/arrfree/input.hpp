#ifndef ARRFREE_INPUT_HPP
#define ARRFREE_INPUT_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/monomial_ideal.hpp"
#include "arrfree/polynomial.hpp"

namespace arrfree {

/// Syntax or semantic error in an input document, anchored at a 1-based
/// line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

enum class DocumentKind { arrangement, ideal, polynomials };

/// Parsed input file.
///
///   vars x y z
///   hyperplane x + y - z      (arrangement files)
///   gen x^2*y                 (monomial ideal files)
///   poly x^4 - y^2 z^2        (polynomial ideal files)
///
/// `#` starts a comment; `*` may be left out between factors.
struct InputDocument {
  DocumentKind kind = DocumentKind::arrangement;
  std::vector<std::string> vars;
  std::vector<QPolynomial> items;
  std::vector<std::size_t> item_lines;
  std::string source;

  std::size_t nvars() const noexcept { return vars.size(); }

  Arrangement arrangement() const {
    if (kind != DocumentKind::arrangement) throw std::invalid_argument(source + ": not an arrangement file");
    return Arrangement(vars.size(), items);
  }

  MonomialIdeal monomial_ideal() const {
    if (kind != DocumentKind::ideal) throw std::invalid_argument(source + ": not a monomial ideal file");
    std::vector<PowerProduct> gens;
    for (const auto& f : items) gens.push_back(f.leading_monomial());
    return MonomialIdeal(vars.size(), std::move(gens));
  }
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line, std::size_t offset, const std::vector<std::string>& vars)
      : text_(text), line_(line), offset_(offset), vars_(vars) {}

  QPolynomial parse() {
    QPolynomial f = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, offset_ + pos_ + 1, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  QPolynomial expression() {
    QPolynomial f(vars_.size());
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    f = term();
    if (negate) f = -f;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_++] == '-';
      QPolynomial t = term();
      f = minus ? f - t : f + t;
    }
    return f;
  }

  QPolynomial term() {
    QPolynomial f = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        f *= factor();
      } else if (peek('/')) {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        Rational d = number();
        if (sgn(d) == 0) {
          pos_ = at;
          fail("division by zero");
        }
        f = f.scaled(1 / d);
      } else if (starts_primary()) {
        f *= factor();
      } else {
        return f;
      }
    }
  }

  QPolynomial factor() {
    QPolynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
    Rational e = number();
    if (e > 255) fail("exponent too large");
    QPolynomial out = QPolynomial::constant(vars_.size(), 1);
    for (long k = 0; k < e.get_num().get_si(); ++k) out *= base;
    return out;
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return Rational(mpz_class(std::string(text_.substr(start, pos_ - start))));
  }

  QPolynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QPolynomial f = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QPolynomial::constant(vars_.size(), number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return QPolynomial::variable(vars_.size(), i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t line_, offset_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one expression over `vars`; positions in errors refer to `line`.
inline QPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars, std::size_t line = 1,
                                    std::size_t column_offset = 0) {
  return detail::ExpressionParser(text, line, column_offset, vars).parse();
}

inline InputDocument parse_input_text(const std::string& text, const std::string& source = "<input>") {
  InputDocument doc;
  doc.source = source;
  bool have_vars = false;
  bool have_kind = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t kw_end = line.find_first_of(" \t\r", start);
    if (kw_end == std::string::npos) kw_end = line.size();
    std::string keyword = line.substr(start, kw_end - start);
    std::string rest = line.substr(kw_end);

    if (keyword == "vars") {
      if (have_vars) throw ParseError(lineno, start + 1, "duplicate vars line");
      std::size_t at = kw_end;
      for (;;) {
        at = line.find_first_not_of(" \t\r", at);
        if (at == std::string::npos) break;
        std::size_t end = line.find_first_of(" \t\r", at);
        if (end == std::string::npos) end = line.size();
        std::string name = line.substr(at, end - at);
        std::size_t col = at + 1;
        at = end;
        bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
        for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError(lineno, col, "bad variable name '" + name + "'");
        if (std::find(doc.vars.begin(), doc.vars.end(), name) != doc.vars.end())
          throw ParseError(lineno, col, "variable '" + name + "' declared twice");
        doc.vars.push_back(name);
      }
      if (doc.vars.empty()) throw ParseError(lineno, start + 1, "vars line declares no variables");
      if (doc.vars.size() > kMaxVariables)
        throw ParseError(lineno, start + 1, "at most " + std::to_string(kMaxVariables) + " variables");
      have_vars = true;
      continue;
    }

    DocumentKind kind;
    if (keyword == "hyperplane") {
      kind = DocumentKind::arrangement;
    } else if (keyword == "gen") {
      kind = DocumentKind::ideal;
    } else if (keyword == "poly") {
      kind = DocumentKind::polynomials;
    } else {
      throw ParseError(lineno, start + 1, "unknown keyword '" + keyword + "'");
    }
    if (!have_vars) throw ParseError(lineno, start + 1, "vars line must come first");
    if (have_kind && kind != doc.kind) throw ParseError(lineno, start + 1, "cannot mix '" + keyword + "' with earlier lines");
    doc.kind = kind;
    have_kind = true;

    QPolynomial f = parse_polynomial(rest, doc.vars, lineno, kw_end);
    std::size_t col = line.find_first_not_of(" \t\r", kw_end);
    col = col == std::string::npos ? kw_end + 1 : col + 1;
    if (f.is_zero()) throw ParseError(lineno, col, "expression is zero");
    if (kind == DocumentKind::arrangement && (f.total_degree() != 1 || !f.is_homogeneous()))
      throw ParseError(lineno, col, "hyperplane must be a linear form without constant term");
    if (kind == DocumentKind::ideal && f.terms().size() != 1)
      throw ParseError(lineno, col, "generator must be a single monomial");
    doc.items.push_back(std::move(f));
    doc.item_lines.push_back(lineno);
  }
  if (!have_vars) throw ParseError(lineno + 1, 1, "missing vars line");
  if (doc.items.empty()) throw ParseError(lineno + 1, 1, "no hyperplane, gen or poly lines");
  return doc;
}

inline InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), path);
}

}  // namespace arrfree

#endif  // ARRFREE_INPUT_HPP
