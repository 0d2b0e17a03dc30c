#include "planepairs/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace planepairs {

VarNames VarNames::x(int n) {
  VarNames v;
  for (int i = 0; i <= n; ++i) v.names.push_back("x" + std::to_string(i));
  return v;
}

VarNames VarNames::xu(int n, int m) {
  VarNames v = x(n);
  for (int i = 1; i <= m; ++i) v.names.push_back("u" + std::to_string(i));
  return v;
}

VarNames VarNames::u(int m) {
  VarNames v;
  for (int i = 1; i <= m; ++i) v.names.push_back("u" + std::to_string(i));
  return v;
}

int VarNames::index_of(const std::string& s) const {
  for (int i = 0; i < (int)names.size(); ++i)
    if (names[i] == s) return i;
  return -1;
}

namespace {

class Parser {
public:
  Parser(const std::string& s, const VarNames& vars) : s_(s), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

private:
  const std::string& s_;
  const VarNames& vars_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    std::ostringstream os;
    os << "parse error at position " << pos_ << " in \"" << s_ << "\": " << why;
    throw std::invalid_argument(os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  int peek() {
    skip_ws();
    return pos_ < s_.size() ? (unsigned char)s_[pos_] : -1;
  }

  Polynomial expr() {
    int sign = 1;
    if (peek() == '+') ++pos_;
    else if (peek() == '-') { ++pos_; sign = -1; }
    Polynomial p = term().scaled(sign);
    for (;;) {
      int c = peek();
      if (c == '+') { ++pos_; p += term(); }
      else if (c == '-') { ++pos_; p -= term(); }
      else break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      int c = peek();
      if (c == '*') { ++pos_; p *= factor(); }
      else if (c == '(' || std::isalpha(c) || std::isdigit(c)) p *= factor();
      else break;
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      if (pos_ == start) fail("expected exponent");
      int k = std::stoi(s_.substr(start, pos_ - start));
      Polynomial r = Polynomial::constant(1, vars_.size());
      for (int i = 0; i < k; ++i) r *= base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    int c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '/'))
        ++pos_;
      Rational q(s_.substr(start, pos_ - start));
      q.canonicalize();
      return Polynomial::constant(q, vars_.size());
    }
    if (std::isalpha(c)) {
      size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = vars_.index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::var(idx, vars_.size());
    }
    fail("expected factor");
  }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarNames& vars) {
  return Parser(text, vars).parse();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const VarNames& vars) {
  std::vector<Polynomial> out;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\n") != std::string::npos)
        out.push_back(parse_polynomial(piece, vars));
      start = i + 1;
    }
  }
  return out;
}

std::string print_monomial(const Monomial& m, const VarNames& vars) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << vars.names[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
  }
  return os.str();
}

std::string print_polynomial(const Polynomial& p, const VarNames& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      if (a < 0) { os << "-"; a = -a; }
      else os << "+";
    }
    first = false;
    if (m.is_one()) os << to_string(a);
    else if (a == 1) os << print_monomial(m, vars);
    else os << to_string(a) << "*" << print_monomial(m, vars);
  }
  return os.str();
}

} // namespace planepairs
