#include "planepairs/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace planepairs {

QPoly QPoly::binom(long a, long k) {
  if (k < 0) throw std::invalid_argument("binom: k < 0");
  QPoly r = constant(1);
  Rational den = 1;
  for (long i = 0; i < k; ++i) {
    r = r * QPoly({Rational(a - i), Rational(1)}); // (t + a - i)
    den *= Rational(i + 1);
  }
  return r.scaled(1 / den);
}

Rational QPoly::eval(long t) const {
  Rational r = 0, p = 1;
  for (auto& q : c_) {
    r += q * p;
    p *= Rational(t);
  }
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  return *this + o.scaled(-1);
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (c_.empty() || o.c_.empty()) return QPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rational& q) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= q;
  return QPoly(std::move(r));
}

QPoly QPoly::shifted(long s) const {
  // P(t+s) = sum_i c_i (t+s)^i, expanded by the binomial theorem.
  QPoly r;
  QPoly base({Rational(s), Rational(1)}); // t + s
  QPoly pw = constant(1);
  for (size_t i = 0; i < c_.size(); ++i) {
    r = r + pw.scaled(c_[i]);
    pw = pw * base;
  }
  return r;
}

std::vector<Rational> QPoly::binomial_basis() const {
  std::vector<Rational> out(c_.size(), Rational(0));
  QPoly rem = *this;
  for (int i = degree(); i >= 0; --i) {
    if (rem.degree() < i) continue;
    Rational fact = 1;
    for (int j = 2; j <= i; ++j) fact *= j;
    Rational ci = rem.coeff(i) * fact; // lead of C(t+i,i) is 1/i!
    out[i] = ci;
    rem = rem - binom(i, i).scaled(ci);
  }
  if (!rem.is_zero()) throw std::logic_error("binomial_basis: residue");
  return out;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::vector<Rational> b = binomial_basis();
  std::ostringstream os;
  bool first = true;
  for (int i = (int)b.size() - 1; i >= 0; --i) {
    if (b[i] == 0) continue;
    Rational v = b[i];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? "-" : "+");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) os << to_string(v);
    else {
      if (v != 1) os << to_string(v) << "*";
      os << "C(t+" << i << "," << i << ")";
    }
  }
  return os.str();
}

namespace {

class QParser {
public:
  explicit QParser(const std::string& s) : s_(s) {}
  QPoly parse() {
    QPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error in \"" + s_ + "\": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  int peek() {
    skip_ws();
    return pos_ < s_.size() ? (unsigned char)s_[pos_] : -1;
  }
  long integer() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  QPoly expr() {
    int sign = 1;
    if (peek() == '+') ++pos_;
    else if (peek() == '-') { ++pos_; sign = -1; }
    QPoly p = term().scaled(sign);
    for (;;) {
      int c = peek();
      if (c == '+') { ++pos_; p = p + term(); }
      else if (c == '-') { ++pos_; p = p - term(); }
      else break;
    }
    return p;
  }

  QPoly term() {
    QPoly p = factor();
    while (peek() == '*' || peek() == '(' || peek() == 't' || peek() == 'C' ||
           std::isdigit(peek())) {
      if (peek() == '*') ++pos_;
      p = p * factor();
    }
    return p;
  }

  QPoly factor() {
    QPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      long k = integer();
      QPoly r = QPoly::constant(1);
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  QPoly atom() {
    int c = peek();
    if (c == '(') {
      ++pos_;
      QPoly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 't') { ++pos_; return QPoly::t(); }
    if (c == 'C') {
      ++pos_;
      if (peek() != '(') fail("expected '(' after C");
      ++pos_;
      QPoly arg = expr();
      if (peek() != ',') fail("expected ',' in C(...)");
      ++pos_;
      long k = integer();
      if (peek() != ')') fail("expected ')' in C(...)");
      ++pos_;
      if (k < 0) return QPoly();
      // C(f, k) = f(f-1)...(f-k+1)/k!
      QPoly r = QPoly::constant(1);
      Rational den = 1;
      for (long i = 0; i < k; ++i) {
        r = r * (arg - QPoly::constant(i));
        den *= Rational(i + 1);
      }
      return r.scaled(1 / den);
    }
    if (std::isdigit(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '/'))
        ++pos_;
      Rational q(s_.substr(start, pos_ - start));
      q.canonicalize();
      return QPoly::constant(q);
    }
    fail("expected factor");
  }
};

using ZPoly = std::vector<Integer>; // dense integer poly in s, ascending

ZPoly zmul_one_minus_spow(const ZPoly& a, int d) {
  // a * (1 - s^d)
  ZPoly r(a.size() + d, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, int bshift = 0) {
  ZPoly r(std::max(a.size(), b.size() + bshift), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i + bshift] += b[i];
  return r;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {Integer(1)};
  if (gens.size() == 1 && gens[0].is_one()) return {Integer(0)};
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    ZPoly r = {Integer(1)};
    for (auto& m : gens) r = zmul_one_minus_spow(r, m.degree());
    return r;
  }
  // Pivot variable: appears in the most generators.
  int nv = gens[0].nvars(), best = -1, bestcount = -1;
  for (int v = 0; v < nv; ++v) {
    int count = 0;
    for (auto& m : gens)
      if (m.e[v] > 0) ++count;
    if (count > bestcount) { bestcount = count; best = v; }
  }
  // 0 -> (S/(I:x))(-1) -> S/I -> S/(I+(x)) -> 0, so
  // N(I) = N(I + (x)) + s * N(I : x).
  std::vector<Monomial> plus, colon;
  for (auto& m : gens) {
    if (m.e[best] == 0) plus.push_back(m);
    Monomial q = m;
    if (q.e[best] > 0) --q.e[best];
    colon.push_back(q);
  }
  plus.push_back(Monomial::var(best, nv));
  return zadd(numerator_rec(std::move(plus)), numerator_rec(std::move(colon)),
              1);
}

} // namespace

QPoly parse_qpoly(const std::string& text) { return QParser(text).parse(); }

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens,
                                       int nvars) {
  for (auto& m : gens)
    if (m.nvars() != nvars)
      throw std::invalid_argument("hilbert_numerator: wrong ring");
  ZPoly r = numerator_rec(gens);
  ztrim(r);
  return r;
}

std::vector<Integer> hilbert_numerator(const Ideal& I) {
  return hilbert_numerator(initial_ideal(I, MonomialOrder::grevlex()),
                           I.nvars());
}

Integer hilbert_function_from_numerator(const std::vector<Integer>& N,
                                        int nvars, long t) {
  Integer h = 0;
  for (size_t j = 0; j < N.size(); ++j) {
    if ((long)j > t) break;
    h += N[j] * binomial(t - (long)j + nvars - 1, nvars - 1);
  }
  return h;
}

Integer hilbert_function(const Ideal& I, long t) {
  if (t < 0) return 0;
  return hilbert_function_from_numerator(hilbert_numerator(I), I.nvars(), t);
}

QPoly hilbert_polynomial(const std::vector<Monomial>& gens, int nvars) {
  std::vector<Integer> N = hilbert_numerator(gens, nvars);
  QPoly P;
  for (size_t j = 0; j < N.size(); ++j)
    if (N[j] != 0)
      P = P + QPoly::binom(nvars - 1 - (long)j, nvars - 1)
                  .scaled(Rational(N[j]));
  return P;
}

QPoly hilbert_polynomial(const Ideal& I) {
  return hilbert_polynomial(initial_ideal(I, MonomialOrder::grevlex()),
                            I.nvars());
}

int krull_dim(const Ideal& I) {
  std::vector<Monomial> leads = initial_ideal(I, MonomialOrder::grevlex());
  int nv = I.nvars();
  for (auto& m : leads)
    if (m.is_one()) throw std::invalid_argument("krull_dim: unit ideal");
  // Max cardinality of a variable set S such that no minimal generator of
  // in(I) is supported inside S.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (auto& m : leads) {
      bool inside = true;
      for (int v = 0; v < nv && inside; ++v)
        if (m.e[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) { ok = false; break; }
    }
    if (ok) best = size;
  }
  // Cross-check: pole order of the Hilbert series at s = 1.
  std::vector<Integer> N = hilbert_numerator(leads, nv);
  int cancelled = 0;
  std::vector<Integer> cur = N;
  auto eval1 = [](const std::vector<Integer>& p) {
    Integer v = 0;
    for (auto& c : p) v += c;
    return v;
  };
  while (!cur.empty() && eval1(cur) == 0) {
    // p = q * (1-s) gives q_i = p_0 + ... + p_i (partial sums).
    std::vector<Integer> q(cur.size() - 1, Integer(0));
    Integer acc = 0;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      acc += cur[i];
      q[i] = acc;
    }
    cur = q;
    ztrim(cur);
    ++cancelled;
  }
  int dim_series = nv - cancelled;
  if (best != dim_series) throw std::logic_error("krull_dim: cross-check failed");
  return best;
}

QPoly pair_hilbert_polynomial(int c, int d, int n) {
  QPoly P = QPoly::binom(c, c) + QPoly::binom(d, d);
  if (c + d - n >= 0) P = P - QPoly::binom(c + d - n, c + d - n);
  return P;
}

MacaulayDecomposition macaulay_decomposition(const QPoly& P) {
  if (P.is_zero()) throw std::invalid_argument("macaulay: zero polynomial");
  int d = P.degree();
  MacaulayDecomposition out;
  out.m.assign(d + 1, 0);
  QPoly rem = P;
  for (int i = d; i >= 0; --i) {
    if (rem.degree() > i) throw std::logic_error("macaulay: degree overflow");
    if (rem.degree() == i) {
      Rational fact = 1;
      for (int j = 2; j <= i + 1; ++j) fact *= j;
      // Leading coefficient of C(t+i,i+1) - C(t+i-m,i+1) is m/i!.
      Rational mval = rem.coeff(i) * (fact / Rational(i + 1));
      if (mval.get_den() != 1 || mval <= 0)
        throw std::invalid_argument("macaulay: not a Hilbert polynomial");
      out.m[i] = mval.get_num().get_si();
      rem = rem - (QPoly::binom(i, i + 1) - QPoly::binom(i - out.m[i], i + 1));
    }
  }
  if (!rem.is_zero())
    throw std::invalid_argument("macaulay: nonzero residue");
  for (int i = 0; i < d; ++i)
    if (out.m[i] < out.m[i + 1])
      throw std::invalid_argument("macaulay: m-sequence not non-increasing");
  out.a.assign(d + 1, 0);
  out.a[d] = out.m[d];
  for (int i = 0; i < d; ++i) out.a[i] = out.m[i] - out.m[i + 1];
  return out;
}

Ideal lex_point(const QPoly& P, int n) {
  MacaulayDecomposition md = macaulay_decomposition(P);
  int d = (int)md.m.size() - 1;
  if (d > n - 1) throw std::invalid_argument("lex_point: deg P too large");
  int nv = n + 1;
  std::vector<Monomial> gens;
  for (int i = 0; i <= n - d - 2; ++i) gens.push_back(Monomial::var(i, nv));
  // g_j = (prod_{i=j+1..d} x_{n-1-i}^{a_i}) * x_{n-1-j}^{a_j+1}, j = d..1,
  // and g_0 = prod_{i=0..d} x_{n-1-i}^{a_i}.
  for (int j = d; j >= 1; --j) {
    Monomial g(nv);
    for (int i = j + 1; i <= d; ++i) g.e[n - 1 - i] += (int)md.a[i];
    g.e[n - 1 - j] += (int)md.a[j] + 1;
    gens.push_back(g);
  }
  {
    Monomial g(nv);
    for (int i = 0; i <= d; ++i) g.e[n - 1 - i] += (int)md.a[i];
    gens.push_back(g);
  }
  return monomial_ideal(nv, minimalize_monomials(std::move(gens)));
}

} // namespace planepairs
