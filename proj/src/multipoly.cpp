#include "shocklayer/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "shocklayer/errors.hpp"

namespace sl {

MultiPoly MultiPoly::constant(const mpq_class& c) { return monomial(c, {0, 0, 0}); }

MultiPoly MultiPoly::var(int i) {
  Exp e{0, 0, 0};
  e[i] = 1;
  return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const mpq_class& c, Exp e) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

mpq_class MultiPoly::coeff(Exp e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(Exp e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::degree(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int MultiPoly::min_total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    const int t = e[0] + e[1] + e[2];
    if (d < 0 || t < d) d = t;
  }
  return d;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly p;
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] == d) p.terms_.emplace(e, c);
  return p;
}

MultiPoly MultiPoly::coeff_in(int v, int k) const {
  MultiPoly p;
  for (const auto& [e, c] : terms_)
    if (e[v] == k) {
      Exp f = e;
      f[v] = 0;
      p.terms_.emplace(f, c);
    }
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, c);
  return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return p;
}

MultiPoly operator*(const mpq_class& c, const MultiPoly& a) {
  MultiPoly p;
  if (c == 0) return p;
  for (const auto& [e, x] : a.terms_) p.terms_.emplace(e, c * x);
  return p;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) fail(Errc::ValidationError, "negative polynomial power");
  MultiPoly r = constant(1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly p;
  for (const auto& [e, c] : terms_)
    if (e[v] > 0) {
      Exp f = e;
      f[v] -= 1;
      p.add_term(f, c * e[v]);
    }
  return p;
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& q) const {
  // group by the power of v, then Horner in q
  const int d = degree(v);
  if (d < 0) return {};
  MultiPoly r;
  for (int k = d; k >= 0; --k) r = r * q + coeff_in(v, k);
  return r;
}

MultiPoly MultiPoly::halve_exponent(int v) const {
  MultiPoly p;
  for (const auto& [e, c] : terms_) {
    if (e[v] % 2 != 0) fail(Errc::ValidationError, "odd power in halve_exponent");
    Exp f = e;
    f[v] /= 2;
    p.add_term(f, c);
  }
  return p;
}

void MultiPoly::divrem_in(int v, const MultiPoly& divisor, MultiPoly& quot, MultiPoly& rem) const {
  const int dd = divisor.degree(v);
  if (dd < 0) fail(Errc::SingularSystem, "division by the zero polynomial");
  const MultiPoly lead = divisor.coeff_in(v, dd);
  if (lead.terms_.size() != 1 || lead.terms_.begin()->first != Exp{0, 0, 0})
    fail(Errc::ValidationError, "leading coefficient of the divisor must be constant");
  const mpq_class lc = lead.terms_.begin()->second;
  quot = MultiPoly{};
  rem = *this;
  for (int k = rem.degree(v); k >= dd; k = rem.degree(v)) {
    MultiPoly t = (mpq_class(1) / lc) * rem.coeff_in(v, k);
    Exp shift{0, 0, 0};
    shift[v] = k - dd;
    t = t * monomial(1, shift);
    quot = quot + t;
    rem = rem - t * divisor;
  }
}

void MultiPoly::divide(const MultiPoly& divisor, MultiPoly& quot, MultiPoly& rem) const {
  if (divisor.is_zero()) fail(Errc::SingularSystem, "division by the zero polynomial");
  const auto& [le, lc] = *divisor.terms_.rbegin();
  quot = MultiPoly{};
  rem = MultiPoly{};
  MultiPoly p = *this;
  while (!p.is_zero()) {
    const auto [pe, pc] = *p.terms_.rbegin();
    if (pe[0] >= le[0] && pe[1] >= le[1] && pe[2] >= le[2]) {
      const MultiPoly t = monomial(pc / lc, {pe[0] - le[0], pe[1] - le[1], pe[2] - le[2]});
      quot = quot + t;
      p = p - t * divisor;
    } else {
      rem.add_term(pe, pc);
      p.terms_.erase(pe);
    }
  }
}

mpq_class MultiPoly::eval(const std::array<mpq_class, 3>& x) const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

double MultiPoly::eval(const std::array<double, 3>& x) const { return DoublePoly(*this)(x[0], x[1], x[2]); }

std::string MultiPoly::str(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const mpq_class a = neg ? mpq_class(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const bool unit = a == 1 && (e[0] + e[1] + e[2]) > 0;
    if (!unit) os << a.get_str();
    bool need = !unit;
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0) {
        os << (need ? " " : "") << names[i];
        if (e[i] > 1) os << "^" << e[i];
        need = true;
      }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::array<std::string, 3>& names) : s_(s), names_(names) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (i_ != s_.size()) error("unexpected character");
    return p;
  }

 private:
  const std::string& s_;
  std::array<std::string, 3> names_;
  std::size_t i_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, "polynomial, column " + std::to_string(i_ + 1) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return c == '(' || c == '*' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  MultiPoly expr() {
    MultiPoly p;
    bool neg = false;
    if (peek('-')) { ++i_; neg = true; } else if (peek('+')) ++i_;
    p = neg ? -term() : term();
    while (true) {
      if (peek('+')) { ++i_; p = p + term(); }
      else if (peek('-')) { ++i_; p = p - term(); }
      else break;
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = power();
    while (true) {
      if (peek('*')) { ++i_; p = p * power(); }
      else if (peek('/')) {
        ++i_;
        skip();
        const mpz_class d = integer();
        if (d == 0) error("division by zero");
        p = mpq_class(1, 1) / mpq_class(d) * p;
      } else if (starts_factor()) p = p * power();
      else break;
    }
    return p;
  }

  MultiPoly power() {
    MultiPoly b = primary();
    if (peek('^')) {
      ++i_;
      skip();
      const mpz_class k = integer();
      if (!k.fits_sint_p()) error("exponent too large");
      b = b.pow(static_cast<int>(k.get_si()));
    }
    return b;
  }

  mpz_class integer() {
    skip();
    const std::size_t j = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (j == i_) error("expected an integer");
    return mpz_class(s_.substr(j, i_ - j));
  }

  MultiPoly primary() {
    skip();
    if (i_ >= s_.size()) error("unexpected end");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiPoly p = expr();
      if (!peek(')')) error("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(mpq_class(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t j = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(j, i_ - j);
      for (int v = 0; v < 3; ++v)
        if (names_[v] == name) return MultiPoly::var(v);
      i_ = j;
      error("unknown variable '" + name + "'");
    }
    error(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::array<std::string, 3>& names) {
  return Parser(text, names).parse();
}

DoublePoly::DoublePoly(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    coeff.push_back(c.get_d());
    exps.push_back(e);
  }
}

double DoublePoly::operator()(double x0, double x1, double x2) const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    const auto& e = exps[k];
    double t = coeff[k];
    for (int j = 0; j < e[0]; ++j) t *= x0;
    for (int j = 0; j < e[1]; ++j) t *= x1;
    for (int j = 0; j < e[2]; ++j) t *= x2;
    s += t;
  }
  return s;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  auto trim = [](UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    UniPoly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      const mpq_class f = r.back() / b.back();
      const std::size_t shift = r.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) r[k + shift] -= f * b[k];
      trim(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

}  // namespace sl
