#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sl {

// Exact polynomial in three variables with rational coefficients. Zero coefficients are
// never stored. Terms are keyed by exponent triple; std::map order is lex with variable 0
// most significant, which is also the monomial order used by divide().
class MultiPoly {
 public:
  using Exp = std::array<int, 3>;
  using Terms = std::map<Exp, mpq_class>;

  MultiPoly() = default;
  static MultiPoly constant(const mpq_class& c);
  static MultiPoly var(int i);
  static MultiPoly monomial(const mpq_class& c, Exp e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(Exp e) const;
  void add_term(Exp e, const mpq_class& c);

  int degree(int var) const;
  int total_degree() const;
  int min_total_degree() const;
  // homogeneous part of the given total degree
  MultiPoly homogeneous_part(int d) const;
  // coefficient of var^k as a polynomial in the other two variables
  MultiPoly coeff_in(int var, int k) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const mpq_class& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  MultiPoly pow(int k) const;

  MultiPoly derivative(int var) const;
  // replace variable var by the polynomial p
  MultiPoly substitute(int var, const MultiPoly& p) const;
  // every exponent of var must be even; var^(2k) becomes var^k (used for v^2 = V)
  MultiPoly halve_exponent(int var) const;

  // division with remainder treating `var` as the main variable; the leading coefficient of
  // the divisor in `var` must be a nonzero constant so the division stays exact over Q
  void divrem_in(int var, const MultiPoly& divisor, MultiPoly& quot, MultiPoly& rem) const;
  // multivariate division in lex order; rem is zero iff the division is exact
  void divide(const MultiPoly& divisor, MultiPoly& quot, MultiPoly& rem) const;

  mpq_class eval(const std::array<mpq_class, 3>& x) const;
  double eval(const std::array<double, 3>& x) const;

  std::string str(const std::array<std::string, 3>& names = {"U", "V", "Y"}) const;

 private:
  Terms terms_;
};

// Parses sums of products such as "-4 (U - Y)^4 (-2 + Y) Y" or "3 U^2 V - V^2/2". Multiplication
// is '*' or juxtaposition; '^' takes a nonnegative integer. Throws ParseError.
MultiPoly parse_poly(const std::string& text, const std::array<std::string, 3>& names = {"U", "V", "Y"});

// Flattened form for fast double evaluation in scans.
struct DoublePoly {
  std::vector<double> coeff;
  std::vector<MultiPoly::Exp> exps;
  explicit DoublePoly(const MultiPoly& p);
  double operator()(double x0, double x1, double x2) const;
};

// Univariate helpers over Q: coefficient vectors, lowest degree first.
using UniPoly = std::vector<mpq_class>;
UniPoly uni_gcd(UniPoly a, UniPoly b);

}  // namespace sl
