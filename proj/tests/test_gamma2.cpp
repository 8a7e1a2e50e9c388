#include <gtest/gtest.h>

#include "shocklayer/gamma2.hpp"
#include "shocklayer/multipoly.hpp"
#include "shocklayer/errors.hpp"

#include <cmath>

using namespace sl;

TEST(MultiPoly, ParseAndArithmetic) {
  const MultiPoly a = parse_poly("(U - Y)^2");
  const MultiPoly b = parse_poly("U^2 - 2 U Y + Y^2");
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse_poly("3 U^2 V - V^2/2").coeff({0, 2, 0}), mpq_class(-1, 2));
  MultiPoly q, r;
  (b * parse_poly("V + 1")).divide(parse_poly("U - Y"), q, r);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, parse_poly("(U - Y)(V + 1)"));
  EXPECT_THROW(parse_poly("U^"), Error);
}

TEST(Gamma2, ConstructionMatchesDisplayedForms) {
  for (const auto& c : compare_with_displayed(build_polynomials())) EXPECT_TRUE(c.matches) << c.name << ": " << c.difference;
}

TEST(Gamma2, ExactChecksPass) {
  EXPECT_TRUE(verify_division_identity());
  EXPECT_TRUE(leading_form_roots());
  EXPECT_TRUE(no_real_solution_certificate());
  const DisplayedForms& d = displayed_forms();
  const Certificate c = no_real_solution_certificate(d.R1, d.R0, d.Gr, d.Gi, d.certificate_product);
  EXPECT_EQ(c.constant, "4");
  EXPECT_EQ(c.one_minus_y_power, 2);
}

// Rational spot check of the change of variables u = 1 - U, v^2 = V, ub = 1 - Y.
TEST(Gamma2, ChangeOfVariablesAtRationalPoint) {
  const Gamma2Polys p = build_polynomials();
  const mpq_class U(1, 3), Y(1, 5), v(1, 4);
  EXPECT_EQ(p.G.eval({U, v * v, Y}), p.G_uvb.eval({1 - U, v, 1 - Y}));
  EXPECT_EQ(p.F.eval({U, v * v, Y}), p.F_uvb.eval({1 - U, v, 1 - Y}));
  // and the division identity holds pointwise
  const std::array<mpq_class, 3> x{U, v * v, Y};
  EXPECT_EQ(p.F.eval(x), p.P.eval(x) * p.G.eval(x) + p.R.eval(x));
}

TEST(Gamma2, MutatedQuotientFailsDivision) {
  const Gamma2Polys p = build_polynomials();
  MultiPoly P2 = p.P;
  P2.add_term({0, 0, 1}, mpq_class(1, 1000));
  EXPECT_FALSE(verify_division_identity(p.F, p.G, P2, p.R));
  MultiPoly R2 = p.R;
  R2.add_term({1, 1, 0}, 1);
  EXPECT_FALSE(verify_division_identity(p.F, p.G, p.P, R2));
}

TEST(Gamma2, MutatedLeadingFormFails) {
  const DisplayedForms& d = displayed_forms();
  const int low = d.R1.min_total_degree();
  const MultiPoly lp = d.R1.homogeneous_part(low);
  ASSERT_FALSE(lp.is_zero());
  // drop one term of the lowest-degree part
  MultiPoly R1b = d.R1;
  const auto& first = *lp.terms().begin();
  R1b.add_term(first.first, -first.second);
  EXPECT_FALSE(leading_form_roots(R1b, d.R0));
}

TEST(Gamma2, MutatedProductFailsCertificate) {
  const DisplayedForms& d = displayed_forms();
  const MultiPoly extra = d.certificate_product * (MultiPoly::var(0) - MultiPoly::var(2));
  EXPECT_FALSE(no_real_solution_certificate(d.R1, d.R0, d.Gr, d.Gi, extra).ok);
  // a rescaled product only changes the constant
  const Certificate c = no_real_solution_certificate(d.R1, d.R0, d.Gr, d.Gi, mpq_class(2) * d.certificate_product);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.constant, "2");
}

TEST(Gamma2, ReflectionFromPolynomialsMatchesClosedForm) {
  const Gamma2Polys p = build_polynomials();
  // at u -> 1 on the eps = 0 polar g tends to 3 - 2 sqrt 2
  const double u = 1.0 - 1e-6;
  EXPECT_NEAR(reflection_g_from_polynomials(p, u, std::sqrt(u * (1 - u))), 3.0 - 2.0 * std::sqrt(2.0), 1e-4);
}

TEST(Gamma2, ParallelScansMatchSerial) {
  const GasModel g = make_gas(2.0);
  const SignScan a = sign_scan(0.01, 40, 40, 1e-3, g), b = sign_scan_serial(0.01, 40, 40, 1e-3, g);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.h_violations, b.h_violations);
  EXPECT_EQ(a.g_violations, b.g_violations);
  EXPECT_EQ(a.min_H, b.min_H);
  EXPECT_EQ(a.max_g, b.max_g);
  const Gamma2Polys p = build_polynomials();
  const CornerScan c = corner_scan(p, 30, 30), d = corner_scan_serial(p, 30, 30);
  EXPECT_EQ(c.samples, d.samples);
  EXPECT_EQ(c.max_abs_K, d.max_abs_K);
}

TEST(Gamma2, CornerBoundHolds) {
  const CornerScan c = corner_scan(build_polynomials(), 50, 50);
  EXPECT_GT(c.samples, 0);
  EXPECT_EQ(c.violations, 0);
  EXPECT_LE(c.max_abs_K, 1e6);
}
