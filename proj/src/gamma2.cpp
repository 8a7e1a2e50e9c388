#include "shocklayer/gamma2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shocklayer/charkern.hpp"
#include "shocklayer/errors.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

namespace {

const std::array<std::string, 3> kUVB = {"u", "v", "ub"};

MultiPoly parse_uvb(const char* s) { return parse_poly(s, kUVB); }
MultiPoly parse_uvy(const char* s) { return parse_poly(s); }

}  // namespace

Gamma2Polys build_polynomials() {
  Gamma2Polys p;
  const MultiPoly u = MultiPoly::var(0), v = MultiPoly::var(1), ub = MultiPoly::var(2);
  const MultiPoly one = MultiPoly::constant(1);
  const mpq_class q4(1, 4);
  // gamma = 2, qbar = 1: Bernoulli gives rho = (1 - u^2 - v^2)/4 and c^2 = 2 rho
  const MultiPoly rho = q4 * (one - u * u - v * v);
  const MultiPoly eps = q4 * ((one - ub * ub) * ub);
  const MultiPoly c2 = mpq_class(2) * rho;
  p.G_uvb = (rho * u - eps) * (u - ub) + rho * v * v;
  const MultiPoly Gu = p.G_uvb.derivative(0), Gv = p.G_uvb.derivative(1);
  p.Gu_uvb = Gu;
  p.F_uvb = (u * u - c2) * Gv * Gv - mpq_class(2) * u * v * Gu * Gv + (v * v - c2) * Gu * Gu;

  // u = 1 - U, ub = 1 - Y, then v^2 = V
  auto to_uvy = [&](const MultiPoly& a) {
    const MultiPoly U = MultiPoly::var(0), Y = MultiPoly::var(2);
    return a.substitute(0, one - U).substitute(2, one - Y).halve_exponent(1);
  };
  p.G = to_uvy(p.G_uvb);
  p.F = to_uvy(p.F_uvb);
  p.Gu = to_uvy(Gu);
  p.F.divrem_in(1, p.G, p.P, p.R);
  const MultiPoly R32 = mpq_class(32) * p.R;
  p.R1 = R32.coeff_in(1, 1);
  p.R0 = R32.coeff_in(1, 0);
  // 4G = a2 V^2 + a1 V + a0 with a2 = -1
  const MultiPoly G4 = mpq_class(4) * p.G;
  const MultiPoly a2 = G4.coeff_in(1, 2), a1 = G4.coeff_in(1, 1), a0 = G4.coeff_in(1, 0);
  if (a2 != MultiPoly::constant(-1)) fail(Errc::CertificateMismatch, "4G is not -V^2 + ... : " + a2.str());
  p.Gr = a1;
  p.Gi = a1 * a1 + mpq_class(4) * a0;
  return p;
}

const DisplayedForms& displayed_forms() {
  static const DisplayedForms d = [] {
    DisplayedForms f;
    f.F_uvb = parse_uvb(
      "(1/32) (" 
      "-4*u^2 + 20*u^4 - 32*u^6 + 16*u^8 - 4*v^2 + 40*u^2*v^2 - 96*u^4*v^2 + 64*u^6*v^2 + 20*v^4"
      " - 96*u^2*v^4 + 96*u^4*v^4 - 32*v^6 + 64*u^2*v^6 + 16*v^8 + 8*u*ub - 36*u^3*ub + 52*u^5*ub"
      " - 24*u^7*ub - 36*u*v^2*ub + 104*u^3*v^2*ub - 72*u^5*v^2*ub + 52*u*v^4*ub - 72*u^3*v^4*ub"
      " - 24*u*v^6*ub - 4*ub^2 + 16*u^2*ub^2 - 21*u^4*ub^2 + 9*u^6*ub^2 + 16*v^2*ub^2"
      " - 34*u^2*v^2*ub^2 + 21*u^4*v^2*ub^2 - 13*v^4*ub^2 + 15*u^2*v^4*ub^2 + 3*v^6*ub^2 - 4*u*ub^3"
      " + 12*u^3*ub^3 - 8*u^5*ub^3 + 12*u*v^2*ub^3 - 16*u^3*v^2*ub^3 - 8*u*v^4*ub^3 + 4*ub^4"
      " - 10*u^2*ub^4 + 6*u^4*ub^4 - 14*v^2*ub^4 + 12*u^2*v^2*ub^4 + 6*v^4*ub^4 - ub^6 + u^2*ub^6"
      " + 3*v^2*ub^6"
      ")");
    f.G_uvb = parse_uvb(
      "(1/4) (" 
      "u^2 - u^4 + v^2 - 2*u^2*v^2 - v^4 - 2*u*ub + u^3*ub + u*v^2*ub + ub^2 + u*ub^3 - ub^4"
      ")");
    f.F = parse_uvy(
      "(1/32) (" 
      "-32*U^3 + 160*U^4 - 298*U^5 + 257*U^6 - 104*U^7 + 16*U^8 + 72*U^2*V - 348*U^3*V + 525*U^4*V"
      " - 312*U^5*V + 64*U^6*V - 50*U*V^2 + 279*U^2*V^2 - 312*U^3*V^2 + 96*U^4*V^2 + 11*V^3"
      " - 104*U*V^3 + 64*U^2*V^3 + 16*V^4 + 64*U^2*Y - 272*U^3*Y + 448*U^4*Y - 368*U^5*Y"
      " + 150*U^6*Y - 24*U^7*Y - 64*U*V*Y + 320*U^2*V*Y - 496*U^3*V*Y + 318*U^4*V*Y - 72*U^5*V*Y"
      " + 16*V^2*Y - 128*U*V^2*Y + 186*U^2*V^2*Y - 72*U^3*V^2*Y + 18*V^3*Y - 24*U*V^3*Y - 32*U*Y^2"
      " + 64*U^2*Y^2 - 36*U^3*Y^2 + 30*U^4*Y^2 - 30*U^5*Y^2 + 9*U^6*Y^2 + 24*V*Y^2 - 52*U*V*Y^2"
      " + 20*U^2*V*Y^2 - 36*U^3*V*Y^2 + 21*U^4*V*Y^2 + 14*V^2*Y^2 - 6*U*V^2*Y^2 + 15*U^2*V^2*Y^2"
      " + 3*V^3*Y^2 + 48*U*Y^3 - 80*U^2*Y^3 + 28*U^3*Y^3 + 16*U^4*Y^3 - 8*U^5*Y^3 - 48*V*Y^3"
      " + 60*U*V*Y^3 - 16*U^3*V*Y^3 - 16*V^2*Y^3 - 8*U*V^2*Y^3 - 34*U*Y^4 + 41*U^2*Y^4 - 24*U^3*Y^4"
      " + 6*U^4*Y^4 + 43*V*Y^4 - 24*U*V*Y^4 + 12*U^2*V*Y^4 + 6*V^2*Y^4 + 12*U*Y^5 - 6*U^2*Y^5"
      " - 18*V*Y^5 - 2*U*Y^6 + U^2*Y^6 + 3*V*Y^6"
      ")");
    f.G = parse_uvy(
      "(1/4) (" 
      "-2*U^2 + 3*U^3 - U^4 + 3*U*V - 2*U^2*V - V^2 + 4*U*Y - 3*U^2*Y + U^3*Y - V*Y + U*V*Y - 2*Y^2"
      " - 3*U*Y^2 + 3*Y^3 + U*Y^3 - Y^4"
      ")");
    f.P = parse_uvy(
      "(1/8) (" 
      "17*U - 57*U^2 + 56*U^3 - 16*U^4 - 11*V + 56*U*V - 32*U^2*V -16*V^2 - 5*Y - 9*U*Y - 22*U^2*Y"
      " + 8*U^3*Y - 2*V*Y + 8*U*V*Y +20*Y^2 + 35*U*Y^2 - U^2*Y^2 - 3*V*Y^2 - 29*Y^3 - 11*U*Y^3"
      " + 10*Y^4"
      ")");
    f.R = parse_uvy(
      "(1/32) (" 
      "2*U^3 - 5*U^4 + 2*U^5 - U^2*V + 2*U^3*V - 14*U^2*Y + 4*U^3*Y + 14*U^4*Y - 6*U^5*Y + 12*U*V*Y"
      " + 2*U^2*V*Y - 6*U^3*V*Y + 22*U*Y^2 + 62*U^2*Y^2 - 19*U^3*Y^2 - 10*U^4*Y^2 + 6*U^5*Y^2"
      " - 3*V*Y^2 - 29*U*V*Y^2 + 2*U^2*V*Y^2 + 6*U^3*V*Y^2 - 10*Y^3 - 116*U*Y^3 - 135*U^2*Y^3"
      " + 21*U^3*Y^3 - 2*U^4*Y^3 - 2*U^5*Y^3 + V*Y^3 + 27*U*V*Y^3 - 6*U^2*V*Y^3 - 2*U^3*V*Y^3"
      " + 55*Y^4 + 261*U*Y^4 + 139*U^2*Y^4 - 7*U^3*Y^4 + 3*U^4*Y^4 + 3*V*Y^4 - 11*U*V*Y^4"
      " + 3*U^2*V*Y^4 - 123*Y^5 - 271*U*Y^5 - 63*U^2*Y^5 - U^3*Y^5 - V*Y^5 + U*V*Y^5 + 127*Y^6"
      " + 125*U*Y^6 + 11*U^2*Y^6 - 59*Y^7 - 21*U*Y^7 + 10*Y^8"
      ")");
    f.R1 = parse_uvy(
      "-U^2 + 2*U^3 + 12*U*Y + 2*U^2*Y - 6*U^3*Y - 3*Y^2 - 29*U*Y^2 + 2*U^2*Y^2 + 6*U^3*Y^2 + Y^3"
      " + 27*U*Y^3 - 6*U^2*Y^3 - 2*U^3*Y^3 + 3*Y^4 - 11*U*Y^4 + 3*U^2*Y^4 - Y^5 + U*Y^5");
    f.R0 = parse_uvy(
      "2*U^3 - 5*U^4 + 2*U^5 - 14*U^2*Y + 4*U^3*Y + 14*U^4*Y - 6*U^5*Y + 22*U*Y^2 + 62*U^2*Y^2"
      " - 19*U^3*Y^2 - 10*U^4*Y^2 + 6*U^5*Y^2 - 10*Y^3 - 116*U*Y^3 - 135*U^2*Y^3 + 21*U^3*Y^3"
      " - 2*U^4*Y^3 - 2*U^5*Y^3 + 55*Y^4 + 261*U*Y^4 + 139*U^2*Y^4 - 7*U^3*Y^4 + 3*U^4*Y^4"
      " - 123*Y^5 - 271*U*Y^5 - 63*U^2*Y^5 - U^3*Y^5 + 127*Y^6 + 125*U*Y^6 + 11*U^2*Y^6 - 59*Y^7"
      " - 21*U*Y^7 + 10*Y^8");
    f.Gr = parse_uvy(
      "3*U - 2*U^2 - Y + U*Y");
    f.Gi = parse_uvy(
      "U^2 + 10*U*Y - 2*U^2*Y - 7*Y^2 - 14*U*Y^2 + U^2*Y^2 + 12*Y^3 + 4*U*Y^3 - 4*Y^4");
    f.certificate_product = parse_uvy(
      "-4*(U - Y)^4*(-2 + Y)*(-1 + Y)^3*Y*(-U - 11*Y + U*Y + 5*Y^2)*(1 - 2*U - 5*Y - 4*U*Y + 13*Y^2"
      " + 2*U*Y^2 - 5*Y^3)");
    return f;
  }();
  return d;
}

std::vector<ConstructionCheck> compare_with_displayed(const Gamma2Polys& p) {
  const DisplayedForms& d = displayed_forms();
  std::vector<ConstructionCheck> out;
  auto add = [&](const char* name, const MultiPoly& built, const MultiPoly& shown,
                 const std::array<std::string, 3>& names) {
    const MultiPoly diff = built - shown;
    out.push_back({name, diff.is_zero(), diff.str(names)});
  };
  add("F(u,v,ub)", p.F_uvb, d.F_uvb, kUVB);
  add("G(u,v,ub)", p.G_uvb, d.G_uvb, kUVB);
  const std::array<std::string, 3> uvy = {"U", "V", "Y"};
  add("F(U,V,Y)", p.F, d.F, uvy);
  add("G(U,V,Y)", p.G, d.G, uvy);
  add("P", p.P, d.P, uvy);
  add("R", p.R, d.R, uvy);
  add("R1", p.R1, d.R1, uvy);
  add("R0", p.R0, d.R0, uvy);
  add("Gr", p.Gr, d.Gr, uvy);
  add("Gi", p.Gi, d.Gi, uvy);
  return out;
}

bool verify_division_identity(const MultiPoly& F, const MultiPoly& G, const MultiPoly& P, const MultiPoly& R) {
  return (F - (P * G + R)).is_zero() && R.degree(1) < G.degree(1);
}

bool verify_division_identity() {
  const Gamma2Polys p = build_polynomials();
  const DisplayedForms& d = displayed_forms();
  return verify_division_identity(p.F, p.G, d.P, d.R);
}

LeadingForms leading_forms(const MultiPoly& R1, const MultiPoly& R0) {
  LeadingForms lf;
  lf.r1_degree = R1.min_total_degree();
  lf.r0_degree = R0.min_total_degree();
  const MultiPoly h1 = R1.homogeneous_part(lf.r1_degree), h0 = R0.homogeneous_part(lf.r0_degree);
  const MultiPoly t1 = -parse_uvy("U^2 - 12 U Y + 3 Y^2");
  const MultiPoly t0 = mpq_class(2) * parse_uvy("U^3 - 7 U^2 Y + 11 U Y^2 - 5 Y^3");
  auto proportional = [](const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const auto& [e, cb] = *b.terms().begin();
    const mpq_class ca = a.coeff(e);
    if (ca == 0) return false;
    return (mpq_class(ca / cb) * b - a).is_zero();
  };
  lf.r1_proportional = proportional(h1, t1);
  lf.r0_proportional = proportional(h0, t0);
  // x = U/Y: the forms dehomogenised at Y = 1
  auto dehom = [](const MultiPoly& h) {
    UniPoly c(h.degree(0) + 1, mpq_class(0));
    for (const auto& [e, a] : h.terms())
      if (e[1] == 0) c[e[0]] += a;
    return c;
  };
  if (!h1.is_zero() && !h0.is_zero()) lf.coprime = uni_gcd(dehom(h1), dehom(h0)).size() == 1;
  return lf;
}

bool leading_form_roots(const MultiPoly& R1, const MultiPoly& R0) { return leading_forms(R1, R0).ok(); }

bool leading_form_roots() {
  const Gamma2Polys p = build_polynomials();
  return leading_form_roots(p.R1, p.R0);
}

Certificate no_real_solution_certificate(const MultiPoly& R1, const MultiPoly& R0, const MultiPoly& Gr,
                                         const MultiPoly& Gi, const MultiPoly& product) {
  Certificate c;
  const MultiPoly lhs = mpq_class(2) * R0 + Gr * R1;
  const MultiPoly N = lhs * lhs - Gi * R1 * R1;
  MultiPoly Q, rem;
  N.divide(product, Q, rem);
  c.quotient = Q.str();
  c.remainder = rem.str();
  if (!rem.is_zero() || Q.is_zero()) return c;
  // strip factors (1 - Y)
  const MultiPoly omy = parse_uvy("1 - Y");
  MultiPoly q = Q;
  int j = 0;
  while (q.degree(2) > 0 && q.degree(0) <= 0 && q.degree(1) <= 0) {
    MultiPoly qq, rr;
    q.divrem_in(2, omy, qq, rr);
    if (!rr.is_zero()) break;
    q = qq;
    ++j;
  }
  const bool is_const = q.terms().size() == 1 && q.terms().begin()->first == MultiPoly::Exp{0, 0, 0};
  if (!is_const) return c;
  c.ok = true;
  c.one_minus_y_power = j;
  c.exact_constant = j == 0;
  c.constant = q.terms().begin()->second.get_str();
  return c;
}

bool no_real_solution_certificate() {
  const Gamma2Polys p = build_polynomials();
  return no_real_solution_certificate(p.R1, p.R0, p.Gr, p.Gi, displayed_forms().certificate_product).ok;
}

void require_certificate() {
  const Gamma2Polys p = build_polynomials();
  const Certificate c = no_real_solution_certificate(p.R1, p.R0, p.Gr, p.Gi, displayed_forms().certificate_product);
  if (!c.ok)
    fail(Errc::CertificateMismatch, "quotient " + c.quotient + ", remainder " + c.remainder);
}

namespace {

struct RowScan {
  long samples = 0, skipped = 0, h = 0, j = 0, gv = 0;
  double min_H = std::numeric_limits<double>::infinity();
  double min_J = std::numeric_limits<double>::infinity();
  double min_g = std::numeric_limits<double>::infinity();
  double max_g = -std::numeric_limits<double>::infinity();
  double band = 0.0;
};

RowScan scan_row(int i, double eps_max, int eps_count, int u_count, double delta, const GasModel& g) {
  RowScan r;
  const double eps = eps_max * double(i + 1) / double(eps_count);
  const FreeStream fs = freestream_from_epsilon(eps, g);
  const double lo = 0.5 * (g.gamma - 1.0) * g.qbar + delta * g.qbar, hi = fs.u_inf;
  for (int k = 0; k < u_count; ++k) {
    const double u = lo + (hi - lo) * double(k + 1) / double(u_count + 1);
    try {
      const double v = polar_v_of_u(u, fs, g);
      const FlowState s{u, v};
      const InnerProducts hj = inner_products_HJ(s, fs, g);
      const double gv = reflection_coeff_g(s, fs, g).g_value;
      ++r.samples;
      if (!(hj.H > 0.0)) ++r.h;
      if (!(hj.J > 0.0)) ++r.j;
      if (!(gv > 0.0 && gv < 1.0)) ++r.gv;
      if (!(hj.H > 0.0 && hj.J > 0.0 && gv > 0.0 && gv < 1.0))
        r.band = std::max(r.band, (u - 0.5 * (g.gamma - 1.0) * g.qbar) / eps);
      r.min_H = std::min(r.min_H, hj.H);
      r.min_J = std::min(r.min_J, hj.J);
      r.min_g = std::min(r.min_g, gv);
      r.max_g = std::max(r.max_g, gv);
    } catch (const Error&) {
      ++r.skipped;
    }
  }
  return r;
}

SignScan merge_rows(const std::vector<RowScan>& rows, double eps_max, int eps_count, int u_count, double delta) {
  SignScan s;
  s.eps_count = eps_count;
  s.u_count = u_count;
  s.eps_max = eps_max;
  s.delta = delta;
  RowScan t;
  for (const RowScan& r : rows) {
    t.samples += r.samples;
    t.skipped += r.skipped;
    t.h += r.h;
    t.j += r.j;
    t.gv += r.gv;
    t.min_H = std::min(t.min_H, r.min_H);
    t.min_J = std::min(t.min_J, r.min_J);
    t.min_g = std::min(t.min_g, r.min_g);
    t.max_g = std::max(t.max_g, r.max_g);
    t.band = std::max(t.band, r.band);
  }
  s.violation_band = t.band;
  s.samples = t.samples;
  s.skipped = t.skipped;
  s.h_violations = t.h;
  s.j_violations = t.j;
  s.g_violations = t.gv;
  s.min_H = t.min_H;
  s.min_J = t.min_J;
  s.min_g = t.min_g;
  s.max_g = t.max_g;
  return s;
}

void check_gamma2(const GasModel& g) {
  if (g.gamma != 2.0) fail(Errc::ValidationError, "sign scans are for gamma = 2");
}

}  // namespace

SignScan sign_scan(double eps_max, int eps_count, int u_count, double delta, const GasModel& g) {
  check_gamma2(g);
  std::vector<RowScan> rows(eps_count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < eps_count; ++i) rows[i] = scan_row(i, eps_max, eps_count, u_count, delta, g);
  return merge_rows(rows, eps_max, eps_count, u_count, delta);
}

SignScan sign_scan_serial(double eps_max, int eps_count, int u_count, double delta, const GasModel& g) {
  check_gamma2(g);
  std::vector<RowScan> rows(eps_count);
  for (int i = 0; i < eps_count; ++i) rows[i] = scan_row(i, eps_max, eps_count, u_count, delta, g);
  return merge_rows(rows, eps_max, eps_count, u_count, delta);
}

namespace {

// K = F / (G_u^2 (u^2 - c^2) tan^2 omega), all in corner variables so nothing cancels at small U
struct CornerEval {
  DoublePoly F, Gu;
  explicit CornerEval(const Gamma2Polys& p) : F(p.F), Gu(p.Gu) {}
  double operator()(double U, double V, double Y) const {
    const double c2 = 0.5 * (2.0 * U - U * U - V);
    const double u2 = (1.0 - U) * (1.0 - U);
    const double q2 = u2 + V;
    const double tan2w = c2 / (q2 - c2);
    const double gu = Gu(U, V, Y);
    return F(U, V, Y) / (gu * gu * (u2 - c2) * tan2w);
  }
};

}  // namespace

double corner_K(const Gamma2Polys& p, double U, double V, double Y) { return CornerEval(p)(U, V, Y); }

namespace {

struct CornerRow {
  long samples = 0, violations = 0;
  double max_abs = 0.0;
};

CornerRow corner_row(const Gamma2Polys& p, const CornerEval& K_of, int i, int u_count, int ratio_count,
                     double u_min, double u_max, double bound) {
  CornerRow r;
  const DoublePoly Gr(p.Gr), Gi(p.Gi);
  const double U = u_min * std::pow(u_max / u_min, (i + 0.5) / u_count);
  for (int k = 0; k < ratio_count; ++k) {
    // Y/U log-uniform in (1e-6, 1)
    const double Y = U * std::pow(10.0, -6.0 * (1.0 - (k + 0.5) / ratio_count));
    const double gi = Gi(U, 0.0, Y);
    if (gi < 0.0) continue;
    const double gr = Gr(U, 0.0, Y);
    for (double sg : {-1.0, 1.0}) {
      const double V = 0.5 * (gr + sg * std::sqrt(gi));
      if (!(V > 0.0 && V < U)) continue;
      const double K = K_of(U, V, Y);
      ++r.samples;
      if (!(std::abs(K) <= bound)) ++r.violations;
      if (std::isnan(K) || std::abs(K) > r.max_abs) r.max_abs = std::abs(K);
    }
  }
  return r;
}

CornerScan merge_corner(const std::vector<CornerRow>& rows, int u_count, int ratio_count, double u_min,
                        double u_max) {
  CornerScan c;
  c.u_count = u_count;
  c.ratio_count = ratio_count;
  c.u_min = u_min;
  c.u_max = u_max;
  for (const CornerRow& r : rows) {
    c.samples += r.samples;
    c.violations += r.violations;
    if (std::isnan(r.max_abs) || r.max_abs > c.max_abs_K) c.max_abs_K = r.max_abs;
  }
  return c;
}

}  // namespace

CornerScan corner_scan(const Gamma2Polys& p, int u_count, int ratio_count, double u_min, double u_max) {
  const CornerEval K_of(p);
  std::vector<CornerRow> rows(u_count);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < u_count; ++i) rows[i] = corner_row(p, K_of, i, u_count, ratio_count, u_min, u_max, 1e6);
  return merge_corner(rows, u_count, ratio_count, u_min, u_max);
}

CornerScan corner_scan_serial(const Gamma2Polys& p, int u_count, int ratio_count, double u_min, double u_max) {
  const CornerEval K_of(p);
  std::vector<CornerRow> rows(u_count);
  for (int i = 0; i < u_count; ++i) rows[i] = corner_row(p, K_of, i, u_count, ratio_count, u_min, u_max, 1e6);
  return merge_corner(rows, u_count, ratio_count, u_min, u_max);
}

double reflection_g_from_polynomials(const Gamma2Polys& p, double u, double v) {
  const std::array<double, 3> x{u, v, 1.0};
  const double gu = p.G_uvb.derivative(0).eval(x), gv = p.G_uvb.derivative(1).eval(x);
  const double q2 = u * u + v * v;
  const double c = std::sqrt(0.5 * (1.0 - q2));
  const double tau = std::atan2(v, u), om = std::asin(c / std::sqrt(q2));
  const double alpha = tau + om, beta = tau - om;
  // eps = 0: the shock is tangent to the velocity
  const double s = tau;
  const double k = std::atan(-gu / gv);
  return std::sin(s - alpha) * std::cos(k - alpha) / (std::sin(beta - s) * std::cos(k - beta));
}

Gamma2Report gamma2_report(double eps_max, int eps_count, int u_count, double delta, int corner_u,
                           int corner_ratio) {
  Gamma2Report r;
  const Gamma2Polys p = build_polynomials();
  const DisplayedForms& d = displayed_forms();
  r.construction = compare_with_displayed(p);
  r.division_ok = verify_division_identity(p.F, p.G, d.P, d.R);
  r.leading = leading_forms(p.R1, p.R0);
  r.leading_forms_ok = r.leading.ok();
  r.certificate = no_real_solution_certificate(p.R1, p.R0, p.Gr, p.Gi, d.certificate_product);
  r.certificate_ok = r.certificate.ok;
  r.scan = sign_scan(eps_max, eps_count, u_count, delta, make_gas(2.0));
  r.corner = corner_scan(p, corner_u, corner_ratio);
  return r;
}

}  // namespace sl
