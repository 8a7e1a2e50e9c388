#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shocklayer/gas.hpp"
#include "shocklayer/multipoly.hpp"

namespace sl {

// gamma = 2, qbar = 1. Variables (u, v, ub) are the downstream velocity and the freestream
// speed; the corner variables are u = 1 - U, v^2 = V, ub = 1 - Y.
struct Gamma2Polys {
  MultiPoly G_uvb, F_uvb;  // in (u, v, ub)
  MultiPoly G, F;          // in (U, V, Y)
  MultiPoly P, R;          // F = P G + R, division in V
  MultiPoly R1, R0;        // 32 R = R1 V + R0
  MultiPoly Gr, Gi;        // 4 G = 0 solved for V: V = (Gr +- sqrt(Gi)) / 2
  MultiPoly Gu_uvb;        // dG/du in (u, v, ub)
  MultiPoly Gu;            // the same in (U, V, Y)
};
Gamma2Polys build_polynomials();

// Expanded forms as displayed in the literature, parsed verbatim; each is compared against
// the construction term by term.
struct DisplayedForms {
  MultiPoly F_uvb, G_uvb, F, G, P, R, R1, R0, Gr, Gi;
  MultiPoly certificate_product;
};
const DisplayedForms& displayed_forms();

struct ConstructionCheck {
  std::string name;
  bool matches = false;
  std::string difference;  // constructed minus displayed, "0" when they match
};
std::vector<ConstructionCheck> compare_with_displayed(const Gamma2Polys& p);

// F == P G + R exactly and deg_V R < deg_V G.
bool verify_division_identity(const MultiPoly& F, const MultiPoly& G, const MultiPoly& P, const MultiPoly& R);
bool verify_division_identity();

struct LeadingForms {
  int r1_degree = -1;
  int r0_degree = -1;
  bool r1_proportional = false;
  bool r0_proportional = false;
  bool coprime = false;  // the two dehomogenised forms share no root
  bool ok() const { return r1_proportional && r0_proportional && coprime; }
};
LeadingForms leading_forms(const MultiPoly& R1, const MultiPoly& R0);
bool leading_form_roots(const MultiPoly& R1, const MultiPoly& R0);
bool leading_form_roots();

// Case 2: squaring (Gr +- sqrt Gi)/2 = -R0/R1 gives N = (2 R0 + Gr R1)^2 - Gi R1^2 = 0.
// N is divided exactly by the displayed product; the quotient must be a nonzero rational
// times a power of (1 - Y), a factor without zeros on the corner 0 < Y < U << 1.
struct Certificate {
  bool ok = false;
  bool exact_constant = false;  // quotient is a plain constant
  std::string constant;         // kappa in quotient = kappa (1 - Y)^j
  int one_minus_y_power = 0;    // j
  std::string quotient;
  std::string remainder;
};
Certificate no_real_solution_certificate(const MultiPoly& R1, const MultiPoly& R0, const MultiPoly& Gr,
                                         const MultiPoly& Gi, const MultiPoly& product);
bool no_real_solution_certificate();
// Throws CertificateMismatch carrying the remainder when the certificate fails.
void require_certificate();

struct SignScan {
  int eps_count = 0, u_count = 0;
  double eps_max = 0.0, delta = 0.0;
  long samples = 0, skipped = 0;
  long h_violations = 0, j_violations = 0, g_violations = 0;
  double min_H = 0.0, min_J = 0.0, min_g = 0.0, max_g = 0.0;  // max_g is the best K
  // largest (u - (gamma-1) qbar/2) / eps over violating samples: how far above the lower
  // edge of the arc, in units of eps, the violations reach
  double violation_band = 0.0;
};
SignScan sign_scan(double eps_max, int eps_count, int u_count, double delta, const GasModel& g);
SignScan sign_scan_serial(double eps_max, int eps_count, int u_count, double delta, const GasModel& g);

struct CornerScan {
  int u_count = 0, ratio_count = 0;
  double u_min = 0.0, u_max = 0.0;
  long samples = 0;
  long violations = 0;  // |K| > bound
  double bound = 1e6;
  double max_abs_K = 0.0;
};
// (U, Y) log-uniform with 0 < Y < U < u_max; V each root of G in (0, U).
CornerScan corner_scan(const Gamma2Polys& p, int u_count, int ratio_count, double u_min = 1e-9, double u_max = 1e-3);
CornerScan corner_scan_serial(const Gamma2Polys& p, int u_count, int ratio_count, double u_min = 1e-9,
                              double u_max = 1e-3);
double corner_K(const Gamma2Polys& p, double U, double V, double Y);

// g on the eps = 0 polar from the polynomial gradient of G.
double reflection_g_from_polynomials(const Gamma2Polys& p, double u, double v);

struct Gamma2Report {
  std::vector<ConstructionCheck> construction;
  bool division_ok = false;
  bool leading_forms_ok = false;
  bool certificate_ok = false;
  LeadingForms leading;
  Certificate certificate;
  SignScan scan;
  CornerScan corner;
  bool exact_ok() const { return division_ok && leading_forms_ok && certificate_ok; }
};
Gamma2Report gamma2_report(double eps_max = 0.01, int eps_count = 200, int u_count = 200, double delta = 1e-3,
                           int corner_u = 200, int corner_ratio = 200);

}  // namespace sl
