#include "shocklayer/netfield.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "shocklayer/errors.hpp"

namespace sl {

namespace {

constexpr int kStencil = 3;
constexpr int kRows = kStencil * kStencil;

void basis(double X, double Y, double* b) {
  b[0] = 1.0;
  b[1] = X;
  b[2] = Y;
  b[3] = X * X;
  b[4] = X * Y;
  b[5] = Y * Y;
}

}  // namespace

FlowState LocalFit::eval(double x, double y) const {
  double b[kTerms];
  basis((x - x0) / scale, (y - y0) / scale, b);
  FlowState s;
  for (int k = 0; k < kTerms; ++k) {
    s.u += cu[k] * b[k];
    s.v += cv[k] * b[k];
  }
  return s;
}

void LocalFit::gradient(double x, double y, double& ux, double& uy, double& vx, double& vy) const {
  const double X = (x - x0) / scale, Y = (y - y0) / scale;
  auto gx = [&](const std::array<double, kTerms>& c) { return (c[1] + 2.0 * c[3] * X + c[4] * Y) / scale; };
  auto gy = [&](const std::array<double, kTerms>& c) { return (c[2] + c[4] * X + 2.0 * c[5] * Y) / scale; };
  ux = gx(cu);
  uy = gy(cu);
  vx = gx(cv);
  vy = gy(cv);
}

LocalFit NetField::fit(int line, int idx) const {
  const int K = static_cast<int>(net_.lines.size());
  if (K < kStencil) fail(Errc::InsufficientStencil, "need at least 3 lines");
  const int n = static_cast<int>(net_.lines[line].points.size());
  if (n < kStencil) fail(Errc::InsufficientStencil, "need at least 3 points per line");
  const int k0 = std::clamp(line - 1, 0, K - kStencil);
  const int i0 = std::clamp(idx - 1, 0, n - kStencil);
  const NetPoint& c = net_.lines[line].points[idx];
  LocalFit f;
  f.x0 = c.x;
  f.y0 = c.y;
  double sc = 0.0;
  for (int k = k0; k < k0 + kStencil; ++k)
    for (int i = i0; i < i0 + kStencil; ++i) {
      const NetPoint& p = net_.lines[k].points[i];
      sc = std::max(sc, std::hypot(p.x - c.x, p.y - c.y));
    }
  if (!(sc > 0.0)) fail(Errc::InsufficientStencil, "degenerate stencil");
  f.scale = sc;
  Eigen::Matrix<double, kRows, kTerms> A;
  Eigen::Matrix<double, kRows, 2> rhs;
  int r = 0;
  for (int k = k0; k < k0 + kStencil; ++k)
    for (int i = i0; i < i0 + kStencil; ++i, ++r) {
      const NetPoint& p = net_.lines[k].points[i];
      double b[kTerms];
      basis((p.x - c.x) / sc, (p.y - c.y) / sc, b);
      for (int j = 0; j < kTerms; ++j) A(r, j) = b[j];
      rhs(r, 0) = p.state.u - c.state.u;
      rhs(r, 1) = p.state.v - c.state.v;
    }
  const Eigen::ColPivHouseholderQR<Eigen::Matrix<double, kRows, kTerms>> qr(A);
  if (qr.rank() < kTerms) fail(Errc::InsufficientStencil, "stencil does not determine a quadratic");
  const Eigen::Matrix<double, kTerms, 2> sol = qr.solve(rhs);
  for (int j = 0; j < kTerms; ++j) {
    f.cu[j] = sol(j, 0);
    f.cv[j] = sol(j, 1);
  }
  f.cu[0] += c.state.u;
  f.cv[0] += c.state.v;
  return f;
}

CharDerivs NetField::derivs(int line, int idx) const {
  const LocalFit f = fit(line, idx);
  const NetPoint& p = net_.lines[line].points[idx];
  double ux, uy, vx, vy;
  f.gradient(p.x, p.y, ux, uy, vx, vy);
  return char_derivs_from_gradient(p.state, ux, uy, vx, vy, g_);
}

StateField NetField::local_field(int line, int idx) const {
  const LocalFit f = fit(line, idx);
  return [f](double x, double y) { return f.eval(x, y); };
}

double NetField::spacing(int line, int idx) const {
  const auto& pts = net_.lines[line].points;
  const int n = static_cast<int>(pts.size());
  const int j = idx + 1 < n ? idx + 1 : idx - 1;
  return std::hypot(pts[j].x - pts[idx].x, pts[j].y - pts[idx].y);
}

}  // namespace sl
