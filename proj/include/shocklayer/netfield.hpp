#pragma once

#include <array>

#include "shocklayer/charkern.hpp"
#include "shocklayer/moc.hpp"

namespace sl {

inline constexpr int kTerms = 6;

// Quadratic least-squares model of (u, v) around one net node, built from a 3x3 block of
// nodes on neighbouring lines (shifted one-sided at the wall, the shock and the net ends).
struct LocalFit {
  double x0 = 0.0;
  double y0 = 0.0;
  double scale = 1.0;
  std::array<double, kTerms> cu{};
  std::array<double, kTerms> cv{};

  FlowState eval(double x, double y) const;
  void gradient(double x, double y, double& ux, double& uy, double& vx, double& vy) const;
};

class NetField {
 public:
  NetField(const CharNet& net, const GasModel& g) : net_(net), g_(g) {}

  LocalFit fit(int line, int idx) const;
  CharDerivs derivs(int line, int idx) const;
  StateField local_field(int line, int idx) const;
  // typical node spacing around a node
  double spacing(int line, int idx) const;

 private:
  const CharNet& net_;
  GasModel g_;
};

}  // namespace sl
