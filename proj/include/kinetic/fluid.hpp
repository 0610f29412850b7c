#pragma once
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "kinetic/collision.hpp"

namespace kin {

enum class GeometryKind { Slab, Annulus };

// slab: x in [a, b], normal along +x; annulus: r in [a, b], fields depend on r only
struct FluidGeometry {
  GeometryKind kind = GeometryKind::Slab;
  double a = 0.0, b = 1.0;
  int intervals = 200;
};

// velocity components (t1, t2, n): slab (x1, x2, x3 = normal); annulus (theta, z, r)
struct FluidBoundary {
  std::array<double, 2> rho{0, 0}, T{0, 0};
  std::array<std::array<double, 3>, 2> u{};
  double P = 0.0;
};

struct FluidState {
  FluidGeometry geo;
  std::vector<double> x, rho, T, p;
  std::array<std::vector<double>, 3> u;
  double P = 0.0;
  double t = 0.0;
  double residual = 0.0;  // max abs residual of the momentum/temperature equations
};

struct SecondOrderState {
  std::vector<double> rho, T, p;
  std::array<std::vector<double>, 3> u;
  double P2 = 0.0;
  double residual = 0.0;
};

constexpr double kTolFluid = 1e-9;

FluidState solve_steady_nsf(const FluidBoundary& bc, const TransportCoefficients& c, const FluidGeometry& geo);

struct UnsteadyOptions {
  double dt = 1e-3;
  bool second_order = false;  // slab with u1 = 0 only
};
struct FluidHistory {
  std::vector<FluidState> first;
  std::vector<SecondOrderState> second;  // empty unless requested
  double dt = 0.0;
  const FluidState& at_step(int n) const { return first.at(n); }
};
using FluidBoundaryFn = std::function<FluidBoundary(double)>;
FluidHistory solve_unsteady_nsf(const FluidState& ic, const FluidBoundaryFn& bc, const TransportCoefficients& c,
                                double t_final, const UnsteadyOptions& opt = {});

// steady slab with u1 = 0; boundary data rho2 = T2 = 0 and u2 the constant normal compensation (zero here)
SecondOrderState solve_second_order(const FluidState& first, const TransportCoefficients& c);

struct MilneLimitSample {
  FluidCoeffs limit;  // u[2] along the inward normal
  double weight = 1.0;
};
// two-face slab: samples[0] at x = a (inward +x), samples[1] at x = b (inward -x)
FluidBoundary match_boundary(const std::vector<MilneLimitSample>& samples, double P, double tol = 1e-8);

// checks: rho + T = P and div u = 0, returns the larger violation
double fluid_invariant_defect(const FluidState& s);
double mean(const std::vector<double>& f, const FluidGeometry& geo);

// 4th-order derivatives on the uniform node set
std::vector<double> d1(const std::vector<double>& f, double h);
std::vector<double> d2(const std::vector<double>& f, double h);
// local 6-point Lagrange interpolation
double interp(const std::vector<double>& x, const std::vector<double>& f, double at);

void export_fluid_csv(const FluidState& s, const std::string& path);

}  // namespace kin
