#pragma once
#include <array>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "kinetic/expansion.hpp"
#include "kinetic/transport.hpp"

namespace kin {

constexpr double kTolKin = 1e-8;

struct KineticOptions {
  double tol = kTolKin;    // absolute L2(dx dv) equation residual
  int max_iter = 10000;
  double max_data = 0.1;   // refuse ||f_b||_inf above this
  int anderson = 0;        // mixing depth, 0 = plain Picard
  std::ostream* log = nullptr;  // one JSON line per iteration
};

// Steady: F = mu + eps sqrt(mu) g. Unsteady slices are stored in history.
struct KineticSolution {
  double eps = 0.0;
  Field g;
  std::array<Vec, 2> incoming;  // lab-frame ghost data actually used
  int iterations = 0;           // total over all steps when unsteady
  double residual = 0.0;        // last equation residual
  double update = 0.0;          // last ||g_{k+1} - g_k||
  double contraction = 0.0;     // measured ratio of successive updates
  std::vector<double> residual_history;
  std::vector<double> times;
  std::vector<Field> history;
  double max_step_residual = 0.0;
};

// Upwind transport plus eps^-1 L solved directly; Gamma[g, g] lagged.
// Throws std::invalid_argument on oversized data, std::runtime_error on divergence.
KineticSolution solve_steady(double eps, std::shared_ptr<const CollisionOperator> op, const KineticMesh& mesh,
                             const std::array<Vec, 2>& fb_lab, const KineticOptions& opt = {});

using WallDataFn = std::function<std::array<Vec, 2>(double t)>;

struct TimeOptions {
  double dt = 0.02;
  double t_final = 0.5;
  int store_every = 1;
};
// eps d_t g + v.grad g + eps^-1 L g = Gamma[g, g]: BDF2 after one BDF1 step
KineticSolution solve_unsteady(double eps, std::shared_ptr<const CollisionOperator> op, const KineticMesh& mesh,
                               const Field& g0, const WallDataFn& fb_lab, const TimeOptions& topt,
                               const KineticOptions& opt = {});

// v.grad R + eps^-1 L R = S_lin + s3(R) + s4(R) + s6(R), R = h_ghost on incoming ghosts
KineticSolution solve_remainder(std::shared_ptr<const CollisionOperator> op, const KineticMesh& mesh,
                                const RemainderData& d, const KineticOptions& opt = {});

// time-dependent data for step n at t_n; the data carry their own eps d_t a terms
using RemainderDataFn = std::function<RemainderData(int n, double t)>;
// called after each accepted step with the solution, its data and eps times the discrete d_t R
using RemainderStepHook = std::function<void(int n, const Field& R, const RemainderData& d, const Field& time_term)>;
KineticSolution solve_remainder_unsteady(std::shared_ptr<const CollisionOperator> op, const KineticMesh& mesh,
                                         const Field& z, const RemainderDataFn& data, const TimeOptions& topt,
                                         const KineticOptions& opt = {}, const RemainderStepHook& hook = {});

// BDF weights used by the time steppers: d_t g^n ~ (c0 g^n - c1 g^{n-1} + c2 g^{n-2}) / dt
struct BdfWeights {
  double c0, c1, c2;
};
BdfWeights bdf_weights(int step);  // step 1 is BDF1

// equation residual of a steady full solve (for cross-grid checks)
double steady_residual(double eps, const CollisionOperator& op, const KineticMesh& mesh, const Field& g,
                       const std::array<Vec, 2>& fb_lab);

}  // namespace kin
