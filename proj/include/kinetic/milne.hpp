#pragma once
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "kinetic/collision.hpp"
#include "kinetic/transport.hpp"

namespace kin {

// eta mesh: uniform when ratio == 1, otherwise geometric from d_eta up to d_eta_max
struct MilneMesh {
  double d_eta = 0.05;
  double eta_max = 30.0;
  double ratio = 1.0;
  double d_eta_max = 0.5;
  std::vector<double> widths() const;
};

// v_eta is the grid's normal component vz; only the v_eta > 0 entries of incoming are read
struct MilneProblem {
  Vec incoming;
  double mass_flux = 0.0;
  MilneMesh mesh;
};

struct MilneSolution {
  std::vector<double> eta;     // cell centres
  std::vector<double> widths;
  Field profile;               // cells x velocity nodes
  Vec incoming;
  std::vector<double> v_eta;
  FluidCoeffs limit;           // (rho, u, T) at infinity; u[2] is the normal component
  Vec limit_vector;
  double mass_flux_target = 0.0;
  double mass_flux_realized = 0.0;  // upwind flux through eta = 0
  double flux_variation = 0.0;      // max_k |F_k - F_0| over interfaces
  double residual = 0.0;            // discrete equation residual, L2(eta x v)
  double decay_rate = 0.0;          // fitted K0; +inf when the profile is exactly constant
  double decay_amplitude = 0.0;
  double limit_error = 0.0;
  double dissipation = 0.0;         // int <G - Ginf, L (G - Ginf)> deta
  std::vector<double> distance;     // |G(eta_k) - Ginf|_2 per cell

  // trace at eta = 0: incoming data for v_eta > 0, first cell value otherwise
  Vec trace0() const;
  // piecewise linear in eta between centres, limit beyond the mesh
  Vec at(double eta) const;
};

// Reuses one block factorization and the three far-field basis solves,
// so repeated solves on the same mesh differ only by one sweep.
class MilneSolver {
 public:
  MilneSolver(std::shared_ptr<const CollisionOperator> op, MilneMesh mesh = {});
  MilneSolution solve(const Vec& incoming, double mass_flux, std::ostream* log = nullptr) const;
  const MilneMesh& mesh() const { return mesh_; }
  const CollisionOperator& op() const { return *op_; }

 private:
  std::shared_ptr<const CollisionOperator> op_;
  MilneMesh mesh_;
  std::vector<double> h_;
  SlabTransport T_;
  Field basis_[3];   // G^(k): zero incoming, far-field state e_k
  Vec e_[3];         // rho, u_n, T hydrodynamic vectors
  Vec flux_w_;       // W sqrt(mu)
  double basis_flux_[3];
  double basis_rho_[3], basis_T_[3];
};

MilneSolution solve_milne(const MilneProblem& p, std::shared_ptr<const CollisionOperator> op,
                          std::ostream* log = nullptr);

struct MilneLimit {
  FluidCoeffs state;
  double error_bar = 0.0;
  double decay_rate = 0.0;
};
// throws std::runtime_error when the decay fit gives K0 <= 0
MilneLimit extract_limit(const MilneSolution& sol);

struct FluxAdjusted {
  double mass_flux = 0.0;
  double D = 0.0;          // 1 / (rho~ + T~) of the unit-flux problem
  double pressure_zero_flux = 0.0;  // rho_bar + T_bar
  MilneSolution solution;
};
FluxAdjusted adjust_mass_flux(const MilneSolver& s, const Vec& incoming, double P_target);

struct PressureConstant {
  double P = 0.0;
  std::vector<double> mass_flux;
  std::vector<double> pressure_zero_flux;
  double D = 0.0;
  double weighted_flux_sum = 0.0;
  std::vector<MilneSolution> solutions;
};
PressureConstant global_pressure_constant(const MilneSolver& s, const std::vector<Vec>& samples,
                                          const std::vector<double>& weights);

void export_milne_csv(const MilneSolution& sol, const VelocityGrid& g, const std::string& path);

}  // namespace kin
