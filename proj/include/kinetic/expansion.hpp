#pragma once
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "kinetic/boundary_layer.hpp"
#include "kinetic/collision.hpp"
#include "kinetic/fluid.hpp"
#include "kinetic/milne.hpp"

namespace kin {

// Kinetic computations live on the slab [0, 1]. Face 0 is x = 0 (inward normal +vz),
// face 1 is x = 1 (inward normal -vz). Face-frame vectors are indexed so that node j
// has v_eta = vz_j; the lab vector is face[mirror[i]] on face 1.

// wall datum family: delta [tau_face N_T + beta psi~]
struct BoundaryFamily {
  double delta = 1e-2;
  double tau0 = 1.0, tau1 = -1.0;
  double beta = 1.0;  // pure-layer part, same on both faces
};

// sqrt(mu) (-1 + (|v|^2-3)/2): rho = -1, T = 1, so rho + T = 0
Vec temperature_mode(const VelocityGrid& g);
// sqrt(mu) (v_eta^2 - |v|^2/3) minus its zero-flux Milne limit
Vec layer_mode(const MilneSolver& s);
std::array<Vec, 2> make_wall_data(const BoundaryFamily& fam, const MilneSolver& s);

Vec face_to_lab(const VelocityGrid& g, const Vec& face, int which);
inline Vec lab_to_face(const VelocityGrid& g, const Vec& lab, int which) { return face_to_lab(g, lab, which); }

// Milne solves on both faces, common pressure constant, fluid boundary data
struct WallMatching {
  PressureConstant pc;
  FluidBoundary bc;
  std::array<MilneSolution, 2> milne;
};
WallMatching match_walls(const MilneSolver& s, const std::array<Vec, 2>& face_data);

struct KineticMesh {
  std::vector<double> widths, x;
  // cells = ceil(cells_per_eps / eps), so that h / eps matches a Milne cell of width 1 / cells_per_eps
  static KineticMesh for_eps(double eps, double cells_per_eps = 20.0);
  int cells() const { return static_cast<int>(widths.size()); }
  // smallest number of cells within distance eps of a wall
  int cells_within(double eps) const;
};

Field build_f1(const VelocityGrid& g, const FluidState& s, const std::vector<double>& x);
// d/dx of f1 with the 4th-order fluid stencils
Field build_df1(const VelocityGrid& g, const FluidState& s, const std::vector<double>& x);

struct F2Parts {
  Field hydro, quadratic, correction;  // the three summands
  Field total() const { return hydro + quadratic + correction; }
  Field dtotal;                        // d/dx of the sum
};
// slab, u1 = 0 only (the axisymmetric grid holds no tangential velocity)
F2Parts build_f2(const CollisionOperator& op, const FluidState& first, const SecondOrderState& second,
                 const std::vector<double>& x);

struct ExpansionBundle {
  double eps = 0.0;
  std::vector<double> x, widths;
  Field f1, df1, f2, df2, fB;
  std::array<Vec, 2> f1_wall, f2_wall, fB_wall;     // lab frame traces at x = 0, 1
  std::array<Vec, 2> f1_ghost, f2_ghost, fB_ghost;  // upwind ghost values
  std::array<LayerField, 2> layers;
  // bulk plus layer perturbation a = f1 + fB + eps f2 and its ghosts
  Field approx() const { return f1 + fB + eps * f2; }
  Vec approx_ghost(int face) const { return f1_ghost[face] + fB_ghost[face] + eps * f2_ghost[face]; }
};

// layer_scale multiplies both layers (unsteady data ramp)
ExpansionBundle build_bundle(double eps, const CollisionOperator& op, const KineticMesh& mesh, const FluidState& first,
                             const SecondOrderState& second, const std::array<LayerField, 2>& layers,
                             double layer_scale = 1.0);

// total distribution mu + sqrt(mu) eps a, one row per cell
Field compose_approx(const ExpansionBundle& b, const VelocityGrid& g);

using FieldOp = std::function<Field(const Field&)>;

// Sources of v.grad R + eps^-1 L R = S (plus eps d_t R when unsteady), discrete in x.
// With the same upwind operator used by the kinetic solver these make
// g = a + R an exact rewriting of the discrete equation for g.
struct RemainderData {
  double eps = 0.0;
  Field s1, s2, s5;          // s1 bulk consistency, s2 layer, s5 quadratic in a minus Gamma[f1, f1]
  Field s1_continuous;       // -eps v.grad f2 (steady)
  std::array<Vec, 2> h;      // lab frame, incoming nodes only: f_b - a at the wall
  std::array<Vec, 2> h_ghost;  // same with ghost values of a; these enter the solve
  Field z;                   // initial remainder (unsteady)
  FieldOp s3, s4, s6;        // 2 Gamma[f1 + eps f2, R], 2 Gamma[fB, R], Gamma[R, R]
  FieldOp nonlinear;         // s3 + s4 + s6 with two Gamma evaluations instead of five
  Field linear_source() const { return s1 + s2 + s5; }
};

// time_bulk / time_layer: eps times the discrete time derivative of (f1 + eps f2) and fB, if unsteady
RemainderData build_remainder_data(const ExpansionBundle& b, std::shared_ptr<const CollisionOperator> op,
                                   const std::array<Vec, 2>& wall_data_lab, const Field* time_bulk = nullptr,
                                   const Field* time_layer = nullptr);

// lab-frame layer on the kinetic mesh
Field layer_on_mesh(const LayerField& l, const VelocityGrid& g, int face, const std::vector<double>& x);

}  // namespace kin
