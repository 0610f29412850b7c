#pragma once
#include <array>
#include <memory>
#include <string>
#include <vector>

#include "kinetic/velocity_space.hpp"

namespace kin {

struct CollisionOptions {
  double q0 = 1.0;
  // gain-term quadrature for Gamma: azimuths of u, polar / azimuthal nodes of omega, interpolation width
  int n_phi = 8;
  int n_theta = 4;
  int n_psi = 8;
  int interp_width = 4;
  bool build_gamma = true;
  double tol_K = 1e-4;  // allowed relative null defect of the raw (uncorrected) assembly
  std::string cache_dir;  // empty: no cache
};

// Linearized hard-sphere operator on a velocity grid. For axisymmetric grids two
// azimuthal blocks are kept: m = 0 (fields independent of the azimuth) and m = 1
// (fields proportional to cos(phi), stored by their phi = 0 profile).
struct CollisionOperator {
  std::shared_ptr<const VelocityGrid> grid;
  CollisionOptions opt;
  std::vector<double> nu;
  double kernel_defect = 0.0;  // measured raw null defect before the exact-null correction
  Mat K;     // (K f)_i = sum_j K(i,j) f_j, m = 0 block (or the full grid)
  Mat L;     // nu - K with exact null space
  std::vector<double> L_rm;  // row-major copy of L for the SIMD matvec
  Mat L_m1;  // m = 1 block (axisymmetric only)
  Mat Linv, Linv_m1;  // pseudo-inverses on the complement of the null space
  // per-degree radial blocks (axisymmetric only)
  std::vector<Mat> L_rad;
  Mat ang_m0, ang_m1;  // discrete orthonormal angular functions, [degree][c node]

  // dense bilinear tensor: Gamma[f,g]_i = sum_ab T[i][a][b] f_a g_b
  std::vector<double> gamma_T;
  bool has_gamma() const { return !gamma_T.empty(); }
  int n() const { return grid->n; }
};

double nu_hard_sphere(double speed, double q0);
std::vector<double> build_nu(const VelocityGrid& g, double q0);

// pointwise kernel of K = K2 - K1 (hard spheres)
double kernel_k(const std::array<double, 3>& v, const std::array<double, 3>& u, double q0);

// throws std::runtime_error when the assembled operator misses tol_K on the null space
CollisionOperator build_kernel(std::shared_ptr<const VelocityGrid> g, const CollisionOptions& opt = {});

Vec apply_L(const CollisionOperator& op, const Vec& f);
Field apply_L(const CollisionOperator& op, const Field& f);
Vec apply_L_m1(const CollisionOperator& op, const Vec& f);

// rejects inputs with ||P g|| > tol_null ||g|| (std::invalid_argument)
Vec pseudo_inverse(const CollisionOperator& op, const Vec& g, double tol_null = 1e-8);
Vec pseudo_inverse_m1(const CollisionOperator& op, const Vec& g, double tol_null = 1e-8);

// Gamma[f,g] = mu^{-1/2} Q*[mu^{1/2} f, mu^{1/2} g]
Vec gamma_bilinear(const CollisionOperator& op, const Vec& f, const Vec& g);
Field gamma_bilinear(const CollisionOperator& op, const Field& f, const Field& g);

struct TransportCoefficients {
  double kappa = 0, lambda = 0, alpha = 0, gamma_offdiag = 0;
  double gamma1 = 0, gamma2 = 0, gamma5 = 0;
  double kappa_m1 = 0;  // kappa from the transverse block (isotropy check)
  double identity_defect() const;  // |alpha - gamma - 2 lambda| / max(|alpha|, lambda)
};

struct TransportTensors {
  Vec A3;    // L^{-1}[v_3 (|v|^2-5) mu^{1/2}]
  Vec B33;   // L^{-1}[(v_3^2 - |v|^2/3) mu^{1/2}]
  Vec B13;   // m = 1 profile of L^{-1}[v_1 v_3 mu^{1/2}]
  TransportCoefficients coef;
};

TransportTensors compute_tensors(const CollisionOperator& op);

// diagnostics
double self_adjoint_defect(const CollisionOperator& op, int samples, unsigned seed);
double null_defect(const CollisionOperator& op);       // max ||L e|| over the null basis
int null_space_dimension(const CollisionOperator& op, double tol);
double coercivity_constant(const CollisionOperator& op, int samples, unsigned seed);
double coercivity_spectral(const CollisionOperator& op);  // exact minimum over (I-P) of <f,Lf>/||f||_nu^2

}  // namespace kin
