#pragma once
#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "kinetic/quadrature.hpp"

namespace kin {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
// rows: spatial nodes, cols: velocity nodes
using Field = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Full: cube [-v_max,v_max]^3 with n1 nodes per axis.
// Reduced: (v_eta, v_perp) in [-v_max,v_max] x [0,v_max], n1 x n2, azimuth folded in; v_eta split at 0.
// Polar: (|v|, cos theta) in [0,v_max] x [-1,1], n1 x n2, azimuth folded in; cos theta split at 0.
enum class GridMode { Full, Reduced, Polar };

struct GridSpec {
  double v_max = 7.0;
  int n1 = 16;
  int n2 = 16;
  GridMode mode = GridMode::Polar;
};

std::string to_string(GridMode m);
GridMode grid_mode_from_string(const std::string& s);

struct VelocityGrid {
  GridSpec spec;
  int n = 0;
  bool axisymmetric = false;
  // vz is the component along the symmetry / wall-normal axis; for axisymmetric
  // modes vx holds |v_perp| (representative azimuth 0) and vy = 0
  std::vector<double> vx, vy, vz, w, speed2, mu, sqrt_mu;
  Rule1D axis1, axis2;
  std::vector<int> mirror;  // node index under vz -> -vz
  double moment0_error = 0.0, moment2_error = 0.0;

  int null_dim() const { return axisymmetric ? 3 : 5; }
  // orthonormal null basis (discrete inner product), null_dim x n
  Mat null_basis;
  // paper-convention basis sqrt(mu) * {1, v (axisymmetric: vz only), (|v|^2-5)/2} and Gram inverse
  Mat raw_basis;
  Mat raw_gram_inv;

  int index2(int a, int b) const { return a * spec.n2 + b; }
};

// throws std::invalid_argument ("truncation too small ..." / "node count ...")
VelocityGrid build_grid(const GridSpec& spec, double tol_grid = 1e-8);

double maxwellian(double vx, double vy, double vz);
inline double maxwellian(const std::array<double, 3>& v) { return maxwellian(v[0], v[1], v[2]); }

// coefficients of P f = sqrt(mu) (p + v.b + (|v|^2-5)/2 c)
struct NullCoeffs {
  double p = 0.0;
  std::array<double, 3> b{0.0, 0.0, 0.0};
  double c = 0.0;
};
// fluid convention sqrt(mu) (rho + v.u + (|v|^2-3)/2 T)
struct FluidCoeffs {
  double rho = 0.0;
  std::array<double, 3> u{0.0, 0.0, 0.0};
  double T = 0.0;
};
// the documented linear map between the two conventions: T = c, rho = p - c
FluidCoeffs to_fluid(const NullCoeffs& n);
NullCoeffs to_null(const FluidCoeffs& f);

struct NullProjection {
  std::vector<double> p, c;
  std::vector<std::array<double, 3>> b;
};

double inner(const VelocityGrid& g, const double* f, const double* h);
inline double inner(const VelocityGrid& g, const Vec& f, const Vec& h) { return inner(g, f.data(), h.data()); }

NullCoeffs project_null(const VelocityGrid& g, const double* f);
inline NullCoeffs project_null(const VelocityGrid& g, const Vec& f) { return project_null(g, f.data()); }
NullProjection project_null(const VelocityGrid& g, const Field& f);

// P[f] and (I-P)[f] on velocity vectors / fields
void apply_P(const VelocityGrid& g, const double* f, double* out);
Vec apply_P(const VelocityGrid& g, const Vec& f);
Vec apply_IminusP(const VelocityGrid& g, const Vec& f);
Field apply_P(const VelocityGrid& g, const Field& f);
Field apply_IminusP(const VelocityGrid& g, const Field& f);

Vec reconstruct(const VelocityGrid& g, const NullCoeffs& c);
Vec hydro_vector(const VelocityGrid& g, const FluidCoeffs& f);

// ---- norms ----
enum class NormKind { L2, L6, Linf, Nu };

struct NormSpec {
  NormKind kind = NormKind::L2;
  double varrho = 0.0;   // Linf weight <v>^vartheta exp(varrho |v|^2 / 2)
  double vartheta = 0.0;
};

// spatial weights xw (one per field row); empty means a single row with weight 1.
// Nu needs the collision frequency; throws std::invalid_argument if nu == nullptr.
double norm(const VelocityGrid& g, const Field& f, const std::vector<double>& xw, const NormSpec& s,
            const std::vector<double>* nu = nullptr);
double norm(const VelocityGrid& g, const Vec& f, const NormSpec& s, const std::vector<double>* nu = nullptr);

// boundary trace: one row per boundary point, outward normal along +vz (sign=+1) or -vz (-1)
struct BoundaryTrace {
  Field values;
  std::vector<double> surface_w;
  std::vector<int> normal_sign;
};
enum class BoundarySide { Outgoing, Incoming };  // gamma_+ / gamma_-
// (sum |v.n| |f|^p ...)^{1/p}; mu_power multiplies f by mu^{mu_power} first
double boundary_norm(const VelocityGrid& g, const BoundaryTrace& t, BoundarySide side, int p = 2,
                     double mu_power = 0.0);

void export_grid_csv(const VelocityGrid& g, const std::string& path, const std::string& header_line);

}  // namespace kin
