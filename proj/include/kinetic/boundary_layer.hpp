#pragma once
#include <limits>
#include <vector>

#include "kinetic/collision.hpp"
#include "kinetic/milne.hpp"

namespace kin {

// chi = 1 on |y| <= inner, 0 on |y| >= outer, C-infinity blend in between
struct CutoffProfile {
  double inner = 1.0;
  double outer = 2.0;
};
double cutoff_chi(const CutoffProfile& p, double y);
double cutoff_dchi(const CutoffProfile& p, double y);
struct CutoffBounds {
  double d1 = 0.0, d2 = 0.0;  // sampled sup of |chi'|, |chi''|
};
CutoffBounds cutoff_bounds(const CutoffProfile& p, int samples = 4001);

struct LayerOptions {
  double ell = 0.25;  // spatial cutoff is chi(eps * eta / ell)
  CutoffProfile chi;
};

// f^B_1 = chibar(v_eta / eps) chi(eps eta / ell) (Phi - Phi_inf) on the Milne cells
struct LayerField {
  double eps = 0.0;
  LayerOptions opt;
  std::vector<double> eta, d_eta, v_eta;
  std::vector<double> chi_x;  // chi(eps eta / ell) per cell
  std::vector<double> dchi_x; // d/dx of the above (x = eps eta)
  Vec chi_bar_v;              // chibar(v_eta / eps) per node
  Field phibar;
  Vec phibar0;                // Phi(0) - Phi_inf, trace at eta = 0
  Field values;
  Vec trace0;                 // f^B_1 at eta = 0
  Vec limit_vector;
  double mass_flux = 0.0;

  // f^B_1 at physical distance x from the wall (zero past the Milne mesh); exact at cell centres
  Vec at_distance(double x) const;
};

LayerField build_layer(const MilneSolution& sol, double eps, const LayerOptions& opt = {});

// |int v_eta sqrt(mu) (Phi_inf + f^B_1(0)) dv - M_f|
double layer_flux_defect(const LayerField& l, const VelocityGrid& g);
// L2(dx dv) norm of f^B_1 with dx = eps d_eta
double layer_l2(const LayerField& l, const VelocityGrid& g);

struct LayerGeometry {
  double R1 = std::numeric_limits<double>::infinity();
  double R2 = std::numeric_limits<double>::infinity();
  bool slab() const { return !std::isfinite(R1) && !std::isfinite(R2); }
};

// Signs follow v.grad R + eps^-1 L R = S with S containing +s2. Curvature terms are the
// azimuthal means (the grid is axisymmetric about the normal).
struct LayerSources {
  Field s2a, s2b, s2c;
};
LayerSources layer_sources(const LayerField& l, const CollisionOperator& op, const LayerGeometry& geo);
// only the chart (curvature) parts of s2a and s2b; s2c left zero
LayerSources layer_curvature_sources(const LayerField& l, const VelocityGrid& g, const LayerGeometry& geo);

// derivatives along v_eta (= vz) and |v_t| at fixed other component, polar grid only
Field dv_normal(const VelocityGrid& g, const Field& f);
Field dv_tangent(const VelocityGrid& g, const Field& f);
// d f^B_1 / d v_eta with the cutoff factor differentiated analytically
Field layer_dv_normal(const LayerField& l, const VelocityGrid& g);

// sum_k dx_k sum_i w_i |f_ki|
double l1_norm(const VelocityGrid& g, const Field& f, const std::vector<double>& dx);

}  // namespace kin
