#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kinetic/collision.hpp"

namespace kin {

struct XNormOptions {
  double varrho = 0.25;
  double vartheta = 2.0;
};

// raw norms and the eps-weighted sum of the working-space norm
struct NormReport {
  double eps = 0.0;
  double p_l2 = 0, ip_nu = 0, l6 = 0, gamma_l2 = 0, gamma_l4 = 0, linf = 0, linf_gamma = 0;
  // evolutionary extras (zero for steady)
  bool evolutionary = false;
  double l2_sup_t = 0, gamma_l2_sup_t = 0, ip_nu_sup_t = 0;
  double dt_l2_sup_t = 0, dt_gamma_l2 = 0, dt_p_l2 = 0, dt_ip_nu = 0;
  std::vector<std::pair<std::string, double>> components() const;
  double total() const;
};

// outgoing traces: x = 0 uses cell 0 (outward normal -vz), x = 1 the last cell (+vz)
BoundaryTrace wall_trace(const Field& R);

NormReport x_norm(const CollisionOperator& op, const Field& R, double eps, const std::vector<double>& dx,
                  const XNormOptions& opt = {});
// slices at the given times; time integrals by the trapezoid rule, d_t R by differencing slices
NormReport x_norm_unsteady(const CollisionOperator& op, const std::vector<Field>& R, const std::vector<double>& t,
                           double eps, const std::vector<double>& dx, const XNormOptions& opt = {});

// moments of the discrete equation T_h R + eps^-1 L R (+ time) = S against sqrt(mu) {1, vz, |v|^2}
struct ConservationReport {
  std::array<double, 3> residual{0, 0, 0};  // L2(dx) of each law
  double max() const { return std::max({residual[0], residual[1], residual[2]}); }
};
ConservationReport conservation_residuals(const VelocityGrid& g, const std::vector<double>& widths, const Field& R,
                                          const std::array<Vec, 2>& ghosts, const Field& source,
                                          const Field* time_term = nullptr);

struct RateFit {
  double slope = 0, intercept = 0, r2 = 0;
  double ci = 0;  // 95% half width of the slope (infinite for two points)
  bool skipped = false;
};
// least squares of log(err) against log(eps); skipped when every error is below floor
RateFit fit_rate(const std::vector<double>& eps, const std::vector<double>& err, double floor = 1e-13);
// largest change of the slope when a single point is removed (needs at least 3 points)
double leave_one_out_spread(const std::vector<double>& eps, const std::vector<double>& err);

struct ConvergenceStudy {
  std::vector<double> eps, error, error_layer;
  RateFit fit, fit_layer;
  double loo_spread = 0.0;
};
ConvergenceStudy make_study(std::vector<double> eps, std::vector<double> error, std::vector<double> error_layer);

struct CoercivityReport {
  double random_min = 0.0;  // min Rayleigh ratio over random samples
  double spectral = 0.0;    // exact minimum over the complement of the null space
  int samples = 0;
};
CoercivityReport coercivity_probe(const CollisionOperator& op, int samples, unsigned seed);

}  // namespace kin
