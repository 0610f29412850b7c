#pragma once
#include <vector>

#include "kinetic/velocity_space.hpp"

namespace kin {

// First-order upwind finite volumes in one space variable (cells k = 0..M-1),
// coupled to a dense velocity operator:
//   [v+ (G_k - G_{k-1}) + v- (G_{k+1} - G_k)] / h_k + sigma L G_k + shift G_k = r_k
// with G_{-1} = incoming data at the left wall (used for v > 0) and
// G_M = incoming data at the right wall (used for v < 0).
// Solved directly by block Thomas; the factorization is reused across right-hand sides.
class SlabTransport {
 public:
  SlabTransport() = default;
  SlabTransport(std::vector<double> h, std::vector<double> vel, const Mat& L, double sigma, double shift);

  int cells() const { return static_cast<int>(h_.size()); }
  int nv() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& widths() const { return h_; }
  double sigma() const { return sigma_; }
  double shift() const { return shift_; }

  Field solve(const Field& rhs, const Vec& left_in, const Vec& right_in) const;
  // discrete operator applied to G (boundary data enter through the ghost values)
  Field apply(const Field& G, const Vec& left_in, const Vec& right_in) const;
  // transport part only
  Field transport(const Field& G, const Vec& left_in, const Vec& right_in) const;
  // upwind interface fluxes sum_i m_i v_i G_upwind, interfaces 0..M
  std::vector<double> interface_flux(const Field& G, const Vec& left_in, const Vec& right_in,
                                     const Vec& m) const;

 private:
  std::vector<double> h_, v_;
  Mat L_;
  double sigma_ = 1.0, shift_ = 0.0;
  std::vector<Mat> E_;  // inverses of the Schur complements
};

// the upwind difference alone, no factorization needed
Field upwind_transport(const std::vector<double>& h, const std::vector<double>& vel, const Field& G,
                       const Vec& left_in, const Vec& right_in);

std::vector<double> uniform_widths(int cells, double length);
std::vector<double> geometric_widths(double d0, double ratio, double dmax, double length);
std::vector<double> cell_centers(const std::vector<double>& h);

}  // namespace kin
