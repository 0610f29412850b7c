#pragma once
#include <vector>

namespace kin {

struct Rule1D {
  std::vector<double> x, w;
};

// Gauss-Legendre on [a,b], nodes ascending
Rule1D gauss_legendre(int n, double a = -1.0, double b = 1.0);

// normalized Legendre p_l(x) = sqrt((2l+1)/2) P_l(x), l = 0..lmax
std::vector<double> legendre_normalized(int lmax, double x);
// normalized associated Legendre of order 1, l = 1..lmax (index l-1);
// orthonormal on [-1,1] with p^1_l = c_l sqrt(1-x^2) P_l'(x)
std::vector<double> assoc_legendre1_normalized(int lmax, double x);

// Lagrange basis value of node j among nodes at x
double lagrange_basis(const std::vector<double>& nodes, int j, double x);

// Local Lagrange interpolation using `width` nodes nearest to x.
// Writes the first node index and the weights. Returns false when x is
// outside [lo, hi] (no extrapolation beyond the closed cell range).
bool local_stencil(const std::vector<double>& nodes, double x, int width, double lo, double hi,
                   int& first, double* weights);

// adaptive Gauss-Kronrod style integration (G7/K15 with bisection) of f on [a,b]
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol, int depth = 0);

}  // namespace kin

#include "kinetic/quadrature_impl.hpp"
