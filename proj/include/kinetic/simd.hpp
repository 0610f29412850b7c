#pragma once
// Small set of dense kernels used by the collision and transport code.
// Scalar versions are the reference; an AVX2 build is picked at runtime.
#include <cstddef>
#include <string>

namespace kin::simd {

enum class Isa { Scalar, Avx2 };

struct Kernels {
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = A x, A row-major m x n
  void (*gemv)(const double* A, const double* x, double* y, std::size_t m, std::size_t n);
  // y += alpha * A x
  void (*gemv_acc)(double alpha, const double* A, const double* x, double* y, std::size_t m,
                   std::size_t n);
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr when not compiled in

// active table; honours KIN_SIMD=scalar in the environment
const Kernels& kernels();
Isa active_isa();
std::string isa_name(Isa isa);
void force_isa(Isa isa);  // tests only

inline double dot(const double* a, const double* b, std::size_t n) { return kernels().dot(a, b, n); }
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
  kernels().axpy(alpha, x, y, n);
}
inline void gemv(const double* A, const double* x, double* y, std::size_t m, std::size_t n) {
  kernels().gemv(A, x, y, m, n);
}
inline void gemv_acc(double alpha, const double* A, const double* x, double* y, std::size_t m,
                     std::size_t n) {
  kernels().gemv_acc(alpha, A, x, y, m, n);
}

}  // namespace kin::simd
