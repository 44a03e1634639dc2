#pragma once

#include <cstddef>
#include <string>

namespace dsr::kern {

// Hot arithmetic loops behind the autodiff tape. Each entry has a scalar
// reference implementation and an AVX2+FMA variant; the active table is
// picked once at startup from CPUID. All variants are deterministic, so a
// fixed table gives bit-identical results across runs.
struct Kernels {
  // C[m,n] = (accumulate ? C : 0) + A[m,k] * B[k,n], row-major.
  void (*gemm)(const double* A, const double* B, double* C, int m, int k, int n,
               bool accumulate);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, int n);
  double (*dot)(const double* x, const double* y, int n);
  double (*sum)(const double* x, int n);
  // y = s * x + b
  void (*scale_add)(const double* x, double s, double b, double* y, int n);
  // z = x * y elementwise
  void (*mul)(const double* x, const double* y, double* z, int n);
  // z += x * y elementwise
  void (*mul_acc)(const double* x, const double* y, double* z, int n);
};

const Kernels& scalar_table();
const Kernels& avx2_table();  // falls back to scalar when unsupported
bool avx2_supported();

// Active dispatch. force("scalar"|"avx2"|"auto") overrides, mainly for the
// equivalence tests.
const Kernels& active();
void force(const std::string& name);
std::string active_name();

// B' = transpose of B[r,c] into BT[c,r]; helper for transposed GEMM operands.
void transpose(const double* B, double* BT, int r, int c);

}  // namespace dsr::kern
