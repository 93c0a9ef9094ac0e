#include "mumode/gemm.hpp"

#include <cblas.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>

extern "C" char* openblas_get_corename();

namespace mumode::la {
namespace {

// OpenBLAS's runtime CPU detection can miss newer or virtualized CPUs and
// silently fall back to a generic pre-AVX kernel. The kernel's own view in
// /proc/cpuinfo reflects what the OS actually enabled, so steer the dynamic
// dispatch from there unless the user already chose a core type. Must run
// before the BLAS initializer, hence the early constructor priority; keeping
// it in the same translation unit as the gemm wrappers guarantees the object
// file is linked into every binary that multiplies matrices.
__attribute__((constructor(101))) void select_blas_kernel() {
  if (std::getenv("OPENBLAS_CORETYPE") != nullptr) return;
  FILE* f = std::fopen("/proc/cpuinfo", "r");
  if (f == nullptr) return;
  char line[4096];
  bool avx512 = false, avx2 = false;
  while (std::fgets(line, sizeof line, f) != nullptr) {
    if (std::strncmp(line, "flags", 5) != 0) continue;
    avx512 = std::strstr(line, " avx512f") != nullptr;
    avx2 = std::strstr(line, " avx2") != nullptr;
    break;
  }
  std::fclose(f);
  if (avx512)
    setenv("OPENBLAS_CORETYPE", "SKYLAKEX", 0);
  else if (avx2)
    setenv("OPENBLAS_CORETYPE", "HASWELL", 0);
}

CBLAS_TRANSPOSE to_cblas(Op op) {
  switch (op) {
    case Op::Trans:
      return CblasTrans;
    case Op::ConjTrans:
      return CblasConjTrans;
    default:
      return CblasNoTrans;
  }
}

}  // namespace

void gemm_raw(Op opA, Op opB, index_t m, index_t n, index_t k, const double* A,
              index_t lda, const double* B, index_t ldb, double* C, index_t ldc) {
  cblas_dgemm(CblasColMajor, to_cblas(opA), to_cblas(opB), static_cast<int>(m),
              static_cast<int>(n), static_cast<int>(k), 1.0, A, static_cast<int>(lda),
              B, static_cast<int>(ldb), 0.0, C, static_cast<int>(ldc));
}

void gemm_raw(Op opA, Op opB, index_t m, index_t n, index_t k, const cplx* A,
              index_t lda, const cplx* B, index_t ldb, cplx* C, index_t ldc) {
  const cplx one{1.0, 0.0}, zero{0.0, 0.0};
  cblas_zgemm(CblasColMajor, to_cblas(opA), to_cblas(opB), static_cast<int>(m),
              static_cast<int>(n), static_cast<int>(k), &one, A, static_cast<int>(lda),
              B, static_cast<int>(ldb), &zero, C, static_cast<int>(ldc));
}

void trsm_left_raw(bool lower, bool unit_diag, index_t n, index_t nrhs,
                   const double* A, index_t lda, double* X, index_t ldx) {
  cblas_dtrsm(CblasColMajor, CblasLeft, lower ? CblasLower : CblasUpper,
              CblasNoTrans, unit_diag ? CblasUnit : CblasNonUnit,
              static_cast<int>(n), static_cast<int>(nrhs), 1.0, A,
              static_cast<int>(lda), X, static_cast<int>(ldx));
}

void trsm_left_raw(bool lower, bool unit_diag, index_t n, index_t nrhs,
                   const cplx* A, index_t lda, cplx* X, index_t ldx) {
  const cplx one{1.0, 0.0};
  cblas_ztrsm(CblasColMajor, CblasLeft, lower ? CblasLower : CblasUpper,
              CblasNoTrans, unit_diag ? CblasUnit : CblasNonUnit,
              static_cast<int>(n), static_cast<int>(nrhs), &one, A,
              static_cast<int>(lda), X, static_cast<int>(ldx));
}

const char* blas_kernel_name() { return openblas_get_corename(); }

}  // namespace mumode::la
