#ifndef GEOENT_KERNELS_IMPL_HPP
#define GEOENT_KERNELS_IMPL_HPP

#include "geoent/kernels.hpp"

namespace geoent::kernels::detail {

void zgemm_scalar(Op opA, Op opB, int m, int n, int k, cplx alpha,
                  const cplx* A, int lda, const cplx* B, int ldb,
                  cplx beta, cplx* C, int ldc);
void zaxpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y);
cplx zdotc_scalar(std::size_t n, const cplx* x, const cplx* y);
double znrm2sq_scalar(std::size_t n, const cplx* x);

#if defined(__x86_64__)
void zgemm_avx2(Op opA, Op opB, int m, int n, int k, cplx alpha,
                const cplx* A, int lda, const cplx* B, int ldb,
                cplx beta, cplx* C, int ldc);
void zaxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y);
cplx zdotc_avx2(std::size_t n, const cplx* x, const cplx* y);
double znrm2sq_avx2(std::size_t n, const cplx* x);
#endif

} // namespace geoent::kernels::detail

#endif
