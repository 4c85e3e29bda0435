#ifndef GEOENT_KERNELS_HPP
#define GEOENT_KERNELS_HPP

#include <complex>
#include <cstddef>

// Complex double-precision kernels for the contraction hot paths.
// Two implementations are compiled: a portable scalar reference and an
// AVX2+FMA variant. The active one is selected at runtime from CPUID,
// overridable with GEOENT_KERNEL=scalar|avx2.

namespace geoent::kernels {

using cplx = std::complex<double>;

enum class Impl { scalar, avx2 };

Impl active();
const char* active_name();

// Force an implementation (throws if unsupported on this CPU). Used by the
// equivalence tests; pass Impl from active() to restore.
void force(Impl impl);

enum class Op : char { N = 'N', T = 'T', C = 'C' };

// C = alpha * opA(A) * opB(B) + beta * C, row-major, leading dimensions in
// elements. opA(A) is m x k, opB(B) is k x n.
void zgemm(Op opA, Op opB, int m, int n, int k, cplx alpha,
           const cplx* A, int lda, const cplx* B, int ldb,
           cplx beta, cplx* C, int ldc);

// y += alpha * x
void zaxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y);

// sum conj(x[i]) * y[i]
cplx zdotc(std::size_t n, const cplx* x, const cplx* y);

// sum |x[i]|^2
double znrm2sq(std::size_t n, const cplx* x);

} // namespace geoent::kernels

#endif
