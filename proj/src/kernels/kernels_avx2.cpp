// AVX2+FMA complex double kernels. Compiled with -mavx2 -mfma; only reached
// after the runtime CPU check in kernels.cpp.

#if defined(__x86_64__)

#include "kernels_impl.hpp"

#include <immintrin.h>
#include <cstring>
#include <vector>

namespace geoent::kernels::detail {

namespace {

constexpr int MR = 4;   // micro-tile rows
constexpr int NR = 4;   // micro-tile cols (complex)
constexpr int KC = 192; // k blocking
constexpr int MC = 96;  // m blocking
constexpr int NC = 512; // n blocking

// Pack an (mc x kc) block of opA(A) into row groups of MR, zero padded.
void pack_a(Op opA, const cplx* A, int lda, int i0, int p0, int mc, int kc,
            cplx* dst) {
  for (int ig = 0; ig < mc; ig += MR) {
    for (int p = 0; p < kc; ++p) {
      for (int r = 0; r < MR; ++r) {
        int i = i0 + ig + r;
        cplx v(0.0);
        if (ig + r < mc) {
          switch (opA) {
            case Op::N: v = A[std::size_t(i) * lda + (p0 + p)]; break;
            case Op::T: v = A[std::size_t(p0 + p) * lda + i]; break;
            default:    v = std::conj(A[std::size_t(p0 + p) * lda + i]); break;
          }
        }
        *dst++ = v;
      }
    }
  }
}

// Pack a (kc x nc) block of opB(B) into column groups of NR, zero padded.
void pack_b(Op opB, const cplx* B, int ldb, int p0, int j0, int kc, int nc,
            cplx* dst) {
  for (int jg = 0; jg < nc; jg += NR) {
    for (int p = 0; p < kc; ++p) {
      for (int c = 0; c < NR; ++c) {
        int j = j0 + jg + c;
        cplx v(0.0);
        if (jg + c < nc) {
          switch (opB) {
            case Op::N: v = B[std::size_t(p0 + p) * ldb + j]; break;
            case Op::T: v = B[std::size_t(j) * ldb + (p0 + p)]; break;
            default:    v = std::conj(B[std::size_t(j) * ldb + (p0 + p)]); break;
          }
        }
        *dst++ = v;
      }
    }
  }
}

// 4x4 complex micro-kernel: cbuf = sum_p a[:,p] * b[p,:], row-major 4x4.
void micro_4x4(int kc, const cplx* pa, const cplx* pb, cplx* cbuf) {
  const __m256d negeven = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  __m256d acc00 = _mm256_setzero_pd(), acc01 = _mm256_setzero_pd();
  __m256d acc10 = _mm256_setzero_pd(), acc11 = _mm256_setzero_pd();
  __m256d acc20 = _mm256_setzero_pd(), acc21 = _mm256_setzero_pd();
  __m256d acc30 = _mm256_setzero_pd(), acc31 = _mm256_setzero_pd();
  const double* ap = reinterpret_cast<const double*>(pa);
  const double* bp = reinterpret_cast<const double*>(pb);
  for (int p = 0; p < kc; ++p) {
    __m256d b01 = _mm256_loadu_pd(bp + 8 * p);
    __m256d b23 = _mm256_loadu_pd(bp + 8 * p + 4);
    __m256d bs01 = _mm256_permute_pd(b01, 0x5);
    __m256d bs23 = _mm256_permute_pd(b23, 0x5);
    const double* arow = ap + 8 * p;
#define GE_ROW(R, ACC0, ACC1)                                            \
    {                                                                    \
      __m256d are = _mm256_broadcast_sd(arow + 2 * (R));                 \
      __m256d aim = _mm256_broadcast_sd(arow + 2 * (R) + 1);             \
      aim = _mm256_xor_pd(aim, negeven);                                 \
      ACC0 = _mm256_fmadd_pd(are, b01, ACC0);                            \
      ACC1 = _mm256_fmadd_pd(are, b23, ACC1);                            \
      ACC0 = _mm256_fmadd_pd(aim, bs01, ACC0);                           \
      ACC1 = _mm256_fmadd_pd(aim, bs23, ACC1);                           \
    }
    GE_ROW(0, acc00, acc01)
    GE_ROW(1, acc10, acc11)
    GE_ROW(2, acc20, acc21)
    GE_ROW(3, acc30, acc31)
#undef GE_ROW
  }
  double* cb = reinterpret_cast<double*>(cbuf);
  _mm256_storeu_pd(cb + 0, acc00);  _mm256_storeu_pd(cb + 4, acc01);
  _mm256_storeu_pd(cb + 8, acc10);  _mm256_storeu_pd(cb + 12, acc11);
  _mm256_storeu_pd(cb + 16, acc20); _mm256_storeu_pd(cb + 20, acc21);
  _mm256_storeu_pd(cb + 24, acc30); _mm256_storeu_pd(cb + 28, acc31);
}

} // namespace

void zgemm_avx2(Op opA, Op opB, int m, int n, int k, cplx alpha,
                const cplx* A, int lda, const cplx* B, int ldb,
                cplx beta, cplx* C, int ldc) {
  for (int i = 0; i < m; ++i) {
    cplx* crow = C + std::size_t(i) * ldc;
    if (beta == cplx(0.0)) {
      for (int j = 0; j < n; ++j) crow[j] = cplx(0.0);
    } else if (beta != cplx(1.0)) {
      for (int j = 0; j < n; ++j) crow[j] *= beta;
    }
  }
  if (alpha == cplx(0.0) || k == 0 || m == 0 || n == 0) return;

  std::vector<cplx> bufA(std::size_t((MC + MR) * KC));
  std::vector<cplx> bufB(std::size_t(KC * (NC + NR)));
  cplx cbuf[MR * NR];

  for (int jc = 0; jc < n; jc += NC) {
    int nc = std::min(NC, n - jc);
    int ngroups = (nc + NR - 1) / NR;
    for (int pc = 0; pc < k; pc += KC) {
      int kc = std::min(KC, k - pc);
      pack_b(opB, B, ldb, pc, jc, kc, nc, bufB.data());
      for (int ic = 0; ic < m; ic += MC) {
        int mc = std::min(MC, m - ic);
        int mgroups = (mc + MR - 1) / MR;
        pack_a(opA, A, lda, ic, pc, mc, kc, bufA.data());
        for (int jg = 0; jg < ngroups; ++jg) {
          const cplx* pb = bufB.data() + std::size_t(jg) * kc * NR;
          int ncur = std::min(NR, nc - jg * NR);
          for (int ig = 0; ig < mgroups; ++ig) {
            const cplx* pa = bufA.data() + std::size_t(ig) * kc * MR;
            int mcur = std::min(MR, mc - ig * MR);
            micro_4x4(kc, pa, pb, cbuf);
            for (int r = 0; r < mcur; ++r) {
              cplx* crow = C + std::size_t(ic + ig * MR + r) * ldc + jc + jg * NR;
              for (int c = 0; c < ncur; ++c) crow[c] += alpha * cbuf[r * NR + c];
            }
          }
        }
      }
    }
  }
}

void zaxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d negeven = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  __m256d are = _mm256_set1_pd(alpha.real());
  __m256d aim = _mm256_xor_pd(_mm256_set1_pd(alpha.imag()), negeven);
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t n2 = (n / 2) * 2;
  for (std::size_t i = 0; i < n2; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    yv = _mm256_fmadd_pd(are, xv, yv);
    yv = _mm256_fmadd_pd(aim, _mm256_permute_pd(xv, 0x5), yv);
    _mm256_storeu_pd(yp + 2 * i, yv);
  }
  for (std::size_t i = n2; i < n; ++i) y[i] += alpha * x[i];
}

cplx zdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d accA = _mm256_setzero_pd();  // lanes: xr*yr, xi*yi pairs
  __m256d accB = _mm256_setzero_pd();  // lanes: xr*yi, xi*yr pairs
  std::size_t n2 = (n / 2) * 2;
  for (std::size_t i = 0; i < n2; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    accA = _mm256_fmadd_pd(xv, yv, accA);
    accB = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), accB);
  }
  alignas(32) double a[4], b[4];
  _mm256_store_pd(a, accA);
  _mm256_store_pd(b, accB);
  double re = a[0] + a[1] + a[2] + a[3];
  double im = (b[0] - b[1]) + (b[2] - b[3]);
  for (std::size_t i = n2; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double znrm2sq_avx2(std::size_t n, const cplx* x) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t n2 = (n / 2) * 2;
  for (std::size_t i = 0; i < n2; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double a[4];
  _mm256_store_pd(a, acc);
  double s = a[0] + a[1] + a[2] + a[3];
  for (std::size_t i = n2; i < n; ++i) s += std::norm(x[i]);
  return s;
}

} // namespace geoent::kernels::detail

#endif // __x86_64__
