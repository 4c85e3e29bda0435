#include "geoent/kernels.hpp"
#include "kernels_impl.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <string>

namespace geoent::kernels {

namespace detail {

void zgemm_scalar(Op opA, Op opB, int m, int n, int k, cplx alpha,
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
  if (alpha == cplx(0.0) || k == 0) return;
  for (int i = 0; i < m; ++i) {
    cplx* crow = C + std::size_t(i) * ldc;
    for (int p = 0; p < k; ++p) {
      cplx a;
      switch (opA) {
        case Op::N: a = A[std::size_t(i) * lda + p]; break;
        case Op::T: a = A[std::size_t(p) * lda + i]; break;
        default:    a = std::conj(A[std::size_t(p) * lda + i]); break;
      }
      a *= alpha;
      if (a == cplx(0.0)) continue;
      if (opB == Op::N) {
        const cplx* brow = B + std::size_t(p) * ldb;
        for (int j = 0; j < n; ++j) crow[j] += a * brow[j];
      } else if (opB == Op::T) {
        for (int j = 0; j < n; ++j) crow[j] += a * B[std::size_t(j) * ldb + p];
      } else {
        for (int j = 0; j < n; ++j) crow[j] += a * std::conj(B[std::size_t(j) * ldb + p]);
      }
    }
  }
}

void zaxpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx zdotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc(0.0);
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double znrm2sq_scalar(std::size_t n, const cplx* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

} // namespace detail

namespace {

struct VTable {
  void (*gemm)(Op, Op, int, int, int, cplx, const cplx*, int, const cplx*, int, cplx, cplx*, int);
  void (*axpy)(std::size_t, cplx, const cplx*, cplx*);
  cplx (*dotc)(std::size_t, const cplx*, const cplx*);
  double (*nrm2sq)(std::size_t, const cplx*);
};

constexpr VTable kScalar{detail::zgemm_scalar, detail::zaxpy_scalar,
                         detail::zdotc_scalar, detail::znrm2sq_scalar};

#if defined(__x86_64__)
constexpr VTable kAvx2{detail::zgemm_avx2, detail::zaxpy_avx2,
                       detail::zdotc_avx2, detail::znrm2sq_avx2};
#endif

bool avx2_supported() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const VTable* g_table = nullptr;
Impl g_impl = Impl::scalar;
std::once_flag g_once;

void init() {
  Impl want = avx2_supported() ? Impl::avx2 : Impl::scalar;
  if (const char* env = std::getenv("GEOENT_KERNEL")) {
    std::string s(env);
    if (s == "scalar") want = Impl::scalar;
    else if (s == "avx2") want = Impl::avx2;
    // "auto" and anything else keep the detected default
  }
  if (want == Impl::avx2 && !avx2_supported()) want = Impl::scalar;
#if defined(__x86_64__)
  g_table = (want == Impl::avx2) ? &kAvx2 : &kScalar;
#else
  g_table = &kScalar;
#endif
  g_impl = want;
}

const VTable& table() {
  std::call_once(g_once, init);
  return *g_table;
}

} // namespace

Impl active() {
  table();
  return g_impl;
}

const char* active_name() {
  return active() == Impl::avx2 ? "avx2" : "scalar";
}

void force(Impl impl) {
  table();
  if (impl == Impl::avx2) {
    if (!avx2_supported()) throw std::runtime_error("avx2 kernels unavailable on this CPU");
#if defined(__x86_64__)
    g_table = &kAvx2;
#endif
  } else {
    g_table = &kScalar;
  }
  g_impl = impl;
}

void zgemm(Op opA, Op opB, int m, int n, int k, cplx alpha,
           const cplx* A, int lda, const cplx* B, int ldb,
           cplx beta, cplx* C, int ldc) {
  table().gemm(opA, opB, m, n, k, alpha, A, lda, B, ldb, beta, C, ldc);
}

void zaxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  table().axpy(n, alpha, x, y);
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
  return table().dotc(n, x, y);
}

double znrm2sq(std::size_t n, const cplx* x) {
  return table().nrm2sq(n, x);
}

} // namespace geoent::kernels
