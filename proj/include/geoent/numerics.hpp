#ifndef GEOENT_NUMERICS_HPP
#define GEOENT_NUMERICS_HPP

#include <cstdint>
#include <functional>

#include "geoent/errors.hpp"
#include "geoent/types.hpp"

namespace geoent {

inline constexpr int kDenseCap = 4096;

struct SVDResult {
  Mat U;       // m x r, orthonormal columns
  RVec S;      // r singular values, descending
  Mat Vh;      // r x n, orthonormal rows
};

struct EigenSet {
  CVec values;            // sorted by descending magnitude, ties by Re then Im desc
  Mat vectors;            // unit-norm columns aligned with values (may be empty)
  bool vectors_reliable = true;  // false when residual/collinearity checks fail
};

struct EigIterationLimit : Error {
  EigenSet best;
  EigIterationLimit(const std::string& what, EigenSet b)
      : Error(what), best(std::move(b)) {}
};

// Thin SVD. Throws InvalidInput on non-finite entries.
SVDResult svd(const Mat& a);

// Full eigendecomposition of a general complex square matrix.
// dim must be <= dense_cap. Defective inputs come back with
// vectors_reliable = false ("values-only reliable").
EigenSet eig_dense(const Mat& a, int dense_cap = kDenseCap);

// Hermitian eigendecomposition helper, eigenvalues descending.
void herm_eigs(const Mat& a, RVec& values, Mat* vectors);

using LinearMap = std::function<void(const cplx* in, cplx* out)>;

struct DominantOptions {
  int max_iter = 1000;       // outer subspace iterations
  double tol = 1e-10;        // relative residual target
  std::uint64_t seed = 0x6b8b4567327b23c6ULL;
  int subspace = 0;          // 0 = automatic
};

// Top-k eigenpairs by magnitude of a general linear map, restarted subspace
// iteration with Rayleigh-Ritz extraction. Throws EigIterationLimit with the
// best estimate attached on non-convergence.
EigenSet dominant_eigs(const LinearMap& apply, int dim, int k,
                       const DominantOptions& opts = {});

// Same for a Hermitian map (PSD in our uses); values are real but returned
// in the common EigenSet container.
EigenSet dominant_eigs_hermitian(const LinearMap& apply, int dim, int k,
                                 const DominantOptions& opts = {});

// C = opA(A) * opB(B) through the runtime-dispatched kernels.
Mat mat_mul(const Mat& a, const Mat& b, char opA = 'N', char opB = 'N');

// A^p by binary exponentiation (p >= 1).
Mat mat_power(const Mat& a, long p);

bool all_finite(const Mat& a);

} // namespace geoent

#endif
