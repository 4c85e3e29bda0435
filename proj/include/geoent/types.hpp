#ifndef GEOENT_TYPES_HPP
#define GEOENT_TYPES_HPP

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace geoent {

using cplx = std::complex<double>;

// Row-major storage throughout so matrices interoperate with the raw kernels.
using Mat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// splitmix64: used to derive independent sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t idx) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (idx + 1));
  return splitmix64(s);
}

} // namespace geoent

#endif
