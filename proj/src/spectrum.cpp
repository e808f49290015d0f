#include "tenfold/spectrum.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace tenfold::linalg {

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H) {
  int n = int(H.rows());
  if (H.cols() != n) throw std::invalid_argument("hermitian_eigenvalues: square input required");
  Eigen::MatrixXcd work = H;  // column-major, overwritten by LAPACK
  std::vector<double> ev(n);
  int info = LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'U', n,
                           reinterpret_cast<lapack_complex_double*>(work.data()), n, ev.data());
  if (info != 0) throw std::runtime_error("zheev failed, info=" + std::to_string(info));
  return ev;
}

}  // namespace tenfold::linalg
