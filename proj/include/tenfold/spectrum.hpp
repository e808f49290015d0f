#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tenfold::linalg {

/// Ascending eigenvalues of a hermitian matrix (LAPACK zheev, values only).
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H);

}  // namespace tenfold::linalg
