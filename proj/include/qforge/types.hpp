#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

}  // namespace qforge
