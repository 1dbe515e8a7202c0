#pragma once

#include <Eigen/Core>

namespace fdsurr {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace fdsurr
