#pragma once

#include <functional>

#include "dflab/wirtinger.hpp"

namespace dflab {

// First-order Wirtinger data for the coefficients of a (1,0) vector field
// X = sum_k X^k d/dz_k.  Row k differentiates coefficient X^k:
//   dz(k, j)    = d X^k / d z_j
//   dzbar(k, j) = d X^k / d zbar_j
struct FieldJet1 {
  Eigen::VectorXcd value;
  Eigen::MatrixXcd dz;
  Eigen::MatrixXcd dzbar;
};

struct VectorFieldSpec {
  int dim = 0;
  std::function<FieldJet1(const CPoint&)> eval;
  std::function<bool(const CPoint&)> region;
  double epsilon = 0.1;
  // |X delta| must stay within (1/C, C) and |arg X delta| below epsilon
  double C = 2.0;
};

}  // namespace dflab
