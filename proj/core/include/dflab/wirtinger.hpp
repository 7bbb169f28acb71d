#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "dflab/errors.hpp"
#include "dflab/jets.hpp"

namespace dflab {

using CPoint = std::vector<std::complex<double>>;

// Real scalar field on C^n ~ R^{2n} with two evaluation routes sharing one
// generic body: a fast plain-complex path and a jet path.
struct ScalarField {
  int dim = 0;
  std::function<double(const CPoint&)> value;
  std::function<Jet2(const std::vector<CJet2>&)> jet;
};

template <class F>
ScalarField make_field(int dim, F f) {
  ScalarField s;
  s.dim = dim;
  s.value = [f](const CPoint& z) -> double { return f(z); };
  s.jet = [f](const std::vector<CJet2>& z) -> Jet2 { return f(z); };
  return s;
}

// value + dz + mixed/holomorphic second derivatives of a real field:
//   dz[j]        = d f / d z_j
//   dzdzbar(j,k) = d^2 f / d z_j d z_k-bar   (Hermitian)
//   dzdz(j,k)    = d^2 f / d z_j d z_k       (symmetric)
struct WirtingerJet2 {
  double value = 0.0;
  Eigen::VectorXcd dz;
  Eigen::MatrixXcd dzdzbar;
  Eigen::MatrixXcd dzdz;

  Eigen::VectorXcd dzbar() const { return dz.conjugate(); }
};

struct HermitianForm {
  CPoint point;
  Eigen::MatrixXcd m;
};

enum class JetScheme { AD, FD };

// Second-order real jet of f at z over the 2n coordinates (x_1,y_1,...).
// FD uses central differences of f.value with the given step; Richardson
// refinement is intentionally not applied so the two routes stay independent.
Jet2 real_jet2(const ScalarField& f, const CPoint& z, JetScheme scheme,
               double fd_step = 1e-5);

// Wirtinger assembly of the real jet.
WirtingerJet2 assemble_wirtinger(const Jet2& j);

WirtingerJet2 jet2(const ScalarField& f, const CPoint& z, JetScheme scheme,
                   double fd_step = 1e-5);

// Smallest eigenvalue of the Hermitianized matrix (A + A^H)/2.
// Rejects inputs whose asymmetry exceeds 1e-9 relative.
double min_eigenvalue(const Eigen::MatrixXcd& a);

Eigen::VectorXd eigenvalues_ascending(const Eigen::MatrixXcd& a);

// B^H A B for a (not necessarily orthonormal) column basis B.
Eigen::MatrixXcd restrict_form(const Eigen::MatrixXcd& a,
                               const Eigen::MatrixXcd& basis);

} // namespace dflab
