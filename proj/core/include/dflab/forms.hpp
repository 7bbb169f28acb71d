#pragma once

#include <json.hpp>

#include "dflab/domain.hpp"
#include "dflab/vector_field.hpp"

namespace dflab {

// Boundary 1-form alpha split into its (1,0) and (0,1) projections.  Both
// are computed from second derivatives of the signed distance; alpha is
// real, so pi01 is stored as the exact conjugate of pi10.
struct AlphaAtPoint {
  Eigen::VectorXcd pi10;  // coefficients in dz
  Eigen::VectorXcd pi01;  // coefficients in dzbar
};

// Companion (1,1)-form.  Its coefficient matrix factors as S P S^H with
// S = d^2 delta / dz dz and P an orthogonal projector wherever
// |grad delta| = 1, so it is positive semi-definite up to jet noise.
struct BetaAtPoint {
  HermitianForm form;
  double min_eigenvalue = 0.0;
  // set when min_eigenvalue < -1e-6, signalling inaccurate delta jets
  bool psd_warning = false;
};

AlphaAtPoint alpha_of_jet(const WirtingerJet2& delta_jet);
AlphaAtPoint alpha_at(const BoundaryPoint& bp);

// Max-norm gap between the two equivalent expressions for pi10:
//   2 sum_j (d delta/d z_j) d(d delta/d zbar_j)   and
//  -2 sum_j (d delta/d zbar_j) d(d delta/d z_j),
// equal because sum_j |d delta/d z_j|^2 is constant near the boundary.
double alpha_projection_residual(const BoundaryPoint& bp);

BetaAtPoint beta_of_jet(const WirtingerJet2& delta_jet, const CPoint& z);
BetaAtPoint beta_at(const BoundaryPoint& bp);

struct DcAlphaOptions {
  // forward-difference step for the third delta-derivatives; first-order
  // by construction so the residual scales linearly in the step
  double fd_step = 1e-4;
  double null_tol = 1e-6;
};

// Convention d^c = i(d - dbar) throughout.  Restricted to the Levi null
// space, the (1,1)-part of d^c alpha must equal -2 beta; returns the
// max-norm of (d^c alpha + 2 beta) over a null-space basis.
double dc_alpha_identity_residual(const SignedDistanceField& sdf,
                                  const BoundaryPoint& bp,
                                  const DcAlphaOptions& opt = {});

// With h = (1/2) Log(X delta) (principal branch), returns the max over
// unit Levi-null directions v of
//   |(dbar h - pi01 alpha)(vbar)
//      + (1/2) e^{-2h} sum_j d delta([X, d/dzbar_j]) vbar_j|.
// Vanishes identically when X is a nonvanishing multiple of the normal.
double dbar_h_residual(const BoundaryPoint& bp, const VectorFieldSpec& X,
                       double null_tol = 1e-6);

// {point, alpha_pi10, beta_matrix, levi_eigenvalues, residuals}; complex
// numbers serialize as [re, im].
nlohmann::json form_point_dump(const SignedDistanceField& sdf,
                               const BoundaryPoint& bp);

}  // namespace dflab
