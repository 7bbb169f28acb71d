#pragma once

#include <string>
#include <vector>

#include "dflab/wirtinger.hpp"

namespace dflab {

// Axis-aligned box over the 2n real coordinates (re z_0, im z_0, re z_1, ...).
struct Box {
  std::vector<double> lo, hi;

  static Box cube(int ncomplex, double half_side);
  double diameter() const;
  bool contains(const CPoint& z) const;
};

// Defining function rho, negative inside; bbox contains the closure.
struct ImplicitDomain {
  ScalarField rho;
  Box bbox;

  int dim() const { return rho.dim; }
};

struct SignedDistanceField {
  ImplicitDomain dom;
  double newton_tol = 1e-12;
  int max_iter = 60;
  // queries are trusted only within this distance of the boundary
  double tube_half_width = 0.0;

  static SignedDistanceField make(ImplicitDomain d, double newton_tol = 1e-12,
                                  int max_iter = 60);
};

struct BoundaryPoint {
  CPoint z;
  WirtingerJet2 delta_jet;
  // nu = 4 sum_j (d delta / d zbar_j) d/dz_j, so d delta(nu) = 1
  Eigen::VectorXcd normal;
  // orthonormal columns spanning ker(d delta), the (1,0) tangent space
  Eigen::MatrixXcd tangent_basis;
};

struct LeviSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending, n-1 entries
  Eigen::MatrixXcd eigenvectors;  // ambient tangent vectors, one per column
  std::vector<int> null_space;  // indices with |eigenvalue| < null_tol
  double null_tol = 1e-6;
};

// Nearest boundary point; the query must lie in the single-foot-point tube.
CPoint foot_point(const SignedDistanceField& sdf, const CPoint& z);

// Signed distance (negative inside) with first and second Wirtinger
// derivatives.  The gradient is the unit normal at the foot point; the
// Hessian comes from transporting the boundary shape operator W along the
// normal line, D^2 delta = W (I + delta W)^{-1}.
WirtingerJet2 signed_distance(const SignedDistanceField& sdf, const CPoint& z);

BoundaryPoint boundary_point_at(const SignedDistanceField& sdf,
                                const CPoint& near_boundary);

// Deterministic for fixed seed.  After a first global pass, regions whose
// smallest Levi eigenvalue falls below strat_threshold are oversampled so
// that weakly pseudoconvex sets are resolved.
std::vector<BoundaryPoint> boundary_sample(const SignedDistanceField& sdf,
                                           int budget, std::uint64_t seed,
                                           double strat_threshold = 1e-3);

LeviSpectrum levi_spectrum(const BoundaryPoint& bp, double null_tol = 1e-6);

// |d delta|^2 in the metric where |dz_j|^2 = 2; equals 1/2 on the boundary.
double dbar_norm_sq(const WirtingerJet2& jet);

// Columns: re/im of each coordinate, rho residual, Levi eigenvalues.
void export_boundary_csv(const std::string& path,
                         const SignedDistanceField& sdf,
                         const std::vector<BoundaryPoint>& samples);

}  // namespace dflab
