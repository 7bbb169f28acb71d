#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "dflab/domain.hpp"
#include "dflab/forms.hpp"

namespace dflab {

// Smooth real function with second-order Wirtinger jets on a region.
// |value| <= bound on the region.  stein marks the h -> -h build.
struct WeightFunction {
  int dim = 0;
  std::function<WirtingerJet2(const CPoint&)> jets;
  std::function<bool(const CPoint&)> region;
  double bound = 0.0;
  bool stein = false;
  nlohmann::json descriptor;
  // set by constructors that can re-derive themselves with h -> -h
  std::function<WeightFunction(bool)> rebuild;
};

WeightFunction zero_weight(int dim);

// lambda with i ddbar lambda >= (M/R^2) I and 0 <= lambda <= 1 on region
struct PropertyPWitness {
  int dim = 0;
  ScalarField lambda;
  double M = 0.0;
  double r = 0.0;
  double R = 0.0;
  std::function<bool(const CPoint&)> region;
  nlohmann::json descriptor;
};

// valid on the thin shell ||z|^2 - 1| < R^2/(2M) around the unit sphere
PropertyPWitness unit_sphere_witness(int dim, double M, double R);

// valid on the ball |w|^2 < R^2/(2M) about the origin
PropertyPWitness origin_witness(int dim, double M, double R);

// quadratic witness around the cusp vertex (1, 0, ..., 0); gamma is the
// cusp exponent.  R defaults to 0.9 min{r, (2M)^(-gamma/(2(1-gamma)))}.
PropertyPWitness annulus_witness(int dim, double M, double r, double gamma,
                                 double R_override = 0.0);

// |Re z_1 - 1| <= |Im z_1|^(1/gamma), the containment needed for the
// annulus witness to cover nearby cusp points
bool cusp_contains(const CPoint& z, double gamma);

// average of factor witnesses on a product of coordinate slices
PropertyPWitness property_p_witness_product(
    const std::vector<PropertyPWitness>& factors);

struct SmoothMaxConfig {
  double mollifier_radius = 1.0;  // fixed; the family is pre-scaled by xi
  int quadrature_order = 25;
  int family_size = 4;
};

struct SmoothMaxJet {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

// Mollified max over x: value >= max x, value - max x <= 1, gradient is a
// convex combination, exact when one entry leads by >= 1, and convex.
// The mollifier is a per-axis degree-8 polynomial bump of half-width 1/2,
// so every integrand is piecewise polynomial and the quadrature is exact.
SmoothMaxJet smooth_max(const Eigen::VectorXd& x,
                        const SmoothMaxConfig& cfg = {});

struct PointWeightParams {
  double eta = 0.5;
  double A = 1.0;
  double B = 2.0;
  double zeta = 0.0;
  double M = 0.0;

  // zeta and M from the admissibility bounds with a 10% margin
  static PointWeightParams admissible(double eta, double A, double B,
                                      bool stein = false);
};

// phi_p = -zeta^{-1} log(e^{-A zeta}
//           + (e^{A zeta} - e^{-B zeta}) R^{-2} |z-p|^2
//           - (e^{-A zeta} - e^{-B zeta}) lambda(z))
WeightFunction point_weight(const CPoint& p, const PropertyPWitness& w,
                            const PointWeightParams& params);

// Holomorphic component with complex gradient and Hessian.
struct HoloJet2 {
  std::complex<double> value;
  Eigen::VectorXcd dz;
  Eigen::MatrixXcd dzdz;
};

struct LeafParams {
  double eta = 0.5;
  double A = 1.0;
  double Atilde = 0.0;
  double Btilde = 0.0;
  double B = 0.0;
  double C = 0.0;  // winding constant, |h| <= (1/2) log C
  double D = 0.0;  // ambient bound |z| < D
  double E = 0.0;
  double zeta = 0.0;
  double M = 0.0;
  double R = 0.0;
  double r = 0.0;
};

// parameter chain with 10% margins; r and R stay caller-chosen since they
// depend on the leaf geometry through the Theta(r) check
LeafParams leaf_params_for(double eta, double A, double C, double D, double r,
                           double R, bool stein = false);

struct LeafData {
  int dim = 0;  // ambient complex dimension
  // n-m holomorphic components vanishing on the leaf
  std::function<std::vector<HoloJet2>(const CPoint&)> f;
  // closed-form de Rham primitive with dh = alpha along the leaf
  ScalarField h;
  std::function<bool(const CPoint&)> leaf_membership;
  std::function<bool(const CPoint&)> near_leaf;  // the neighborhood U_eps
  LeafParams params;
};

// Lower-bound form whose positivity on leaf samples certifies that r is
// small enough; the weight inequality inherits positivity from it.
Eigen::MatrixXcd leaf_theta_matrix(const LeafData& leaf,
                                   const PropertyPWitness& witness,
                                   const WirtingerJet2& delta_jet,
                                   const CPoint& z, bool stein);

// phi_eps = 2h - zeta^{-1} log(-phi) with phi the quadratic expression in
// |z|^2, lambda(f(z)), |f(z)|^2
WeightFunction leaf_weight(const LeafData& leaf, const PropertyPWitness& witness,
                           const SignedDistanceField& sdf,
                           const std::vector<CPoint>& leaf_samples);

// rebuilds with h -> -h; requires provenance (point or leaf constructor)
WeightFunction stein_variant(const WeightFunction& w);

struct PatchPart {
  WeightFunction weight;
  std::function<bool(const CPoint&)> open_set;
  // sampled points of the open set's boundary inside the target closure,
  // where the domination hypothesis is checked
  std::vector<CPoint> boundary_samples;
};

// xi-scaled smooth max of the parts; equals a part verbatim wherever only
// that part covers
WeightFunction patch(const std::vector<PatchPart>& parts,
                     std::function<bool(const CPoint&)> target, double epsilon,
                     double eta, const SignedDistanceField& sdf,
                     const std::vector<CPoint>& target_samples,
                     const SmoothMaxConfig& cfg = {});

// i ddbar phi + 2 beta - i (eta/(1-eta)) (d phi - 2 pi10 a)^(dbar phi - 2 pi01 a)
Eigen::MatrixXcd weight_form_matrix(const WirtingerJet2& delta_jet,
                                    const WirtingerJet2& phi_jet, double eta);

// i ddbar phi - 2 beta - i (1/(1-eta)) (d phi + 2 pi10 a)^(dbar phi + 2 pi01 a)
Eigen::MatrixXcd stein_weight_form_matrix(const WirtingerJet2& delta_jet,
                                          const WirtingerJet2& phi_jet,
                                          double eta);

}  // namespace dflab
