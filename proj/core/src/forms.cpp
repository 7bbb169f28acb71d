#include "dflab/forms.hpp"

#include <cmath>
#include <complex>

namespace dflab {

namespace {

// pi01 coefficients a_k = 2 sum_j conj(t_j) H_jk, t = dz, H = dzdzbar
Eigen::VectorXcd pi01_coeffs(const WirtingerJet2& dj) {
  return 2.0 * (dj.dzdzbar.transpose() * dj.dz.conjugate());
}

Eigen::MatrixXcd beta_matrix(const WirtingerJet2& dj) {
  const Eigen::Index n = dj.dz.size();
  const Eigen::VectorXcd& t = dj.dz;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n) -
                       4.0 * (t.conjugate() * t.transpose());
  Eigen::MatrixXcd b = dj.dzdz * p * dj.dzdz.adjoint();
  return 0.5 * (b + b.adjoint());
}

}  // namespace

AlphaAtPoint alpha_of_jet(const WirtingerJet2& dj) {
  AlphaAtPoint a;
  a.pi01 = pi01_coeffs(dj);
  a.pi10 = a.pi01.conjugate();
  return a;
}

AlphaAtPoint alpha_at(const BoundaryPoint& bp) {
  return alpha_of_jet(bp.delta_jet);
}

double alpha_projection_residual(const BoundaryPoint& bp) {
  const WirtingerJet2& dj = bp.delta_jet;
  Eigen::VectorXcd via_mixed = pi01_coeffs(dj).conjugate();
  Eigen::VectorXcd via_holo =
      -2.0 * (dj.dzdz.transpose() * dj.dz.conjugate());
  return (via_mixed - via_holo).cwiseAbs().maxCoeff();
}

BetaAtPoint beta_of_jet(const WirtingerJet2& dj, const CPoint& z) {
  BetaAtPoint b;
  b.form.point = z;
  b.form.m = beta_matrix(dj);
  b.min_eigenvalue = min_eigenvalue(b.form.m);
  b.psd_warning = b.min_eigenvalue < -1e-6;
  return b;
}

BetaAtPoint beta_at(const BoundaryPoint& bp) {
  return beta_of_jet(bp.delta_jet, bp.z);
}

double dc_alpha_identity_residual(const SignedDistanceField& sdf,
                                  const BoundaryPoint& bp,
                                  const DcAlphaOptions& opt) {
  LeviSpectrum spec = levi_spectrum(bp, opt.null_tol);
  if (spec.null_space.empty())
    throw Error(ErrorCode::NoNullSpace,
                "dc_alpha_identity_residual: Levi form is definite here");
  const int n = static_cast<int>(bp.z.size());
  const double h = opt.fd_step;

  Eigen::VectorXcd base = pi01_coeffs(bp.delta_jet);
  // dadz(j,k) = d a_k / d z_j by forward differences of the second jets
  Eigen::MatrixXcd dadz(n, n);
  for (int j = 0; j < n; ++j) {
    CPoint zx = bp.z, zy = bp.z;
    zx[j] += h;
    zy[j] += std::complex<double>(0.0, h);
    Eigen::VectorXcd ax = pi01_coeffs(signed_distance(sdf, zx));
    Eigen::VectorXcd ay = pi01_coeffs(signed_distance(sdf, zy));
    dadz.row(j) =
        (0.5 * ((ax - base) / h -
                std::complex<double>(0.0, 1.0) * (ay - base) / h))
            .transpose();
  }

  // (1,1)-part of d^c alpha has matrix M_jk = d a_k/d z_j + conj(d a_j/d z_k)
  Eigen::MatrixXcd m = dadz + dadz.adjoint();
  Eigen::MatrixXcd total = m + 2.0 * beta_matrix(bp.delta_jet);

  Eigen::MatrixXcd v(n, static_cast<Eigen::Index>(spec.null_space.size()));
  for (std::size_t c = 0; c < spec.null_space.size(); ++c)
    v.col(static_cast<Eigen::Index>(c)) =
        spec.eigenvectors.col(spec.null_space[c]);
  Eigen::MatrixXcd restricted = v.transpose() * total * v.conjugate();
  return restricted.cwiseAbs().maxCoeff();
}

double dbar_h_residual(const BoundaryPoint& bp, const VectorFieldSpec& X,
                       double null_tol) {
  const int n = static_cast<int>(bp.z.size());
  if (X.dim != n)
    throw Error(ErrorCode::DimensionMismatch, "dbar_h_residual: field dim");
  LeviSpectrum spec = levi_spectrum(bp, null_tol);
  if (spec.null_space.empty())
    throw Error(ErrorCode::NoNullSpace,
                "dbar_h_residual: Levi form is definite here");

  const WirtingerJet2& dj = bp.delta_jet;
  FieldJet1 fj = X.eval(bp.z);
  if (fj.value.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "dbar_h_residual: field eval");

  std::complex<double> w = fj.value.cwiseProduct(dj.dz).sum();
  if (!std::isfinite(std::abs(w)) || std::abs(w) == 0.0)
    throw Error(ErrorCode::NonFinite, "dbar_h_residual: X delta degenerate");
  if (std::abs(std::arg(w)) >= M_PI - 0.1)
    throw Error(ErrorCode::BranchCut,
                "dbar_h_residual: arg(X delta) too close to the cut");
  std::complex<double> hval = 0.5 * std::log(w);

  Eigen::VectorXcd a = pi01_coeffs(dj);
  Eigen::VectorXcd term(n);
  for (int j = 0; j < n; ++j) {
    // d(X delta)/d zbar_j, with d t_k/d zbar_j = dzdzbar(k, j)
    std::complex<double> dw = 0.0, comm = 0.0;
    for (int k = 0; k < n; ++k) {
      dw += fj.dzbar(k, j) * dj.dz(k) + fj.value(k) * dj.dzdzbar(k, j);
      comm -= fj.dzbar(k, j) * dj.dz(k);
    }
    std::complex<double> dbar_h = 0.5 * dw / w;
    term(j) = dbar_h - a(j) + 0.5 * std::exp(-2.0 * hval) * comm;
  }

  double worst = 0.0;
  for (int idx : spec.null_space) {
    Eigen::VectorXcd v = spec.eigenvectors.col(idx);
    worst = std::max(worst, std::abs(term.dot(v)));
  }
  return worst;
}

namespace {

nlohmann::json to_json(const std::complex<double>& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

nlohmann::json to_json(const Eigen::VectorXcd& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

nlohmann::json to_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

nlohmann::json form_point_dump(const SignedDistanceField& sdf,
                               const BoundaryPoint& bp) {
  nlohmann::json out;
  nlohmann::json pt = nlohmann::json::array();
  for (const auto& c : bp.z) pt.push_back(to_json(c));
  out["point"] = pt;

  AlphaAtPoint a = alpha_at(bp);
  BetaAtPoint b = beta_at(bp);
  LeviSpectrum spec = levi_spectrum(bp);
  out["alpha_pi10"] = to_json(a.pi10);
  out["beta_matrix"] = to_json(b.form.m);
  out["levi_eigenvalues"] =
      std::vector<double>(spec.eigenvalues.data(),
                          spec.eigenvalues.data() + spec.eigenvalues.size());

  nlohmann::json res;
  res["alpha_projection"] = alpha_projection_residual(bp);
  res["beta_min_eigenvalue"] = b.min_eigenvalue;
  if (spec.null_space.empty()) {
    res["dc_alpha_identity"] = nullptr;
  } else {
    res["dc_alpha_identity"] = dc_alpha_identity_residual(sdf, bp);
  }
  out["residuals"] = res;
  return out;
}

}  // namespace dflab
