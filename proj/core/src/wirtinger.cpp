#include "dflab/wirtinger.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace dflab {

namespace {

void check_dim(const ScalarField& f, const CPoint& z) {
  if (static_cast<int>(z.size()) != f.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "field expects dim " + std::to_string(f.dim) + ", got " +
                    std::to_string(z.size()));
  }
}

bool finite(const Jet2& j) {
  return std::isfinite(j.v) && j.g.allFinite() && j.h.allFinite();
}

Jet2 fd_jet2(const ScalarField& f, const CPoint& z, double h) {
  const int n = static_cast<int>(z.size());
  const int m = 2 * n;
  auto shifted = [&](int a, double da, int b, double db) {
    CPoint w = z;
    auto bump = [&](int idx, double d) {
      const int j = idx / 2;
      if (idx % 2 == 0)
        w[j] += std::complex<double>(d, 0.0);
      else
        w[j] += std::complex<double>(0.0, d);
    };
    bump(a, da);
    if (b >= 0) bump(b, db);
    return f.value(w);
  };

  // Second differences divide by h2^2, so their roundoff floor is eps/h2^2
  // while truncation grows as h2^2; 10x the first-difference step sits near
  // the crossover for double precision at the default h.
  const double h2 = 10.0 * h;
  Jet2 r(f.value(z), m);
  for (int a = 0; a < m; ++a) {
    r.g(a) = (shifted(a, h, -1, 0.0) - shifted(a, -h, -1, 0.0)) / (2.0 * h);
    const double fp = shifted(a, h2, -1, 0.0);
    const double fm = shifted(a, -h2, -1, 0.0);
    r.h(a, a) = (fp - 2.0 * r.v + fm) / (h2 * h2);
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const double fpp = shifted(a, h2, b, h2);
      const double fpm = shifted(a, h2, b, -h2);
      const double fmp = shifted(a, -h2, b, h2);
      const double fmm = shifted(a, -h2, b, -h2);
      const double mixed = (fpp - fpm - fmp + fmm) / (4.0 * h2 * h2);
      r.h(a, b) = mixed;
      r.h(b, a) = mixed;
    }
  }
  return r;
}

} // namespace

Jet2 real_jet2(const ScalarField& f, const CPoint& z, JetScheme scheme,
               double fd_step) {
  check_dim(f, z);
  Jet2 j = (scheme == JetScheme::AD) ? f.jet(seed_point(z))
                                     : fd_jet2(f, z, fd_step);
  if (!finite(j)) {
    throw Error(ErrorCode::NonFinite, "jet evaluation produced a non-finite value");
  }
  return j;
}

WirtingerJet2 assemble_wirtinger(const Jet2& j) {
  const int n = j.nvars() / 2;
  WirtingerJet2 w;
  w.value = j.v;
  w.dz.resize(n);
  w.dzdzbar.resize(n, n);
  w.dzdz.resize(n, n);
  const std::complex<double> I(0.0, 1.0);
  for (int a = 0; a < n; ++a) {
    w.dz(a) = 0.5 * (j.g(2 * a) - I * j.g(2 * a + 1));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double xx = j.h(2 * a, 2 * b);
      const double yy = j.h(2 * a + 1, 2 * b + 1);
      const double xy = j.h(2 * a, 2 * b + 1);
      const double yx = j.h(2 * a + 1, 2 * b);
      w.dzdzbar(a, b) = 0.25 * ((xx + yy) + I * (xy - yx));
      w.dzdz(a, b) = 0.25 * ((xx - yy) - I * (xy + yx));
    }
  }
  return w;
}

WirtingerJet2 jet2(const ScalarField& f, const CPoint& z, JetScheme scheme,
                   double fd_step) {
  return assemble_wirtinger(real_jet2(f, z, scheme, fd_step));
}

double min_eigenvalue(const Eigen::MatrixXcd& a) {
  return eigenvalues_ascending(a)(0);
}

Eigen::VectorXd eigenvalues_ascending(const Eigen::MatrixXcd& a) {
  const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (asym / scale > 1e-9) {
    throw Error(ErrorCode::NonHermitian,
                "matrix asymmetry " + std::to_string(asym / scale));
  }
  Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  return es.eigenvalues();
}

Eigen::MatrixXcd restrict_form(const Eigen::MatrixXcd& a,
                               const Eigen::MatrixXcd& basis) {
  Eigen::MatrixXcd gram = basis.adjoint() * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(gram.rows() - 1);
  if (lo <= 0.0 || hi / lo > 1e12) {
    throw Error(ErrorCode::RankDeficient, "basis Gram condition too large");
  }
  return basis.adjoint() * a * basis;
}

} // namespace dflab
