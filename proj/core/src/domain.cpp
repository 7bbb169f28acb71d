#include "dflab/domain.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "dflab/errors.hpp"
#include "dflab/rng.hpp"

namespace dflab {

namespace {

Eigen::VectorXd to_vec(const CPoint& z) {
  Eigen::VectorXd x(2 * z.size());
  for (size_t j = 0; j < z.size(); ++j) {
    x(2 * j) = z[j].real();
    x(2 * j + 1) = z[j].imag();
  }
  return x;
}

CPoint to_point(const Eigen::VectorXd& x) {
  CPoint z(x.size() / 2);
  for (size_t j = 0; j < z.size(); ++j)
    z[j] = {x(2 * j), x(2 * j + 1)};
  return z;
}

// Converged boundary projection: alternate a Newton step onto the zero set
// with a tangential slide toward z, so the fixed point is the foot of z.
// Positions settle to newton_tol; two extra iterations run after that.
Eigen::VectorXd converge_foot(const SignedDistanceField& sdf,
                              const Eigen::VectorXd& zv,
                              const Eigen::VectorXd& start) {
  const double far = 10.0 * sdf.dom.bbox.diameter();
  Eigen::VectorXd x = start;
  int settled = 0;
  for (int it = 0; it < sdf.max_iter; ++it) {
    Jet2 j = real_jet2(sdf.dom.rho, to_point(x), JetScheme::AD);
    const double gn2 = j.g.squaredNorm();
    if (gn2 < 1e-20)
      throw Error(ErrorCode::NoConvergence,
                  "foot-point iteration hit a critical point of rho");
    Eigen::VectorXd n = j.g / std::sqrt(gn2);
    x -= (j.v / std::sqrt(gn2)) * n;
    Eigen::VectorXd t = zv - x;
    t -= n.dot(t) * n;
    x += t;
    if ((x - zv).norm() > far)
      throw Error(ErrorCode::NoConvergence, "foot-point iteration diverged");
    if (std::abs(j.v) < sdf.newton_tol && t.norm() < sdf.newton_tol) {
      if (++settled >= 2) return x;
    } else {
      settled = 0;
    }
  }
  throw Error(ErrorCode::NoConvergence, "foot-point iteration exhausted " +
                                            std::to_string(sdf.max_iter) +
                                            " iterations");
}

// Foot point with an ambiguity probe: a second run starts half a tube width
// inward and must land on the same foot.
Eigen::VectorXd foot_vec(const SignedDistanceField& sdf,
                         const Eigen::VectorXd& zv) {
  Eigen::VectorXd xi = converge_foot(sdf, zv, zv);
  Jet2 j0 = real_jet2(sdf.dom.rho, to_point(zv), JetScheme::AD);
  const double gn = j0.g.norm();
  if (gn > 1e-10 && sdf.tube_half_width > 0.0) {
    Eigen::VectorXd start2 = zv - (0.5 * sdf.tube_half_width / gn) * j0.g;
    Eigen::VectorXd xi2 = converge_foot(sdf, zv, start2);
    if ((xi - xi2).norm() > 10.0 * sdf.newton_tol)
      throw Error(ErrorCode::AmbiguousFootPoint,
                  "foot-point restarts disagree by " +
                      std::to_string((xi - xi2).norm()));
  }
  return xi;
}

}  // namespace

Box Box::cube(int ncomplex, double half_side) {
  Box b;
  b.lo.assign(2 * ncomplex, -half_side);
  b.hi.assign(2 * ncomplex, half_side);
  return b;
}

double Box::diameter() const {
  double s = 0.0;
  for (size_t i = 0; i < lo.size(); ++i) s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
  return std::sqrt(s);
}

bool Box::contains(const CPoint& z) const {
  if (2 * z.size() != lo.size()) return false;
  for (size_t j = 0; j < z.size(); ++j) {
    if (z[j].real() < lo[2 * j] || z[j].real() > hi[2 * j]) return false;
    if (z[j].imag() < lo[2 * j + 1] || z[j].imag() > hi[2 * j + 1])
      return false;
  }
  return true;
}

SignedDistanceField SignedDistanceField::make(ImplicitDomain d,
                                              double newton_tol,
                                              int max_iter) {
  SignedDistanceField sdf;
  sdf.tube_half_width = 0.05 * d.bbox.diameter();
  sdf.dom = std::move(d);
  sdf.newton_tol = newton_tol;
  sdf.max_iter = max_iter;
  return sdf;
}

CPoint foot_point(const SignedDistanceField& sdf, const CPoint& z) {
  if (static_cast<int>(z.size()) != sdf.dom.dim())
    throw Error(ErrorCode::DimensionMismatch, "foot_point: dim(z) != dim");
  return to_point(foot_vec(sdf, to_vec(z)));
}

WirtingerJet2 signed_distance(const SignedDistanceField& sdf, const CPoint& z) {
  const int m = 2 * sdf.dom.dim();
  Eigen::VectorXd zv = to_vec(z);
  Eigen::VectorXd xi = foot_vec(sdf, zv);

  Jet2 jb = real_jet2(sdf.dom.rho, to_point(xi), JetScheme::AD);
  const double gn = jb.g.norm();
  Eigen::VectorXd n = jb.g / gn;
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(m, m) - n * n.transpose();
  Eigen::MatrixXd W = P * (jb.h / gn) * P;

  const double delta =
      (sdf.dom.rho.value(z) < 0.0 ? -1.0 : 1.0) * (zv - xi).norm();

  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) + delta * W;
  Eigen::MatrixXd H = P * (W * M.inverse()) * P;
  H = 0.5 * (H + H.transpose()).eval();

  Jet2 dj(delta, m);
  dj.g = n;
  dj.h = H;
  return assemble_wirtinger(dj);
}

double dbar_norm_sq(const WirtingerJet2& jet) {
  return 2.0 * jet.dz.squaredNorm();
}

BoundaryPoint boundary_point_at(const SignedDistanceField& sdf,
                                const CPoint& near_boundary) {
  const int n = sdf.dom.dim();
  BoundaryPoint bp;
  bp.z = foot_point(sdf, near_boundary);
  bp.delta_jet = signed_distance(sdf, bp.z);
  bp.normal = 4.0 * bp.delta_jet.dz.conjugate();
  Eigen::VectorXcd w = bp.delta_jet.dz.conjugate();
  w.normalize();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(w);
  Eigen::MatrixXcd Q = qr.householderQ();
  bp.tangent_basis = Q.rightCols(n - 1);
  return bp;
}

LeviSpectrum levi_spectrum(const BoundaryPoint& bp, double null_tol) {
  const int n = static_cast<int>(bp.z.size());
  LeviSpectrum s;
  s.null_tol = null_tol;
  if (n < 2) {
    s.eigenvalues.resize(0);
    s.eigenvectors.resize(n, 0);
    return s;
  }
  Eigen::MatrixXcd R = bp.tangent_basis.adjoint() * bp.delta_jet.dzdzbar *
                       bp.tangent_basis;
  R = (0.5 * (R + R.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(R);
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = bp.tangent_basis * es.eigenvectors();
  for (int i = 0; i < n - 1; ++i)
    if (std::abs(s.eigenvalues(i)) < null_tol) s.null_space.push_back(i);
  return s;
}

std::vector<BoundaryPoint> boundary_sample(const SignedDistanceField& sdf,
                                           int budget, std::uint64_t seed,
                                           double strat_threshold) {
  if (budget < 1)
    throw Error(ErrorCode::ConfigError, "boundary_sample: budget < 1");
  const int n = sdf.dom.dim();
  const int m = 2 * n;
  const Box& box = sdf.dom.bbox;
  CounterRng scan_rng = CounterRng(seed).split(0);
  CounterRng global_rng = CounterRng(seed).split(1);
  CounterRng refine_rng = CounterRng(seed).split(2);

  auto draw = [&](CounterRng& rng, std::uint64_t base) {
    CPoint z(n);
    for (int j = 0; j < n; ++j)
      z[j] = {rng.uniform(base + 2 * j, box.lo[2 * j], box.hi[2 * j]),
              rng.uniform(base + 2 * j + 1, box.lo[2 * j + 1],
                          box.hi[2 * j + 1])};
    return z;
  };

  bool neg = false, pos = false;
  for (std::uint64_t i = 0; i < 2048 && !(neg && pos); ++i) {
    double v = sdf.dom.rho.value(draw(scan_rng, i * m));
    (v < 0.0 ? neg : pos) = true;
  }
  if (!(neg && pos))
    throw Error(ErrorCode::EmptyBoundary,
                "no sign change of rho found in bbox");

  auto project = [&](const CPoint& p, BoundaryPoint& out) {
    try {
      Eigen::VectorXd pv = to_vec(p);
      Eigen::VectorXd xi = converge_foot(sdf, pv, pv);
      CPoint q = to_point(xi);
      if (!box.contains(q)) return false;
      out = boundary_point_at(sdf, q);
      return true;
    } catch (const Error&) {
      return false;
    }
  };

  std::vector<BoundaryPoint> points;
  points.reserve(budget);
  const int target_global = (n >= 2) ? (budget * 7 + 9) / 10 : budget;
  const std::uint64_t max_attempts = 400ull * budget + 2048;
  std::uint64_t attempt = 0;
  while (static_cast<int>(points.size()) < target_global &&
         attempt < max_attempts) {
    BoundaryPoint bp;
    if (project(draw(global_rng, attempt * m), bp)) points.push_back(bp);
    ++attempt;
  }
  if (points.empty())
    throw Error(ErrorCode::NoConvergence, "boundary sampling stalled");

  std::vector<CPoint> seeds;
  if (n >= 2) {
    for (const auto& bp : points) {
      LeviSpectrum s = levi_spectrum(bp);
      if (s.eigenvalues(0) < strat_threshold) seeds.push_back(bp.z);
    }
  }

  const double jitter = 0.03 * box.diameter();
  std::uint64_t rattempt = 0;
  while (static_cast<int>(points.size()) < budget && rattempt < max_attempts) {
    BoundaryPoint bp;
    if (!seeds.empty()) {
      const CPoint& s = seeds[rattempt % seeds.size()];
      CPoint p = s;
      for (int j = 0; j < n; ++j)
        p[j] += std::complex<double>(
            refine_rng.uniform(rattempt * m + 2 * j, -jitter, jitter),
            refine_rng.uniform(rattempt * m + 2 * j + 1, -jitter, jitter));
      if (project(p, bp)) points.push_back(bp);
    } else {
      if (project(draw(global_rng, (attempt + rattempt) * m), bp))
        points.push_back(bp);
    }
    ++rattempt;
  }
  if (static_cast<int>(points.size()) < budget)
    throw Error(ErrorCode::NoConvergence, "boundary sampling stalled at " +
                                              std::to_string(points.size()) +
                                              " of " + std::to_string(budget));
  return points;
}

void export_boundary_csv(const std::string& path,
                         const SignedDistanceField& sdf,
                         const std::vector<BoundaryPoint>& samples) {
  const int n = sdf.dom.dim();
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::ConfigError, "cannot open " + path);
  for (int j = 0; j < n; ++j) out << "re" << j << ",im" << j << ",";
  out << "rho_residual";
  for (int i = 0; i < n - 1; ++i) out << ",levi" << i;
  out << "\n";
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
  };
  for (const auto& bp : samples) {
    for (int j = 0; j < n; ++j) {
      emit(bp.z[j].real());
      out << ",";
      emit(bp.z[j].imag());
      out << ",";
    }
    emit(sdf.dom.rho.value(bp.z));
    LeviSpectrum s = levi_spectrum(bp);
    for (int i = 0; i < s.eigenvalues.size(); ++i) {
      out << ",";
      emit(s.eigenvalues(i));
    }
    out << "\n";
  }
}

}  // namespace dflab
