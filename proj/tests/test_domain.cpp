#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>

#include "dflab/domain.hpp"
#include "dflab/errors.hpp"
#include "dflab/rng.hpp"

using namespace dflab;
using std::complex;

namespace {

ImplicitDomain ball2() {
  return {make_field(2, [](const auto& z) {
            return abs2(z[0]) + abs2(z[1]) - 1.0;
          }),
          Box::cube(2, 1.3)};
}

ImplicitDomain ellipsoid2() {
  return {make_field(2, [](const auto& z) {
            return abs2(z[0]) + 2.0 * abs2(z[1]) - 1.0;
          }),
          Box::cube(2, 1.1)};
}

// s = 1/2: the region is the crescent between |z+1| = 2 and |z-1/3| = 2/3,
// tangent at z = 1, so it reaches out to z = -3 and pinches at z = 1.
ImplicitDomain two_circles_region(double s) {
  return {make_field(1, [s](const auto& z) {
            auto q = abs2(z[0]) - 1.0;
            auto w = abs2(z[0] - 1.0);
            return q * q - (s * s) * w * w;
          }),
          Box{{-3.4, -2.3}, {1.4, 2.3}}};
}

CPoint scale_point(const CPoint& u, double r) {
  CPoint z = u;
  for (auto& c : z) c *= r;
  return z;
}

CPoint random_direction4(CounterRng& rng, std::uint64_t base) {
  double a[4];
  double n2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    a[i] = rng.uniform(base + i, -1.0, 1.0);
    n2 += a[i] * a[i];
  }
  double n = std::sqrt(n2);
  return {complex<double>(a[0] / n, a[1] / n),
          complex<double>(a[2] / n, a[3] / n)};
}

}  // namespace

TEST_CASE("ball signed distance matches the radial closed form") {
  auto sdf = SignedDistanceField::make(ball2());
  CounterRng rng(11);
  for (int i = 0; i < 40; ++i) {
    CPoint u = random_direction4(rng, 8 * i);
    double r = 1.0 + rng.uniform(8 * i + 4, -0.2, 0.2);
    CPoint z = scale_point(u, r);
    auto jet = signed_distance(sdf, z);
    CHECK(jet.value == doctest::Approx(r - 1.0).epsilon(1e-9));

    Eigen::VectorXd x(4), n(4);
    for (int j = 0; j < 2; ++j) {
      x(2 * j) = z[j].real();
      x(2 * j + 1) = z[j].imag();
    }
    n = x / r;
    Jet2 expect(r - 1.0, 4);
    expect.g = n;
    expect.h = (Eigen::MatrixXd::Identity(4, 4) - n * n.transpose()) / r;
    auto ref = assemble_wirtinger(expect);
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(jet.dz(j) - ref.dz(j)) < 1e-9);
      for (int k = 0; k < 2; ++k) {
        CHECK(std::abs(jet.dzdzbar(j, k) - ref.dzdzbar(j, k)) < 1e-9);
        CHECK(std::abs(jet.dzdz(j, k) - ref.dzdz(j, k)) < 1e-9);
      }
    }
  }
}

TEST_CASE("ball foot point at (1/2, 0)") {
  auto sdf = SignedDistanceField::make(ball2());
  CPoint z = {complex<double>(0.5, 0.0), complex<double>(0.0, 0.0)};
  CPoint xi = foot_point(sdf, z);
  CHECK(std::abs(xi[0] - 1.0) < 1e-9);
  CHECK(std::abs(xi[1]) < 1e-9);
  auto jet = signed_distance(sdf, z);
  CHECK(jet.value == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(std::abs(jet.dz(0) - 0.5) < 1e-10);
  CHECK(std::abs(jet.dz(1)) < 1e-10);
}

TEST_CASE("ball center is rejected as a caustic") {
  auto sdf = SignedDistanceField::make(ball2());
  CPoint z = {complex<double>(0.0, 0.0), complex<double>(0.0, 0.0)};
  CHECK_THROWS_AS(foot_point(sdf, z), Error);
  try {
    foot_point(sdf, z);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
  }
}

TEST_CASE("foot point identities on tube samples") {
  auto check_domain = [](const ImplicitDomain& dom, int npts,
                         std::uint64_t seed, double tube_override) {
    auto sdf = SignedDistanceField::make(dom);
    if (tube_override > 0.0) sdf.tube_half_width = tube_override;
    const int n = dom.dim();
    CounterRng rng(seed);
    std::uint64_t ctr = 0;
    int done = 0;
    int guard = 0;
    while (done < npts && guard++ < 50 * npts) {
      CPoint p(n);
      for (int j = 0; j < n; ++j)
        p[j] = {rng.uniform(ctr++, dom.bbox.lo[2 * j], dom.bbox.hi[2 * j]),
                rng.uniform(ctr++, dom.bbox.lo[2 * j + 1],
                            dom.bbox.hi[2 * j + 1])};
      // the two-circles crescent pinches at z = 1: the gradient vanishes
      // there and the medial axis comes arbitrarily close to the boundary
      if (n == 1 && std::abs(p[0] - 1.0) < 0.6) continue;
      try {
        CPoint xi0 = foot_point(sdf, p);
        double t = rng.uniform(ctr++, -0.4, 0.4) * sdf.tube_half_width;
        auto bjet = signed_distance(sdf, xi0);
        CPoint z = xi0;
        for (int j = 0; j < n; ++j) z[j] += 2.0 * t * std::conj(bjet.dz(j));
        if (n == 1 && std::abs(z[0] - 1.0) < 0.6) continue;

        auto jet = signed_distance(sdf, z);
        CHECK(jet.value == doctest::Approx(t).epsilon(1e-7));
        CHECK(dbar_norm_sq(jet) == doctest::Approx(0.5).epsilon(1e-8));

        CPoint xi = foot_point(sdf, z);
        CPoint xi2 = foot_point(sdf, xi);
        for (int j = 0; j < n; ++j) {
          CHECK(std::abs(xi[j] - xi2[j]) < 1e-8);
          // xi = z - 2 delta * ddelta/dzbar
          CHECK(std::abs(xi[j] -
                         (z[j] - 2.0 * jet.value * std::conj(jet.dz(j)))) <
                1e-7);
        }
        ++done;
      } catch (const Error&) {
        continue;
      }
    }
    CHECK(done == npts);
  };
  check_domain(ball2(), 25, 101, 0.0);
  check_domain(ellipsoid2(), 25, 102, 0.0);
  check_domain(two_circles_region(0.5), 25, 103, 0.1);
}

TEST_CASE("two-circles distance agrees with the two-arc closed form") {
  // at s = 1/2 the zero set is exactly the pair of tangent circles, so the
  // distance to the boundary is min over the two circle distances
  auto dom = two_circles_region(0.5);
  auto sdf = SignedDistanceField::make(dom);
  sdf.tube_half_width = 0.1;
  auto oracle = [](complex<double> z) {
    double d_big = std::abs(2.0 - std::abs(z + 1.0));
    double d_small = std::abs(std::abs(z - 1.0 / 3.0) - 2.0 / 3.0);
    return std::min(d_big, d_small);
  };
  CounterRng rng(77);
  std::uint64_t ctr = 0;
  int done = 0, guard = 0;
  while (done < 100 && guard++ < 20000) {
    CPoint z = {complex<double>(rng.uniform(ctr++, -3.4, 1.4),
                                rng.uniform(ctr++, -2.3, 2.3))};
    if (std::abs(z[0] - 1.0) < 0.6) continue;
    double best = oracle(z[0]);
    if (best > 0.4 * sdf.tube_half_width) continue;
    try {
      auto jet = signed_distance(sdf, z);
      double sign = dom.rho.value(z) < 0 ? -1.0 : 1.0;
      CHECK(std::abs(jet.value - sign * best) < 1e-9);
      ++done;
    } catch (const Error&) {
    }
  }
  CHECK(done == 100);
}

TEST_CASE("implicit-chain jets match FD of the distance value within 1e-5") {
  auto fd_of = [](const SignedDistanceField& sdf) {
    return ScalarField{
        sdf.dom.dim(),
        [&sdf](const CPoint& z) { return signed_distance(sdf, z).value; },
        {}};
  };
  auto run = [&](const ImplicitDomain& dom, std::uint64_t seed,
                 double tube_override) {
    auto sdf = SignedDistanceField::make(dom);
    if (tube_override > 0.0) sdf.tube_half_width = tube_override;
    auto dfield = fd_of(sdf);
    const int n = dom.dim();
    CounterRng rng(seed);
    std::uint64_t ctr = 0;
    int done = 0, guard = 0;
    while (done < 6 && guard++ < 200) {
      CPoint p(n);
      for (int j = 0; j < n; ++j)
        p[j] = {rng.uniform(ctr++, dom.bbox.lo[2 * j], dom.bbox.hi[2 * j]),
                rng.uniform(ctr++, dom.bbox.lo[2 * j + 1],
                            dom.bbox.hi[2 * j + 1])};
      if (n == 1 && std::abs(p[0] - 1.0) < 0.6) continue;
      try {
        CPoint xi0 = foot_point(sdf, p);
        auto bjet = signed_distance(sdf, xi0);
        double t = rng.uniform(ctr++, -0.4, 0.4) * sdf.tube_half_width;
        CPoint z = xi0;
        for (int j = 0; j < n; ++j) z[j] += 2.0 * t * std::conj(bjet.dz(j));
        if (n == 1 && std::abs(z[0] - 1.0) < 0.6) continue;
        auto ad = signed_distance(sdf, z);
        auto fd = jet2(dfield, z, JetScheme::FD);
        CHECK(std::abs(ad.value - fd.value) < 1e-5);
        for (int j = 0; j < n; ++j) {
          CHECK(std::abs(ad.dz(j) - fd.dz(j)) < 1e-5);
          for (int k = 0; k < n; ++k) {
            CHECK(std::abs(ad.dzdzbar(j, k) - fd.dzdzbar(j, k)) < 1e-5);
            CHECK(std::abs(ad.dzdz(j, k) - fd.dzdz(j, k)) < 1e-5);
          }
        }
        ++done;
      } catch (const Error&) {
        continue;
      }
    }
    CHECK(done == 6);
  };
  run(ball2(), 301, 0.0);
  run(ellipsoid2(), 302, 0.0);
  run(two_circles_region(0.5), 303, 0.1);
}

TEST_CASE("strip medial-axis query reports an ambiguous foot point") {
  ImplicitDomain strip{make_field(1,
                                  [](const auto& z) {
                                    auto x = real(z[0]);
                                    return x * x - 0.25;
                                  }),
                       Box{{-0.6, -1.0}, {0.6, 1.0}}};
  auto sdf = SignedDistanceField::make(strip);
  CPoint z = {complex<double>(0.02, 0.3)};
  try {
    foot_point(sdf, z);
    FAIL("expected AmbiguousFootPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousFootPoint);
  }
}

TEST_CASE("boundary sampling on the sphere") {
  auto sdf = SignedDistanceField::make(ball2());
  auto pts = boundary_sample(sdf, 100, 42);
  REQUIRE(pts.size() == 100);
  for (const auto& bp : pts) {
    double r = std::sqrt(std::norm(bp.z[0]) + std::norm(bp.z[1]));
    CHECK(std::abs(r - 1.0) < 1e-8);
    CHECK(std::abs(sdf.dom.rho.value(bp.z)) < sdf.newton_tol);
  }
  auto again = boundary_sample(sdf, 100, 42);
  for (size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < 2; ++j) CHECK(pts[i].z[j] == again[i].z[j]);
}

TEST_CASE("boundary frames satisfy the normalization identities") {
  for (auto dom : {ball2(), ellipsoid2()}) {
    auto sdf = SignedDistanceField::make(dom);
    auto pts = boundary_sample(sdf, 30, 9);
    for (const auto& bp : pts) {
      complex<double> pairing = 0.0;
      for (int j = 0; j < 2; ++j) pairing += bp.delta_jet.dz(j) * bp.normal(j);
      CHECK(std::abs(pairing - 1.0) < 1e-8);
      CHECK(dbar_norm_sq(bp.delta_jet) == doctest::Approx(0.5).epsilon(1e-8));
      for (int c = 0; c < bp.tangent_basis.cols(); ++c) {
        complex<double> tv = 0.0;
        for (int j = 0; j < 2; ++j)
          tv += bp.delta_jet.dz(j) * bp.tangent_basis(j, c);
        CHECK(std::abs(tv) < 1e-10);
        CHECK(std::abs(bp.tangent_basis.col(c).norm() - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("Levi spectrum of the sphere and an ellipsoid") {
  auto sdf = SignedDistanceField::make(ball2());
  CPoint z = {complex<double>(1.0, 0.0), complex<double>(0.0, 0.0)};
  auto bp = boundary_point_at(sdf, z);
  auto spec = levi_spectrum(bp);
  REQUIRE(spec.eigenvalues.size() == 1);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(spec.null_space.empty());

  auto esdf = SignedDistanceField::make(ellipsoid2());
  for (const auto& p : boundary_sample(esdf, 40, 5)) {
    auto sp = levi_spectrum(p);
    CHECK(sp.eigenvalues(0) > 1e-3);
  }
}

TEST_CASE("empty boundary and bad budget are rejected") {
  ImplicitDomain nowhere{make_field(1,
                                    [](const auto& z) {
                                      return abs2(z[0]) + 1.0;
                                    }),
                         Box::cube(1, 1.0)};
  auto sdf = SignedDistanceField::make(nowhere);
  try {
    boundary_sample(sdf, 10, 1);
    FAIL("expected EmptyBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyBoundary);
  }
  auto bsdf = SignedDistanceField::make(ball2());
  CHECK_THROWS_AS(boundary_sample(bsdf, 0, 1), Error);
}

TEST_CASE("boundary CSV export") {
  auto sdf = SignedDistanceField::make(ball2());
  auto pts = boundary_sample(sdf, 10, 3);
  std::string path = "test_domain_export.csv";
  export_boundary_csv(path, sdf, pts);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "re0,im0,re1,im1,rho_residual,levi0");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 10);
  std::remove(path.c_str());
}
