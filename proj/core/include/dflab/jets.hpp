#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace dflab {

// ====================== second-order real jets ======================
//
// Truncated Taylor value over N real variables: value, gradient, Hessian.
// Arithmetic is exact to rounding for rational operations and the listed
// transcendentals, which is what makes the AD route independent of the FD
// oracle in wirtinger.hpp.

struct Jet2 {
  double v = 0.0;
  Eigen::VectorXd g;
  Eigen::MatrixXd h;

  Jet2() = default;
  Jet2(double value, int nvars)
      : v(value), g(Eigen::VectorXd::Zero(nvars)),
        h(Eigen::MatrixXd::Zero(nvars, nvars)) {}

  static Jet2 variable(double value, int nvars, int index) {
    Jet2 j(value, nvars);
    j.g(index) = 1.0;
    return j;
  }

  int nvars() const { return static_cast<int>(g.size()); }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r.v += b.v;
  r.g += b.g;
  r.h += b.h;
  return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r.v -= b.v;
  r.g -= b.g;
  r.h -= b.h;
  return r;
}

inline Jet2 operator-(const Jet2& a) {
  Jet2 r = a;
  r.v = -r.v;
  r.g = -r.g;
  r.h = -r.h;
  return r;
}

inline Jet2 operator+(const Jet2& a, double c) {
  Jet2 r = a;
  r.v += c;
  return r;
}
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

inline Jet2 operator*(const Jet2& a, double c) {
  Jet2 r = a;
  r.v *= c;
  r.g *= c;
  r.h *= c;
  return r;
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r(a.v * b.v, a.nvars());
  r.g = a.v * b.g + b.v * a.g;
  r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}

// f(u) with f0 = f(u.v), f1 = f'(u.v), f2 = f''(u.v)
inline Jet2 compose1(double f0, double f1, double f2, const Jet2& u) {
  Jet2 r(f0, u.nvars());
  r.g = f1 * u.g;
  r.h = f1 * u.h + f2 * (u.g * u.g.transpose());
  return r;
}

// f(u, w) with first and second partials at (u.v, w.v)
inline Jet2 compose2(double f0, double fu, double fw, double fuu, double fuw,
                     double fww, const Jet2& u, const Jet2& w) {
  Jet2 r(f0, u.nvars());
  r.g = fu * u.g + fw * w.g;
  r.h = fu * u.h + fw * w.h + fuu * (u.g * u.g.transpose()) +
        fww * (w.g * w.g.transpose()) +
        fuw * (u.g * w.g.transpose() + w.g * u.g.transpose());
  return r;
}

inline Jet2 inv(const Jet2& u) {
  const double x = u.v;
  return compose1(1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x), u);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 operator/(double c, const Jet2& b) { return inv(b) * c; }

inline Jet2 exp(const Jet2& u) {
  const double e = std::exp(u.v);
  return compose1(e, e, e, u);
}

inline Jet2 log(const Jet2& u) {
  const double x = u.v;
  return compose1(std::log(x), 1.0 / x, -1.0 / (x * x), u);
}

inline Jet2 sqrt(const Jet2& u) {
  const double s = std::sqrt(u.v);
  return compose1(s, 0.5 / s, -0.25 / (s * u.v), u);
}

inline Jet2 sin(const Jet2& u) {
  return compose1(std::sin(u.v), std::cos(u.v), -std::sin(u.v), u);
}

inline Jet2 cos(const Jet2& u) {
  return compose1(std::cos(u.v), -std::sin(u.v), -std::cos(u.v), u);
}

// real power with constant exponent; u.v must stay positive on the sample set
inline Jet2 pow(const Jet2& u, double p) {
  const double x = u.v;
  return compose1(std::pow(x, p), p * std::pow(x, p - 1.0),
                  p * (p - 1.0) * std::pow(x, p - 2.0), u);
}

inline Jet2 pow(const Jet2& u, int p) {
  if (p == 0) return Jet2(1.0, u.nvars());
  if (p < 0) return inv(pow(u, -p));
  Jet2 r = u;
  for (int i = 1; i < p; ++i) r = r * u;
  return r;
}

// atan2(y, x); undefined at the origin like the scalar version
inline Jet2 atan2(const Jet2& y, const Jet2& x) {
  const double xv = x.v, yv = y.v;
  const double r2 = xv * xv + yv * yv;
  const double r4 = r2 * r2;
  // partials of atan2 w.r.t. (y, x)
  const double fy = xv / r2;
  const double fx = -yv / r2;
  const double fyy = -2.0 * xv * yv / r4;
  const double fxx = 2.0 * xv * yv / r4;
  const double fyx = (yv * yv - xv * xv) / r4;
  return compose2(std::atan2(yv, xv), fy, fx, fyy, fyx, fxx, y, x);
}

// ====================== complex jets ======================

// Complex value whose real and imaginary parts carry second-order jets with
// respect to the same N underlying real variables.
struct CJet2 {
  Jet2 re, im;

  CJet2() = default;
  CJet2(const Jet2& r, const Jet2& i) : re(r), im(i) {}
  CJet2(std::complex<double> c, int nvars)
      : re(c.real(), nvars), im(c.imag(), nvars) {}

  std::complex<double> value() const { return {re.v, im.v}; }
  int nvars() const { return re.nvars(); }
};

inline CJet2 operator+(const CJet2& a, const CJet2& b) {
  return {a.re + b.re, a.im + b.im};
}
inline CJet2 operator-(const CJet2& a, const CJet2& b) {
  return {a.re - b.re, a.im - b.im};
}
inline CJet2 operator-(const CJet2& a) { return {-a.re, -a.im}; }

inline CJet2 operator*(const CJet2& a, const CJet2& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CJet2 operator*(const CJet2& a, const Jet2& s) {
  return {a.re * s, a.im * s};
}
inline CJet2 operator*(const Jet2& s, const CJet2& a) { return a * s; }
inline CJet2 operator*(const CJet2& a, double c) { return {a.re * c, a.im * c}; }
inline CJet2 operator*(double c, const CJet2& a) { return a * c; }
inline CJet2 operator*(const CJet2& a, std::complex<double> c) {
  return {a.re * c.real() - a.im * c.imag(), a.re * c.imag() + a.im * c.real()};
}
inline CJet2 operator*(std::complex<double> c, const CJet2& a) { return a * c; }

inline CJet2 operator+(const CJet2& a, std::complex<double> c) {
  return {a.re + c.real(), a.im + c.imag()};
}
inline CJet2 operator+(std::complex<double> c, const CJet2& a) { return a + c; }
inline CJet2 operator-(const CJet2& a, std::complex<double> c) {
  return a + (-c);
}
inline CJet2 operator-(std::complex<double> c, const CJet2& a) {
  return (-a) + c;
}
inline CJet2 operator+(const CJet2& a, const Jet2& s) { return {a.re + s, a.im}; }
inline CJet2 operator+(const Jet2& s, const CJet2& a) { return a + s; }
inline CJet2 operator-(const CJet2& a, const Jet2& s) { return {a.re - s, a.im}; }
inline CJet2 operator-(const Jet2& s, const CJet2& a) { return (-a) + s; }

inline CJet2 conj(const CJet2& a) { return {a.re, -a.im}; }
inline Jet2 real(const CJet2& a) { return a.re; }
inline Jet2 imag(const CJet2& a) { return a.im; }
inline Jet2 abs2(const CJet2& a) { return a.re * a.re + a.im * a.im; }
inline double abs2(std::complex<double> a) { return std::norm(a); }

inline CJet2 inv(const CJet2& a) {
  Jet2 d = inv(abs2(a));
  return {a.re * d, -(a.im * d)};
}
inline CJet2 operator/(const CJet2& a, const CJet2& b) { return a * inv(b); }
inline CJet2 operator/(const CJet2& a, const Jet2& s) {
  Jet2 d = inv(s);
  return {a.re * d, a.im * d};
}
inline CJet2 operator/(const CJet2& a, double c) { return a * (1.0 / c); }
inline CJet2 operator/(std::complex<double> c, const CJet2& b) {
  return inv(b) * c;
}

inline CJet2 exp(const CJet2& a) {
  Jet2 m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

// principal branch, cut along the negative real axis
inline CJet2 log(const CJet2& a) {
  return {0.5 * log(abs2(a)), atan2(a.im, a.re)};
}

inline Jet2 arg(const CJet2& a) { return atan2(a.im, a.re); }

inline CJet2 sqrt(const CJet2& a) { return exp(log(a) * 0.5); }

// e^{i t} for real t; the winding phase primitive
inline CJet2 exp_i(const Jet2& t) { return {cos(t), sin(t)}; }
inline std::complex<double> exp_i(double t) { return {std::cos(t), std::sin(t)}; }

// seeds z_j -> variables (x_j, y_j) at indices (2j, 2j+1)
inline std::vector<CJet2> seed_point(const std::vector<std::complex<double>>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<CJet2> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    out.emplace_back(Jet2::variable(z[j].real(), 2 * n, 2 * j),
                     Jet2::variable(z[j].imag(), 2 * n, 2 * j + 1));
  }
  return out;
}

} // namespace dflab
