#pragma once

// su(2) structure of the two-dimensional search subspace spanned by the
// solution state |m> and the uniform start |sigma>: generators J1, J2, J3,
// the subspace projector P, the highest/lowest weight states, and the
// bridges between weight-basis spinors, even multivectors and real
// polarization vectors.
//
// All 2x2 matrices are written in the orthonormal basis {|m>, |m_perp>},
// with |m> = (1,0) and |sigma> = (|alpha| e^{i delta}, beta).

#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

#include "grover/cl3.hpp"

namespace grover::su2 {

using cplx = std::complex<double>;

// Row-major complex 2x2 matrix.
struct Mat2c {
  cplx a{}, b{};  // row 0
  cplx c{}, d{};  // row 1

  static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2c adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
};

inline Mat2c operator+(const Mat2c& x, const Mat2c& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
inline Mat2c operator-(const Mat2c& x, const Mat2c& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
inline Mat2c operator*(const Mat2c& x, const Mat2c& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
inline Mat2c operator*(cplx s, const Mat2c& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
inline Mat2c operator*(double s, const Mat2c& x) { return cplx(s, 0.0) * x; }

inline Mat2c commutator(const Mat2c& x, const Mat2c& y) { return x * y - y * x; }
inline Mat2c anticommutator(const Mat2c& x, const Mat2c& y) { return x * y + y * x; }

inline std::ostream& operator<<(std::ostream& os, const Mat2c& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

// max |entry|; the residual metric used by every operator identity test.
inline double max_abs(const Mat2c& x) {
  return std::max(std::max(std::abs(x.a), std::abs(x.b)),
                  std::max(std::abs(x.c), std::abs(x.d)));
}

// Complex two-component spinor. The basis the components refer to is fixed
// by whichever operation produced the value.
struct WeightSpinor {
  cplx up{}, down{};
};

inline cplx inner(const WeightSpinor& x, const WeightSpinor& y) {
  return std::conj(x.up) * y.up + std::conj(x.down) * y.down;
}
inline double norm(const WeightSpinor& x) { return std::sqrt(std::real(inner(x, x))); }

inline WeightSpinor apply(const Mat2c& m, const WeightSpinor& s) {
  return {m.a * s.up + m.b * s.down, m.c * s.up + m.d * s.down};
}

// Geometry of the overlap alpha = <sigma|m>: |alpha| = sin(theta/2), its
// phase delta, and beta = sqrt(1 - |alpha|^2). Degenerate overlaps
// (|alpha| = 0 or 1) are rejected; they break the 1/beta and 1/|alpha|
// factors in the generators.
struct OverlapGeometry {
  double alpha_mag;
  double delta;
  double beta;
  double theta;

  OverlapGeometry(double alpha_mag_, double delta_) : alpha_mag(alpha_mag_), delta(delta_) {
    if (!(alpha_mag > 0.0) || !(alpha_mag < 1.0) || !std::isfinite(delta)) {
      throw std::invalid_argument(
          "OverlapGeometry: degenerate search geometry, |alpha| must lie in (0,1)");
    }
    beta = std::sqrt(1.0 - alpha_mag * alpha_mag);
    theta = 2.0 * std::asin(alpha_mag);
  }
};

// Overlap of the uniform superposition over N items with M marked ones:
// |alpha| = sqrt(M/N), real (delta = 0) unless stated otherwise.
inline OverlapGeometry overlap_from_counts(std::size_t n_items, std::size_t n_solutions,
                                           double delta = 0.0) {
  if (n_items < 2 || n_solutions < 1 || n_solutions >= n_items) {
    throw std::invalid_argument("M must satisfy 1 <= M < N (got N=" + std::to_string(n_items) +
                                ", M=" + std::to_string(n_solutions) + ")");
  }
  return OverlapGeometry(std::sqrt(static_cast<double>(n_solutions) /
                                   static_cast<double>(n_items)),
                         delta);
}

namespace detail {

// |m> and |sigma> as kets in the {|m>, |m_perp>} basis.
inline WeightSpinor ket_m() { return {1.0, 0.0}; }
inline WeightSpinor ket_sigma(const OverlapGeometry& g) {
  return {std::polar(g.alpha_mag, g.delta), cplx(g.beta, 0.0)};
}

inline Mat2c outer(const WeightSpinor& x, const WeightSpinor& y) {  // |x><y|
  return {x.up * std::conj(y.up), x.up * std::conj(y.down),
          x.down * std::conj(y.up), x.down * std::conj(y.down)};
}

}  // namespace detail

struct Generators {
  Mat2c K, J1, J2, J3, P;
};

// Builds the generators from the projectors onto |sigma> and |m>. The
// overlap entering the formulas is <sigma|m>, whose phase is the negative
// of the phase carried by the |m>-component of |sigma|.
inline Generators build_generators(const OverlapGeometry& g) {
  const WeightSpinor m = detail::ket_m();
  const WeightSpinor s = detail::ket_sigma(g);
  const Mat2c pm = detail::outer(m, m);
  const Mat2c ps = detail::outer(s, s);
  const cplx alpha = inner(s, m);  // <sigma|m>
  const double am = g.alpha_mag;
  const double beta = g.beta;

  const Mat2c d = ps - pm;
  Generators out;
  out.P = (1.0 / (beta * beta)) * (d * d);
  out.K = (-beta * beta / 2.0) * out.P;
  out.J1 = (1.0 / (2.0 * am)) * (out.P - ps - pm);
  out.J2 = cplx(0.0, -1.0 / (2.0 * am * beta)) *
           (std::conj(alpha) * detail::outer(m, s) - alpha * detail::outer(s, m));
  out.J3 = (1.0 / (2.0 * beta)) * d;
  return out;
}

inline Mat2c j_plus(const Generators& gen) { return gen.J1 + cplx(0.0, 1.0) * gen.J2; }
inline Mat2c j_minus(const Generators& gen) { return gen.J1 - cplx(0.0, 1.0) * gen.J2; }

struct WeightStates {
  WeightSpinor up, down;  // components in {|m>, |m_perp>}
};

// Highest and lowest weight states, phase-fixed by their closed forms
//   |up>   = sec(theta/2) (sin(theta/4) |m> - e^{i d} cos(theta/4) |sigma>)
//   |down> = sec(theta/2) (cos(theta/4) |m> - e^{i d} sin(theta/4) |sigma>)
// with d the phase of <sigma|m>. They satisfy J3|up> = +1/2|up>,
// J3|down> = -1/2|down>, J+|up> = 0, J-|down> = 0.
inline WeightStates weight_states(const OverlapGeometry& g) {
  const double q = g.theta / 4.0;
  const cplx phase = std::polar(1.0, -g.delta);  // e^{i d}, d = phase of <sigma|m>
  const WeightSpinor s = detail::ket_sigma(g);
  const double sec = 1.0 / std::cos(g.theta / 2.0);

  WeightStates out;
  out.up = {sec * (std::sin(q) - phase * std::cos(q) * s.up),
            sec * (-phase * std::cos(q) * s.down)};
  out.down = {sec * (std::cos(q) - phase * std::sin(q) * s.up),
              sec * (-phase * std::sin(q) * s.down)};
  return out;
}

struct WeightBasisStates {
  WeightSpinor sigma, m, m_perp;  // components in {|up>, |down>}
};

// The defining states rewritten in the weight basis:
//   sigma  -> e^{-i delta} (-cos(theta/4), sin(theta/4))
//   m      -> (-sin(theta/4), cos(theta/4))
//   m_perp -> (cos(theta/4), sin(theta/4))
// Each matches the change-of-basis image of the defining state up to a
// global phase (the spinor sign is unobservable in the polarization map).
inline WeightBasisStates states_in_weight_basis(const OverlapGeometry& g) {
  const double q = g.theta / 4.0;
  const cplx phase = std::polar(1.0, -g.delta);
  WeightBasisStates out;
  out.sigma = {phase * cplx(-std::cos(q), 0.0), phase * cplx(std::sin(q), 0.0)};
  out.m = {cplx(-std::sin(q), 0.0), cplx(std::cos(q), 0.0)};
  out.m_perp = {cplx(std::cos(q), 0.0), cplx(std::sin(q), 0.0)};
  return out;
}

// Weight-basis matrix of the Grover operator -(I - 2|s><s|)(I - 2|m><m|):
// a real rotation by theta, independent of delta.
inline Mat2c grover_weight_matrix(const OverlapGeometry& g) {
  const double ct = std::cos(g.theta);
  const double st = std::sin(g.theta);
  return {ct, st, -st, ct};
}

// Weight-basis spinor of the general starting state
//   |gamma> = -e^{-i phi0/2} cos(theta0/4)|up> + e^{i phi0/2} sin(theta0/4)|down>,
// whose polarization is the general start vector (theta0, phi0).
inline WeightSpinor general_start_spinor(double theta0, double phi0) {
  return {-std::polar(1.0, -phi0 / 2.0) * std::cos(theta0 / 4.0),
          std::polar(1.0, phi0 / 2.0) * std::sin(theta0 / 4.0)};
}

// Re-express a weight-basis spinor in the {|m>, |m_perp>} basis.
inline WeightSpinor weight_to_m_basis(const OverlapGeometry& g, const WeightSpinor& s) {
  const WeightStates w = weight_states(g);
  return {s.up * w.up.up + s.down * w.down.up, s.up * w.up.down + s.down * w.down.down};
}

// Spinor -> even multivector: (a0 + i a3, -a2 + i a1) maps to
// a0 + a1 iota e1 + a2 iota e2 + a3 iota e3. Linear over the reals and
// invertible; iota e1 = e23, iota e2 = -e13, iota e3 = e12.
inline cl3::Multivector spinor_to_even(const WeightSpinor& s) {
  const double a0 = std::real(s.up);
  const double a3 = std::imag(s.up);
  const double a2 = -std::real(s.down);
  const double a1 = std::imag(s.down);
  cl3::Multivector m;
  m.c[cl3::kScalar] = a0;
  m.c[cl3::kE23] = a1;
  m.c[cl3::kE13] = -a2;
  m.c[cl3::kE12] = a3;
  return m;
}

inline WeightSpinor even_to_spinor(const cl3::Multivector& m) {
  if (m.c[cl3::kE1] != 0.0 || m.c[cl3::kE2] != 0.0 || m.c[cl3::kE3] != 0.0 ||
      m.c[cl3::kE123] != 0.0) {
    throw std::invalid_argument("even_to_spinor: multivector has odd-grade coefficients");
  }
  const double a0 = m.c[cl3::kScalar];
  const double a1 = m.c[cl3::kE23];
  const double a2 = -m.c[cl3::kE13];
  const double a3 = m.c[cl3::kE12];
  return {cplx(a0, a3), cplx(-a2, a1)};
}

// Polarization vector S = psi e3 psi~ of a unit even multivector; the
// Bloch-sphere point of the spinor psi represents.
inline cl3::Vector3 polarization(const cl3::Multivector& psi) {
  if (psi.c[cl3::kE1] != 0.0 || psi.c[cl3::kE2] != 0.0 || psi.c[cl3::kE3] != 0.0 ||
      psi.c[cl3::kE123] != 0.0) {
    throw std::invalid_argument("polarization: multivector has odd-grade coefficients");
  }
  const double nsq = psi.c[cl3::kScalar] * psi.c[cl3::kScalar] +
                     psi.c[cl3::kE12] * psi.c[cl3::kE12] +
                     psi.c[cl3::kE13] * psi.c[cl3::kE13] +
                     psi.c[cl3::kE23] * psi.c[cl3::kE23];
  if (std::abs(nsq - 1.0) > 1e-9) {
    throw std::invalid_argument("polarization: psi psi~ = " + std::to_string(nsq) +
                                ", expected 1 within 1e-9");
  }
  const cl3::Multivector e3 = cl3::Multivector::basis(cl3::kE3);
  return cl3::vector_part(geometric_product(geometric_product(psi, e3), reverse(psi)));
}

}  // namespace grover::su2
