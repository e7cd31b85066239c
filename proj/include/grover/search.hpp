#pragma once

// Grover search as rotor precession in Cl(3,0).
//
// In the weight-basis picture the start state sigma, the solution m and its
// complement m_perp are unit vectors in the e1-e3 plane; one Grover
// iteration conjugates the polarization vector by a fixed rotor. Covers the
// standard search (phi1 = phi2 = pi), the phase-matched exact search
// (phi1 = phi2 = phi solved so the final state lands exactly on m) and the
// general exact search with an arbitrary starting polarization (theta0,
// phi0).
//
// Rotor sign convention: the product G_sigma G_m expands to
//   cos(p1/2)cos(p2/2) + cos(theta) sin(p1/2)sin(p2/2)
//   + sin((p1+p2)/2) sin(theta/2) iota e1
//   + sin(p1/2) sin(p2/2) sin(theta) iota e2
//   - cos(theta/2) sin((p1-p2)/2) iota e3
// which at phi1 = phi2 = pi equals the standard rotor e^{iota e2 theta} =
// -sigma m. We return that product as-is: a leading global minus would be
// unobservable under conjugation but would break the coefficient-level
// reduction to the standard rotor.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grover/cl3.hpp"

namespace grover {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Requested iteration count admits no real phase-matched solution.
class infeasible_phase_error : public std::domain_error {
 public:
  infeasible_phase_error(int requested, int min_feasible)
      : std::domain_error("no real phase solution for k_m = " + std::to_string(requested) +
                          "; minimal feasible k_m is " + std::to_string(min_feasible)),
        requested_(requested),
        min_feasible_(min_feasible) {}

  int requested() const { return requested_; }
  int min_feasible() const { return min_feasible_; }

 private:
  int requested_;
  int min_feasible_;
};

// Search problem: N items, M of them solutions, oracle/diffusion phases and
// an optional general starting polarization. Degenerate counts are rejected
// on construction.
struct SearchSpec {
  std::size_t n_items;
  std::size_t n_solutions;
  double phi1 = kPi;
  double phi2 = kPi;
  std::optional<double> start_theta0;
  std::optional<double> start_phi0;

  SearchSpec(std::size_t n, std::size_t m, double phi1_ = kPi, double phi2_ = kPi)
      : n_items(n), n_solutions(m), phi1(phi1_), phi2(phi2_) {
    if (n < 2 || m < 1 || m >= n) {
      throw std::invalid_argument("M must satisfy 1 <= M < N (got N=" + std::to_string(n) +
                                  ", M=" + std::to_string(m) + ")");
    }
    if (!std::isfinite(phi1) || !std::isfinite(phi2)) {
      throw std::invalid_argument("SearchSpec: phases must be finite");
    }
  }

  SearchSpec with_start(double theta0, double phi0) const {
    if (!(theta0 > 0.0) || !(theta0 < kPi) || !std::isfinite(phi0)) {
      throw std::invalid_argument("SearchSpec: theta0 must lie in (0, pi)");
    }
    SearchSpec s = *this;
    s.start_theta0 = theta0;
    s.start_phi0 = phi0;
    return s;
  }

  double theta() const {
    return 2.0 * std::asin(std::sqrt(static_cast<double>(n_solutions) /
                                     static_cast<double>(n_items)));
  }
};

struct CanonicalFrame {
  cl3::Vector3 sigma, m, m_perp;
};

// sigma = (-sin t/2, 0, cos t/2), m = (-sin t/2, 0, -cos t/2),
// m_perp = (sin t/2, 0, cos t/2).
inline CanonicalFrame canonical_vectors(double theta) {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  return {{-s, 0.0, c}, {-s, 0.0, -c}, {s, 0.0, c}};
}

inline double success_from_polarization(const cl3::Vector3& p, const cl3::Vector3& m) {
  return 0.5 * (1.0 + cl3::dot(p, m));
}

// Standard Grover rotor e^{iota e2 theta} = -sigma m; one application
// advances the polarization by 2 theta in the e3-e1 plane.
inline cl3::Rotor standard_rotor(double theta) {
  return cl3::exp_bivector(cl3::dual({0.0, 1.0, 0.0}) * theta);
}

// Oracle as a reflection: m v m (equal to m_perp v m_perp).
inline cl3::Vector3 oracle_reflect(const cl3::Vector3& v, double theta) {
  const cl3::Multivector m = canonical_vectors(theta).m.to_multivector();
  return cl3::vector_part(geometric_product(geometric_product(m, v.to_multivector()), m));
}

// Real-valued optimal iteration count pi/(2 theta) - 1/2 for the standard
// search; not rounded.
inline double iterations_standard(double theta) { return kPi / (2.0 * theta) - 0.5; }

// G_m = e^{iota (phi2/2)(sin(t/2) e1 + cos(t/2) e3)}: rotation by phi2 about
// the solution axis, clockwise seen from above e3.
inline cl3::Rotor oracle_rotor(double theta, double phi2) {
  const cl3::Vector3 axis{std::sin(theta / 2.0), 0.0, std::cos(theta / 2.0)};
  return cl3::exp_bivector(cl3::dual(axis) * (phi2 / 2.0));
}

// G_sigma = e^{-iota (phi1/2)(-sin(t/2) e1 + cos(t/2) e3)}: rotation about
// the start axis.
inline cl3::Rotor diffusion_rotor(double theta, double phi1) {
  const cl3::Vector3 axis{-std::sin(theta / 2.0), 0.0, std::cos(theta / 2.0)};
  return cl3::exp_bivector(cl3::dual(axis) * (-phi1 / 2.0));
}

// Exact-search rotor G_sigma G_m (see the sign note at the top of this
// header). Reduces to standard_rotor(theta) at phi1 = phi2 = pi.
inline cl3::Rotor exact_rotor(double theta, double phi1, double phi2) {
  return diffusion_rotor(theta, phi1) * oracle_rotor(theta, phi2);
}

// Precession axis sin(a) e1 + cos(a) e2 and per-iteration half-angle beta of
// the phase-matched rotor: sin(beta/2) = sin(t/2) sin(phi/2) and
// cot(a) = cos(t/2) tan(phi/2). The branch is fixed by the normalized form
// of the axis, cos(phi/2) e1 + cos(t/2) sin(phi/2) e2, which degrades
// gracefully to e2 at phi = pi (the standard search precession axis).
struct PrecessionAxis {
  double axis_alpha;
  double beta_rot;

  cl3::Vector3 axis() const { return {std::sin(axis_alpha), std::cos(axis_alpha), 0.0}; }
};

inline PrecessionAxis phase_matched_axis(double theta, double phi) {
  const double half_t = theta / 2.0;
  const double half_p = phi / 2.0;
  PrecessionAxis out;
  out.axis_alpha = std::atan2(std::cos(half_p), std::cos(half_t) * std::sin(half_p));
  out.beta_rot = 2.0 * std::asin(std::sin(half_t) * std::sin(half_p));
  return out;
}

namespace detail {
// Principal arccot with range (0, pi).
inline double arccot(double x) { return kPi / 2.0 - std::atan(x); }
}  // namespace detail

// Real iteration count of the phase-matched search with phase phi;
// equals iterations_standard(theta) at phi = pi, its minimum over phi.
inline double iterations_for_phase(double theta, double phi) {
  const double half_t = theta / 2.0;
  const double half_p = phi / 2.0;
  const double cot_p = std::cos(half_p) / std::sin(half_p);
  const double num = detail::arccot(
      std::sin(half_t) / std::sqrt(std::cos(half_t) * std::cos(half_t) + cot_p * cot_p));
  const double den = 2.0 * std::asin(std::sin(half_t) * std::sin(half_p));
  return num / den;
}

// Minimum integer iteration count ceil(pi/(2 theta) - 1/2), at least 1.
inline int k_min(double theta) {
  const double k = std::ceil(iterations_standard(theta));
  return k < 1.0 ? 1 : static_cast<int>(k);
}

// Phase phi in (0, pi] making the search exact after km iterations:
// sin(phi/2) = sin(pi/(4 km + 2)) / sin(theta/2). Throws when km is too
// small for a real solution.
inline double solve_exact_phase(double theta, int km) {
  if (km < 1) throw infeasible_phase_error(km, k_min(theta));
  double arg = std::sin(kPi / (4.0 * km + 2.0)) / std::sin(theta / 2.0);
  if (arg > 1.0) {
    if (arg < 1.0 + 1e-12) {
      arg = 1.0;
    } else {
      throw infeasible_phase_error(km, k_min(theta));
    }
  }
  return 2.0 * std::asin(arg);
}

// Starting polarization for the general search:
// (-sin(t0/2) cos(p0), -sin(t0/2) sin(p0), cos(t0/2)); phi0 = 0 recovers the
// canonical sigma at theta0.
inline cl3::Vector3 general_start_vector(double theta0, double phi0) {
  const double s = std::sin(theta0 / 2.0);
  return {-s * std::cos(phi0), -s * std::sin(phi0), std::cos(theta0 / 2.0)};
}

// G_gamma = e^{-iota gamma phi1/2}: the diffusion rotation taken about the
// general start vector gamma.
inline cl3::Rotor start_rotor(const cl3::Vector3& gamma, double phi1) {
  return cl3::exp_bivector(cl3::dual(gamma) * (-phi1 / 2.0));
}

// G_gamma G_m for the general exact search; falls back to
// exact_rotor(theta, phi1, phi2) when no general start is set (the start
// vector is then the canonical sigma).
inline cl3::Rotor general_exact_rotor(const SearchSpec& spec) {
  const double theta = spec.theta();
  const cl3::Vector3 gamma =
      spec.start_theta0 ? general_start_vector(*spec.start_theta0, spec.start_phi0.value_or(0.0))
                        : canonical_vectors(theta).sigma;
  return start_rotor(gamma, spec.phi1) * oracle_rotor(theta, spec.phi2);
}

// Closed-form polarization after k phase-matched iterations from the
// canonical start, as functions of the precession axis (a, b) and theta.
inline cl3::Vector3 closed_form_polarization(double theta, const PrecessionAxis& ax, long k) {
  const double st = std::sin(theta / 2.0);
  const double ct = std::cos(theta / 2.0);
  const double sa = std::sin(ax.axis_alpha);
  const double ca = std::cos(ax.axis_alpha);
  const double sin2a = 2.0 * sa * ca;
  const double c2 = std::cos(2.0 * ax.beta_rot * static_cast<double>(k));
  const double s2 = std::sin(2.0 * ax.beta_rot * static_cast<double>(k));
  return {
      -(sa * sa * st + st * ca * ca * c2 + ca * ct * s2),
      -0.5 * st * sin2a + 0.5 * sin2a * st * c2 + ct * sa * s2,
      ct * c2 - ca * st * s2,
  };
}

struct TrajectoryPoint {
  long k = 0;
  cl3::Vector3 polarization;
  double success_prob = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  double max_norm_drift = 0.0;        // worst | |P| - 1 | seen before renormalizing
  double max_closed_form_gap = 0.0;   // worst componentwise gap to the closed form
};

struct TrajectoryOptions {
  // Cross-check every step against the closed form when it applies
  // (phase-matched phases, canonical start).
  bool check_closed_form = true;
  double closed_form_tol = 1e-9;
  // Renormalize the polarization when accumulated drift exceeds this;
  // drift is recorded either way.
  double renorm_threshold = 1e-9;
};

// Iterated rotor conjugation from the spec's start vector. Entry k holds the
// polarization after k iterations and its success probability
// (1 + P.m)/2.
inline Trajectory run_trajectory(const SearchSpec& spec, long k_steps,
                                 const TrajectoryOptions& opt = {}) {
  if (k_steps < 0) throw std::invalid_argument("run_trajectory: k_steps must be >= 0");
  const double theta = spec.theta();
  const CanonicalFrame frame = canonical_vectors(theta);
  const cl3::Rotor g = general_exact_rotor(spec);

  const bool canonical_start =
      !spec.start_theta0 ||
      (*spec.start_theta0 == theta && spec.start_phi0.value_or(0.0) == 0.0);
  const bool phase_matched = spec.phi1 == spec.phi2;
  const bool check = opt.check_closed_form && canonical_start && phase_matched;
  const PrecessionAxis ax = check ? phase_matched_axis(theta, spec.phi1) : PrecessionAxis{};

  cl3::Vector3 p = spec.start_theta0
                       ? general_start_vector(*spec.start_theta0, spec.start_phi0.value_or(0.0))
                       : frame.sigma;

  Trajectory out;
  out.points.reserve(static_cast<std::size_t>(k_steps) + 1);
  for (long k = 0; k <= k_steps; ++k) {
    if (k > 0) {
      p = cl3::rotate_vector(g, p);
      const double drift = std::abs(cl3::norm(p) - 1.0);
      if (drift > out.max_norm_drift) out.max_norm_drift = drift;
      if (drift > opt.renorm_threshold) p = p * (1.0 / cl3::norm(p));
    }
    if (check) {
      const cl3::Vector3 ref = closed_form_polarization(theta, ax, k);
      const double gap = std::max(std::max(std::abs(p.x - ref.x), std::abs(p.y - ref.y)),
                                  std::abs(p.z - ref.z));
      if (gap > out.max_closed_form_gap) out.max_closed_form_gap = gap;
      if (gap > opt.closed_form_tol) {
        throw std::runtime_error(
            "run_trajectory: stepwise polarization departs from the closed form at k=" +
            std::to_string(k) + " by " + std::to_string(gap));
      }
    }
    out.points.push_back({k, p, success_from_polarization(p, frame.m)});
  }
  return out;
}

}  // namespace grover
