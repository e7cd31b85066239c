#pragma once

// Brute-force reference for the search: the bra-ket Grover iteration applied
// to an explicit length-N complex amplitude vector. Every geometric-algebra
// prediction is validated against this.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace grover::sv {

using cplx = std::complex<double>;

// Sorted distinct solution indices in 0..N-1, with 1 <= M < N.
class SolutionSet {
 public:
  SolutionSet(std::vector<std::size_t> indices, std::size_t space_size)
      : indices_(std::move(indices)), space_size_(space_size) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
      throw std::invalid_argument("SolutionSet: duplicate solution index");
    }
    if (!indices_.empty() && indices_.back() >= space_size_) {
      throw std::invalid_argument("SolutionSet: solution index out of range");
    }
    if (indices_.empty() || indices_.size() >= space_size_) {
      throw std::invalid_argument("M must satisfy 1 <= M < N (got N=" +
                                  std::to_string(space_size_) +
                                  ", M=" + std::to_string(indices_.size()) + ")");
    }
  }

  // The first M indices of an N-element space.
  static SolutionSet first(std::size_t count, std::size_t space_size) {
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return SolutionSet(std::move(idx), space_size);
  }

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t count() const { return indices_.size(); }
  std::size_t space_size() const { return space_size_; }

 private:
  std::vector<std::size_t> indices_;
  std::size_t space_size_;
};

struct StateVector {
  std::vector<cplx> amp;

  std::size_t size() const { return amp.size(); }
};

inline double norm(const StateVector& s) {
  double n = 0.0;
  for (const cplx& a : s.amp) n += std::norm(a);
  return std::sqrt(n);
}

inline StateVector uniform_state(std::size_t n) {
  if (n < 2) throw std::invalid_argument("uniform_state: N must be >= 2");
  StateVector s;
  s.amp.assign(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  return s;
}

inline double success_probability(const StateVector& s, const SolutionSet& sol) {
  if (s.size() != sol.space_size()) {
    throw std::invalid_argument("success_probability: dimension mismatch");
  }
  double p = 0.0;
  for (std::size_t idx : sol.indices()) p += std::norm(s.amp[idx]);
  return p;
}

// One generalized Grover iteration
//   G = -(I - (1 - e^{i phi1})|sigma><sigma|)(I - (1 - e^{i phi2})|m><m|):
// phase the solution amplitudes by e^{i phi2}, apply the diffusion as a
// rank-1 update along the uniform state, negate. O(N).
inline StateVector grover_step(const StateVector& s, const SolutionSet& sol, double phi1,
                               double phi2) {
  const std::size_t n = sol.space_size();
  if (s.size() != n) throw std::invalid_argument("grover_step: dimension mismatch");

  StateVector out = s;
  const cplx oracle_phase = std::polar(1.0, phi2);
  for (std::size_t idx : sol.indices()) out.amp[idx] *= oracle_phase;

  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  cplx overlap = 0.0;  // <sigma|s'>
  for (const cplx& a : out.amp) overlap += a;
  overlap *= inv_sqrt_n;

  const cplx shift = (std::polar(1.0, phi1) - 1.0) * overlap * inv_sqrt_n;
  for (cplx& a : out.amp) a = -(a + shift);
  return out;
}

// State a_m |m> + a_perp |m_perp| as explicit amplitudes: a_m spread over the
// solution indices, a_perp over the rest.
inline StateVector state_in_plane(const SolutionSet& sol, cplx a_m, cplx a_perp) {
  const std::size_t n = sol.space_size();
  const std::size_t m = sol.count();
  StateVector s;
  s.amp.assign(n, a_perp / std::sqrt(static_cast<double>(n - m)));
  for (std::size_t idx : sol.indices()) s.amp[idx] = a_m / std::sqrt(static_cast<double>(m));
  return s;
}

// Generalized iteration -(I - (1 - e^{i phi1})|g><g|)(I - (1 - e^{i phi2})|m><m|)
// with the diffusion taken about an arbitrary unit state |g> instead of the
// uniform one; the general-start search uses its own start state here.
inline StateVector general_grover_step(const StateVector& s, const SolutionSet& sol,
                                       double phi1, double phi2, const StateVector& axis) {
  const std::size_t n = sol.space_size();
  if (s.size() != n || axis.size() != n) {
    throw std::invalid_argument("general_grover_step: dimension mismatch");
  }
  StateVector out = s;
  const cplx oracle_phase = std::polar(1.0, phi2);
  for (std::size_t idx : sol.indices()) out.amp[idx] *= oracle_phase;

  cplx overlap = 0.0;  // <g|s'>
  for (std::size_t i = 0; i < n; ++i) overlap += std::conj(axis.amp[i]) * out.amp[i];
  const cplx shift = (std::polar(1.0, phi1) - 1.0) * overlap;
  for (std::size_t i = 0; i < n; ++i) out.amp[i] = -(out.amp[i] + shift * axis.amp[i]);
  return out;
}

// Success probabilities after 0..k_steps iterations from the uniform state.
inline std::vector<double> run_search(std::size_t n, const SolutionSet& sol, double phi1,
                                      double phi2, long k_steps) {
  if (k_steps < 0) throw std::invalid_argument("run_search: k_steps must be >= 0");
  StateVector s = uniform_state(n);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_steps) + 1);
  out.push_back(success_probability(s, sol));
  for (long k = 0; k < k_steps; ++k) {
    s = grover_step(s, sol, phi1, phi2);
    out.push_back(success_probability(s, sol));
  }
  return out;
}

}  // namespace grover::sv
