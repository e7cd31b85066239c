#pragma once

// Real Clifford algebra Cl(3,0): multivectors over the blade basis
// {1, e1, e2, e3, e12, e13, e23, e123}, geometric product, reversion,
// grade projection, bivector exponentials and rotor conjugation.
//
// Conventions fixed here and relied on everywhere else:
//   - storage order is lexicographic: 1, e1, e2, e3, e12, e13, e23, e123
//     (e13 stored as written, not e31);
//   - e_i^2 = +1, e_i e_j = -e_j e_i for i != j;
//   - the pseudoscalar iota = e1 e2 e3 commutes with everything and
//     squares to -1, so iota*v is the bivector dual of the vector v;
//   - a rotor R = exp(-iota*a/2) rotates right-handed by |a| about the
//     unit axis a/|a| via v' = R v R~.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace grover::cl3 {

enum Blade : int {
  kScalar = 0,
  kE1 = 1,
  kE2 = 2,
  kE3 = 3,
  kE12 = 4,
  kE13 = 5,
  kE23 = 6,
  kE123 = 7,
};

namespace detail {

// Storage index <-> basis-vector bitmask (bit0 = e1, bit1 = e2, bit2 = e3).
inline constexpr std::array<int, 8> kMaskOf = {0b000, 0b001, 0b010, 0b100,
                                               0b011, 0b101, 0b110, 0b111};
inline constexpr std::array<int, 8> kIndexOf = {0, 1, 2, 4, 3, 5, 6, 7};
inline constexpr std::array<int, 8> kGradeOf = {0, 1, 1, 1, 2, 2, 2, 3};

// Sign from reordering the concatenation of two canonical blades into
// canonical order (each basis vector squares to +1, distinct ones
// anticommute).
constexpr int reorder_sign(int a, int b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(static_cast<unsigned>(a & b));
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct ProductTable {
  std::array<std::array<std::int8_t, 8>, 8> sign{};
  std::array<std::array<std::uint8_t, 8>, 8> index{};
};

constexpr ProductTable make_product_table() {
  ProductTable t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int a = kMaskOf[static_cast<std::size_t>(i)];
      const int b = kMaskOf[static_cast<std::size_t>(j)];
      t.sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<std::int8_t>(reorder_sign(a, b));
      t.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>(kIndexOf[static_cast<std::size_t>(a ^ b)]);
    }
  }
  return t;
}

inline constexpr ProductTable kProduct = make_product_table();

}  // namespace detail

struct Multivector {
  // Coefficients in storage order 1, e1, e2, e3, e12, e13, e23, e123.
  std::array<double, 8> c{};

  static Multivector scalar(double s) {
    Multivector m;
    m.c[kScalar] = s;
    return m;
  }
  static Multivector basis(Blade b, double v = 1.0) {
    Multivector m;
    m.c[static_cast<std::size_t>(b)] = v;
    return m;
  }

  double scalar_part() const { return c[kScalar]; }

  Multivector& operator+=(const Multivector& o) {
    for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i)] += o.c[static_cast<std::size_t>(i)];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i)] -= o.c[static_cast<std::size_t>(i)];
    return *this;
  }
  Multivector& operator*=(double s) {
    for (double& v : c) v *= s;
    return *this;
  }
};

inline Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
inline Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
inline Multivector operator-(const Multivector& a) {
  Multivector m;
  for (int i = 0; i < 8; ++i) m.c[static_cast<std::size_t>(i)] = -a.c[static_cast<std::size_t>(i)];
  return m;
}
inline Multivector operator*(Multivector a, double s) { return a *= s; }
inline Multivector operator*(double s, Multivector a) { return a *= s; }

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
  Multivector out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.c[i] == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      out.c[detail::kProduct.index[i][j]] +=
          static_cast<double>(detail::kProduct.sign[i][j]) * a.c[i] * b.c[j];
    }
  }
  return out;
}

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

// Reversion: flips the factor order of every blade; in Cl(3,0) this negates
// the bivector and pseudoscalar coefficients.
inline Multivector reverse(const Multivector& a) {
  Multivector m = a;
  m.c[kE12] = -m.c[kE12];
  m.c[kE13] = -m.c[kE13];
  m.c[kE23] = -m.c[kE23];
  m.c[kE123] = -m.c[kE123];
  return m;
}

inline Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > 3) {
    throw std::invalid_argument("grade_project: grade index must be in 0..3, got " +
                                std::to_string(k));
  }
  Multivector m;
  for (std::size_t i = 0; i < 8; ++i) {
    if (detail::kGradeOf[i] == k) m.c[i] = a.c[i];
  }
  return m;
}

// Euclidean norm of the coefficient vector; equals sqrt(<a a~>_0) in Cl(3,0).
inline double norm(const Multivector& a) {
  double s = 0.0;
  for (double v : a.c) s += v * v;
  return std::sqrt(s);
}

struct Vector3 {
  double x = 0.0, y = 0.0, z = 0.0;  // components along e1, e2, e3

  Multivector to_multivector() const {
    Multivector m;
    m.c[kE1] = x;
    m.c[kE2] = y;
    m.c[kE3] = z;
    return m;
  }
};

inline Vector3 operator+(const Vector3& a, const Vector3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vector3 operator-(const Vector3& a, const Vector3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vector3 operator*(const Vector3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vector3 operator*(double s, const Vector3& a) { return a * s; }

inline double dot(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm(const Vector3& a) { return std::sqrt(dot(a, a)); }

// Grade-1 part of a multivector as a Vector3.
inline Vector3 vector_part(const Multivector& m) {
  return {m.c[kE1], m.c[kE2], m.c[kE3]};
}

// Bivector dual iota*v of a vector: v1 e23 - v2 e13 + v3 e12.
inline Multivector dual(const Vector3& v) {
  Multivector m;
  m.c[kE23] = v.x;
  m.c[kE13] = -v.y;
  m.c[kE12] = v.z;
  return m;
}

// Even-grade element of Cl(3,0); unit-norm rotors rotate vectors by
// conjugation. Closed under the geometric product.
struct Rotor {
  double s = 1.0;          // scalar part
  double b12 = 0.0, b13 = 0.0, b23 = 0.0;  // bivector part

  static Rotor identity() { return Rotor{}; }

  Multivector to_multivector() const {
    Multivector m;
    m.c[kScalar] = s;
    m.c[kE12] = b12;
    m.c[kE13] = b13;
    m.c[kE23] = b23;
    return m;
  }

  // R R~ is a pure scalar for even elements of Cl(3,0).
  double norm_sq() const { return s * s + b12 * b12 + b13 * b13 + b23 * b23; }
  double norm_drift() const { return std::abs(norm_sq() - 1.0); }

  Rotor reversed() const { return Rotor{s, -b12, -b13, -b23}; }

  Rotor normalized() const {
    const double n = std::sqrt(norm_sq());
    return Rotor{s / n, b12 / n, b13 / n, b23 / n};
  }
};

inline Rotor rotor_from_even(const Multivector& m) {
  if (m.c[kE1] != 0.0 || m.c[kE2] != 0.0 || m.c[kE3] != 0.0 || m.c[kE123] != 0.0) {
    throw std::invalid_argument("rotor_from_even: multivector has odd-grade coefficients");
  }
  return Rotor{m.c[kScalar], m.c[kE12], m.c[kE13], m.c[kE23]};
}

inline Rotor operator*(const Rotor& a, const Rotor& b) {
  return rotor_from_even(geometric_product(a.to_multivector(), b.to_multivector()));
}

inline Rotor operator-(const Rotor& a) { return Rotor{-a.s, -a.b12, -a.b13, -a.b23}; }

// exp(B) for a pure bivector B: cos|B| + (B/|B|) sin|B|, with |B| = sqrt(-B^2).
// Uses the series form of sin|B|/|B| near zero; exp(0) is the identity rotor.
inline Rotor exp_bivector(const Multivector& b) {
  if (b.c[kScalar] != 0.0 || b.c[kE1] != 0.0 || b.c[kE2] != 0.0 || b.c[kE3] != 0.0 ||
      b.c[kE123] != 0.0) {
    throw std::invalid_argument("exp_bivector: input has non-bivector coefficients");
  }
  const double m2 = b.c[kE12] * b.c[kE12] + b.c[kE13] * b.c[kE13] + b.c[kE23] * b.c[kE23];
  const double mag = std::sqrt(m2);
  double sinc;
  if (mag < 1e-6) {
    sinc = 1.0 - m2 / 6.0;
  } else {
    sinc = std::sin(mag) / mag;
  }
  return Rotor{std::cos(mag), sinc * b.c[kE12], sinc * b.c[kE13], sinc * b.c[kE23]};
}

// v' = R v R~. Demands a unit rotor; the result of conjugating a vector by a
// unit rotor is again a pure vector.
inline Vector3 rotate_vector(const Rotor& r, const Vector3& v) {
  if (r.norm_drift() > 1e-9) {
    throw std::invalid_argument("rotate_vector: rotor is not unit norm (|RR~ - 1| = " +
                                std::to_string(r.norm_drift()) + ")");
  }
  const Multivector rm = r.to_multivector();
  const Multivector out = geometric_product(geometric_product(rm, v.to_multivector()),
                                            reverse(rm));
  return vector_part(out);
}

}  // namespace grover::cl3
