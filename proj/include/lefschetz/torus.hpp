#pragma once

/**
 * @file torus.hpp
 * @brief Torus Lefschetz/Nielsen arithmetic and the triad lower bounds.
 *
 * A self-map of the p-torus is classified up to homotopy by the integer
 * matrix A it induces on first homology; its Lefschetz number is
 * det(I − A) and its Nielsen number is |det(I − A)|.  For a space made of
 * two p-tori glued along a (p−1)-sphere (p ≥ 3), the Nielsen-type triad
 * invariant is bounded below by N(f₁) + N(f₂) − 3, and two corollary routes
 * re-express that bound through Lefschetz numbers of the total space and of
 * the gluing sphere.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "lefschetz/core.hpp"

namespace lefschetz {

using BigInt = boost::multiprecision::cpp_int;

/// The integer matrix induced on first homology by a torus self-map.
struct TorusMapMatrix {
  int p = 0;                             // torus dimension
  std::vector<std::vector<BigInt>> a;    // p x p, row-major

  TorusMapMatrix() = default;

  TorusMapMatrix(int dimension, std::vector<std::vector<BigInt>> entries)
      : p(dimension), a(std::move(entries)) {
    if (p <= 0) throw_precondition("torus dimension must be positive");
    if (static_cast<int>(a.size()) != p)
      throw_precondition("matrix row count does not match p");
    for (const auto& row : a)
      if (static_cast<int>(row.size()) != p)
        throw_precondition("matrix column count does not match p");
  }

  static TorusMapMatrix scalar(int dimension, long long value) {
    std::vector<std::vector<BigInt>> entries(
        dimension, std::vector<BigInt>(dimension, 0));
    for (int i = 0; i < dimension; ++i) entries[i][i] = value;
    return TorusMapMatrix(dimension, std::move(entries));
  }
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt previous_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous_pivot;
    previous_pivot = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Λ(f) = det(I − A) for a torus self-map inducing A on first homology.
inline BigInt torus_lefschetz(const TorusMapMatrix& M) {
  std::vector<std::vector<BigInt>> id_minus_a = M.a;
  for (int i = 0; i < M.p; ++i)
    for (int j = 0; j < M.p; ++j) {
      id_minus_a[i][j] = -M.a[i][j];
      if (i == j) id_minus_a[i][j] += 1;
    }
  return determinant(std::move(id_minus_a));
}

/// N(f) = |det(I − A)| on the torus.
inline BigInt torus_nielsen(const TorusMapMatrix& M) {
  BigInt lambda = torus_lefschetz(M);
  return lambda < 0 ? BigInt(-lambda) : lambda;
}

/**
 * @brief Lower bound for the Nielsen-type number of a map of two p-tori
 *        glued along a (p−1)-sphere: N(f₁) + N(f₂) − 3.
 *
 * The derivation requires p ≥ 3 (the gluing sphere must be simply
 * connected); for smaller p the arithmetic is still returned with
 * requires_p_at_least_3 flagged false.
 */
struct TriadBound {
  BigInt bound;
  bool requires_p_at_least_3 = true;  // false: outside the theorem's range
};

inline TriadBound triad_lower_bound(const TorusMapMatrix& M1,
                                    const TorusMapMatrix& M2) {
  if (M1.p != M2.p)
    throw_precondition("triad tori must have equal dimension");
  TriadBound out;
  out.bound = torus_nielsen(M1) + torus_nielsen(M2) - 3;
  out.requires_p_at_least_3 = M1.p >= 3;
  return out;
}

/**
 * @brief The two corollary routes to the triad bound, expressed through
 *        Λ_total = Λ(f, total space) and Λ_S = Λ(f restricted to the gluing
 *        sphere).
 *
 * PlusPlus (both Nielsen numbers equal +Λ):  bound = Λ_total − Λ_S − 1.
 * MinusMinus (both equal −Λ):                bound = −Λ_total + Λ_S − 5.
 */
enum class TriadCase { PlusPlus, MinusMinus };

inline long long triad_bound_via_lambda(long long lambda_total,
                                        long long lambda_sphere,
                                        TriadCase triad_case) {
  if (triad_case == TriadCase::PlusPlus)
    return lambda_total - lambda_sphere - 1;
  return -lambda_total + lambda_sphere - 5;
}

}  // namespace lefschetz
