#pragma once

/**
 * @file homology.hpp
 * @brief Rational homology with exact arithmetic: Betti numbers, induced maps
 *        on homology, and the homology-level Lefschetz number.
 *
 * This is the library's independent oracle.  The chain layer computes
 * Lefschetz numbers as alternating sums of chain-matrix traces; here the same
 * number is recomputed from first principles — kernel and image bases of the
 * boundary maps over the rationals, representatives of homology classes, the
 * matrix of the induced map on each homology group — so agreement between the
 * two routes is a genuine cross-check, not a tautology.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "lefschetz/chain.hpp"
#include "lefschetz/core.hpp"

namespace lefschetz {

using Rational = boost::multiprecision::cpp_rational;

/// Dense rational matrix, row-major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

  static RationalMatrix from(const IntMatrix& m) {
    RationalMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i];
    return out;
  }

  Rational& at(int r, int c) {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  const Rational& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  /// Appends the columns of another matrix with the same row count.
  void append_columns(const RationalMatrix& other) {
    if (rows != other.rows) throw_precondition("row count mismatch");
    RationalMatrix out(rows, cols + other.cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) out.at(r, c) = at(r, c);
      for (int c = 0; c < other.cols; ++c) out.at(r, cols + c) = other.at(r, c);
    }
    *this = std::move(out);
  }

  std::vector<Rational> column(int c) const {
    std::vector<Rational> col(rows);
    for (int r = 0; r < rows; ++r) col[r] = at(r, c);
    return col;
  }
};

/**
 * @brief In-place Gauss–Jordan reduction to reduced row echelon form.
 *
 * Pivot choice is the first nonzero entry in column order, so the reduction
 * is deterministic.  Returns the pivot column indices in row order.
 */
inline std::vector<int> reduce_to_rref(RationalMatrix& m) {
  std::vector<int> pivot_columns;
  int pivot_row = 0;
  for (int c = 0; c < m.cols && pivot_row < m.rows; ++c) {
    int row = -1;
    for (int r = pivot_row; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        row = r;
        break;
      }
    if (row == -1) continue;
    if (row != pivot_row)
      for (int cc = 0; cc < m.cols; ++cc)
        std::swap(m.at(row, cc), m.at(pivot_row, cc));
    const Rational inverse = Rational(1) / m.at(pivot_row, c);
    for (int cc = 0; cc < m.cols; ++cc) m.at(pivot_row, cc) *= inverse;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.at(r, c) == 0) continue;
      const Rational factor = m.at(r, c);
      for (int cc = 0; cc < m.cols; ++cc)
        m.at(r, cc) -= factor * m.at(pivot_row, cc);
    }
    pivot_columns.push_back(c);
    ++pivot_row;
  }
  return pivot_columns;
}

inline int rational_rank(RationalMatrix m) {
  return static_cast<int>(reduce_to_rref(m).size());
}

/// Basis of the kernel of m, one column per free variable, in column order.
inline RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const std::vector<int> pivots = reduce_to_rref(reduced);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  RationalMatrix basis(m.cols, m.cols - static_cast<int>(pivots.size()));
  int out_col = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(free_col, out_col) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      basis.at(pivots[pr], out_col) = -reduced.at(static_cast<int>(pr), free_col);
    ++out_col;
  }
  return basis;
}

/**
 * @brief Homology workspace for one dimension p: a basis of the cycle space
 *        split into boundary-space generators and homology representatives.
 */
struct HomologyBasis {
  RationalMatrix span;  // columns: boundary basis, then representatives
  int boundary_rank = 0;
  int betti = 0;
};

/// Chooses a basis of Z_p = ker(boundary_p) extending a basis of
/// B_p = im(boundary_{p+1}); the extension columns represent H_p.
inline HomologyBasis homology_basis(const ChainSystem& S, int p) {
  const int n_p = S.complex().num_cells(p);
  const RationalMatrix d_p = RationalMatrix::from(S.boundary(p));
  const RationalMatrix cycles = kernel_basis(d_p);

  RationalMatrix boundaries(n_p, 0);
  if (p + 1 <= S.complex().dim())
    boundaries = RationalMatrix::from(S.boundary(p + 1));

  // Column-reduce [boundaries | cycles]; pivots among the boundary columns
  // give a basis of B_p, pivots among the cycle columns extend it to Z_p.
  RationalMatrix combined = boundaries;
  combined.append_columns(cycles);
  RationalMatrix reduced = combined;
  const std::vector<int> pivots = reduce_to_rref(reduced);

  HomologyBasis out;
  std::vector<int> chosen;
  for (int c : pivots)
    if (c < boundaries.cols) ++out.boundary_rank;
  out.span = RationalMatrix(n_p, static_cast<int>(pivots.size()));
  int col = 0;
  for (int c : pivots) {
    for (int r = 0; r < n_p; ++r) out.span.at(r, col) = combined.at(r, c);
    ++col;
  }
  out.betti = static_cast<int>(pivots.size()) - out.boundary_rank;
  return out;
}

/// Rational Betti numbers b_0 .. b_dim via exact boundary ranks.
inline std::vector<int> betti(const ChainSystem& S) {
  const int dim = S.complex().dim();
  std::vector<int> ranks(dim + 2, 0);
  for (int p = 1; p <= dim; ++p)
    ranks[p] = rational_rank(RationalMatrix::from(S.boundary(p)));
  std::vector<int> out(dim + 1);
  for (int p = 0; p <= dim; ++p)
    out[p] = S.complex().num_cells(p) - ranks[p] - ranks[p + 1];
  return out;
}

/**
 * @brief Trace of the map induced on H_p by the attached simplicial map.
 *
 * Representatives h_i of H_p are chosen once; each image chain M_p·h_i is
 * re-expressed in the basis (boundary generators, representatives) by exact
 * elimination, and the diagonal coefficients are summed.  The result is an
 * integer because the induced map preserves the integral lattice; a
 * non-integral trace would indicate a bug and throws.
 */
inline long long homology_trace(const ChainSystem& S, int p) {
  const HomologyBasis basis = homology_basis(S, p);
  if (basis.betti == 0) return 0;

  const int n_p = S.complex().num_cells(p);
  const IntMatrix& M = S.chain_map(p);

  // Image of each representative under the chain map, as extra columns.
  RationalMatrix augmented = basis.span;
  RationalMatrix images(n_p, basis.betti);
  for (int k = 0; k < basis.betti; ++k) {
    const int rep_col = basis.boundary_rank + k;
    for (int r = 0; r < n_p; ++r) {
      Rational sum = 0;
      for (int c = 0; c < n_p; ++c) {
        const long long entry = M.at(r, c);
        if (entry != 0) sum += Rational(entry) * basis.span.at(c, rep_col);
      }
      images.at(r, k) = sum;
    }
  }
  augmented.append_columns(images);
  reduce_to_rref(augmented);

  // The span part has full column rank, so after reduction row j of each
  // image column holds its coefficient on the j-th basis vector.
  Rational trace = 0;
  for (int k = 0; k < basis.betti; ++k)
    trace += augmented.at(basis.boundary_rank + k, basis.span.cols + k);
  if (denominator(trace) != 1)
    throw_property("non-integral homology trace in dimension " +
                   std::to_string(p));
  return static_cast<long long>(numerator(trace));
}

/// Alternating sum of homology traces: the classical Lefschetz number and
/// the oracle value for hopf_lefschetz.
inline long long homology_lefschetz(const ChainSystem& S) {
  long long lambda = 0;
  for (int p = 0; p <= S.complex().dim(); ++p) {
    const long long t = homology_trace(S, p);
    lambda += (p % 2 == 0) ? t : -t;
  }
  return lambda;
}

}  // namespace lefschetz
