#pragma once

/**
 * @file chain.hpp
 * @brief Exact integer chain complexes: boundary matrices, the chain maps
 *        induced by simplicial self-maps, and Hopf-trace Lefschetz numbers.
 *
 * Conventions.  The ordered basis of the p-chains is the canonical simplex
 * order of the complex.  For a simplex written with increasing vertices,
 * the boundary is the alternating sum over vertex deletions with sign
 * (-1)^i on deleting the i-th vertex.  The chain map induced by a vertex map
 * sends a simplex to (sign of the sorting permutation) times its image
 * simplex, and to 0 when the image is degenerate.  Under these conventions
 * boundary-of-boundary vanishes and the chain-map square commutes; both are
 * verified on every construction.
 */

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/core.hpp"

namespace lefschetz {

/// Dense integer matrix, row-major.  Desk-scale complexes keep these tiny.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols != other.rows) throw_precondition("matrix dimension mismatch");
    IntMatrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const long long v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < other.cols; ++j)
          out.at(i, j) += v * other.at(k, j);
      }
    return out;
  }

  bool operator==(const IntMatrix& other) const {
    return rows == other.rows && cols == other.cols && a == other.a;
  }

  bool is_zero() const {
    for (long long v : a)
      if (v != 0) return false;
    return true;
  }

  long long trace() const {
    long long t = 0;
    const int n = rows < cols ? rows : cols;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
};

/// Sign of the permutation that sorts the sequence (+1/-1), by inversion
/// count; the caller guarantees distinct entries.
inline int sorting_sign(const std::vector<Vertex>& sequence) {
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/**
 * @brief The chain-level data of a complex: boundary matrices, and the
 *        induced chain maps when a simplicial self-map is attached.
 */
class ChainSystem {
 public:
  /// Boundary matrices only.
  explicit ChainSystem(ComplexPtr X) : X_(std::move(X)) {
    build_boundaries();
    verify_boundary_squares();
  }

  /// Boundary matrices plus the chain maps induced by phi.
  explicit ChainSystem(const VertexSelfMap& phi)
      : X_(phi.complex_ptr()), map_(phi) {
    phi.require_simplicial();
    build_boundaries();
    build_chain_maps();
    verify_boundary_squares();
    verify_chain_map_squares();
  }

  const SimplicialComplex& complex() const { return *X_; }
  const ComplexPtr& complex_ptr() const { return X_; }

  bool has_chain_map() const { return !chain_map_.empty(); }

  const VertexSelfMap& vertex_map() const {
    if (!map_) throw_precondition("chain system has no attached map");
    return *map_;
  }

  /// boundary(p): C_p -> C_{p-1}; boundary(0) is the zero map to the zero
  /// vector space (0 rows).
  const IntMatrix& boundary(int p) const { return boundary_.at(p); }

  const IntMatrix& chain_map(int p) const {
    if (!has_chain_map()) throw_precondition("chain system has no attached map");
    return chain_map_.at(p);
  }

  long long trace(int p) const { return chain_map(p).trace(); }

  /// Trace of the chain map in dimension p restricted to the cells of A:
  /// only diagonal entries at member simplices contribute.
  long long trace_over(const CellSet& A, int p) const {
    if (&A.complex() != X_.get())
      throw_precondition("cell set lives on a different complex");
    const IntMatrix& M = chain_map(p);
    long long t = 0;
    for (int i = 0; i < X_->num_cells(p); ++i)
      if (A.contains(p, i)) t += M.at(i, i);
    return t;
  }

  /// Alternating sum of restricted traces: the raw combinatorial Lefschetz
  /// number of the attached map over A (no compatibility checking here).
  long long lambda_restricted(const CellSet& A) const {
    long long lambda = 0;
    for (int p = 0; p <= X_->dim(); ++p) {
      const long long t = trace_over(A, p);
      lambda += (p % 2 == 0) ? t : -t;
    }
    return lambda;
  }

  /// Deterministic row-major dump of every matrix (debugging aid).
  std::string dump() const {
    std::string out;
    for (int p = 0; p <= X_->dim(); ++p) {
      out += "boundary[" + std::to_string(p) + "] (" +
             std::to_string(boundary_[p].rows) + "x" +
             std::to_string(boundary_[p].cols) + ")\n";
      out += dump_matrix(boundary_[p]);
    }
    if (has_chain_map())
      for (int p = 0; p <= X_->dim(); ++p) {
        out += "chain_map[" + std::to_string(p) + "] (" +
               std::to_string(chain_map_[p].rows) + "x" +
               std::to_string(chain_map_[p].cols) + ")\n";
        out += dump_matrix(chain_map_[p]);
      }
    return out;
  }

 private:
  static std::string dump_matrix(const IntMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
      for (int c = 0; c < m.cols; ++c) {
        if (c) out += ' ';
        out += std::to_string(m.at(r, c));
      }
      out += '\n';
    }
    if (m.rows == 0) out += "(empty)\n";
    return out;
  }

  void build_boundaries() {
    boundary_.clear();
    boundary_.push_back(IntMatrix(0, X_->num_cells(0)));
    for (int p = 1; p <= X_->dim(); ++p) {
      IntMatrix d(X_->num_cells(p - 1), X_->num_cells(p));
      for (int j = 0; j < X_->num_cells(p); ++j) {
        const Simplex& s = X_->cells(p)[j];
        Simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          int k = 0;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face[k++] = s[i];
          const int row = X_->index_of(face);
          d.at(row, j) = (drop % 2 == 0) ? 1 : -1;
        }
      }
      boundary_.push_back(std::move(d));
    }
  }

  void build_chain_maps() {
    chain_map_.clear();
    for (int p = 0; p <= X_->dim(); ++p) {
      IntMatrix M(X_->num_cells(p), X_->num_cells(p));
      for (int j = 0; j < X_->num_cells(p); ++j) {
        const Simplex& s = X_->cells(p)[j];
        std::vector<Vertex> raw_images;
        raw_images.reserve(s.size());
        for (Vertex v : s) raw_images.push_back((*map_)(v));
        const Simplex image = map_->image_simplex(s);
        if (image.size() != s.size()) continue;  // degenerate: zero column
        M.at(X_->index_of(image), j) = sorting_sign(raw_images);
      }
      chain_map_.push_back(std::move(M));
    }
  }

  void verify_boundary_squares() const {
    for (int p = 1; p < static_cast<int>(boundary_.size()) - 1; ++p)
      if (!(boundary_[p] * boundary_[p + 1]).is_zero())
        throw_property("boundary of boundary is nonzero in dimension " +
                       std::to_string(p + 1));
  }

  void verify_chain_map_squares() const {
    for (int p = 1; p <= X_->dim(); ++p) {
      const IntMatrix lhs = boundary_[p] * chain_map_[p];
      const IntMatrix rhs = chain_map_[p - 1] * boundary_[p];
      if (!(lhs == rhs))
        throw_property("chain map does not commute with the boundary in "
                       "dimension " + std::to_string(p));
    }
  }

  ComplexPtr X_;
  std::optional<VertexSelfMap> map_;
  std::vector<IntMatrix> boundary_;
  std::vector<IntMatrix> chain_map_;
};

/// Boundary matrices of a complex (no map attached).
inline ChainSystem boundary_system(ComplexPtr X) {
  return ChainSystem(std::move(X));
}

/// Chain maps induced by a simplicial vertex self-map (boundaries included).
inline ChainSystem induced_chain_map(const VertexSelfMap& phi) {
  return ChainSystem(phi);
}

/// Lefschetz number as the alternating sum of full chain traces.  By the
/// Hopf trace theorem this equals the homology-level alternating trace.
inline long long hopf_lefschetz(const ChainSystem& S) {
  long long lambda = 0;
  for (int p = 0; p <= S.complex().dim(); ++p) {
    const long long t = S.trace(p);
    lambda += (p % 2 == 0) ? t : -t;
  }
  return lambda;
}

}  // namespace lefschetz
