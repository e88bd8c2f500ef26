#pragma once

/**
 * @file subdivision.hpp
 * @brief Barycentric subdivision with carrier bookkeeping.
 *
 * The subdivided complex has one vertex per simplex of the original complex
 * and one simplex per chain (flag) of faces.  The carrier of a subdivided
 * cell is the largest element of its flag: the unique original open cell
 * whose interior contains the new cell's interior.  Carriers are what let a
 * cell set be transported to the subdivision: the open cells of the original
 * set pull back to the union of their carrier fibers, which preserves the
 * combinatorial Euler characteristic (the fiber over a p-cell has alternating
 * count (-1)^p).
 */

#include <string>
#include <utility>
#include <vector>

#include "lefschetz/core.hpp"

namespace lefschetz {

/// The subdivided complex plus the carrier map back to the original.
struct Subdivision {
  ComplexPtr original;
  ComplexPtr subdivided;
  /// carrier[p][i] = (q, j): the i-th p-cell of the subdivision sits inside
  /// the j-th q-cell of the original (q >= p).
  std::vector<std::vector<std::pair<int, int>>> carrier;

  /// Vertex token of the subdivision vertex at the barycenter of s.
  static std::string barycenter_token(const SimplicialComplex& X,
                                      const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += X.token(s[i]);
    }
    out += '}';
    return out;
  }
};

/**
 * @brief Barycentric subdivision of a complex.
 *
 * Deterministic: flags are enumerated in the canonical simplex order of the
 * original complex.
 */
inline Subdivision barycentric_subdivide(ComplexPtr X) {
  // Enumerate every flag (strictly increasing chain of faces).  A flag is
  // represented by the list of its member simplices, smallest first; the
  // subdivision simplex is the corresponding set of barycenter tokens.
  std::vector<std::vector<std::string>> flag_simplices;

  // Chains with a fixed top are built from chains whose top is a proper face.
  // Recursion bottoms out at single-element chains.
  struct FlagBuilder {
    const SimplicialComplex& X;
    std::vector<std::vector<std::string>>& out;
    std::vector<Simplex> current;

    void extend_below(const Simplex& top) {
      current.push_back(top);
      emit();
      const std::uint32_t subsets = 1u << top.size();
      for (std::uint32_t mask = 1; mask + 1 < subsets; ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < top.size(); ++i)
          if (mask & (1u << i)) face.push_back(top[i]);
        extend_below(face);
      }
      current.pop_back();
    }

    void emit() {
      std::vector<std::string> tokens;
      for (const Simplex& member : current)
        tokens.push_back(Subdivision::barycenter_token(X, member));
      out.push_back(std::move(tokens));
    }
  };

  FlagBuilder builder{*X, flag_simplices, {}};
  for (int p = 0; p <= X->dim(); ++p)
    for (const Simplex& s : X->cells(p)) builder.extend_below(s);

  Subdivision out;
  out.original = X;
  out.subdivided = build_complex(flag_simplices);

  // Carrier of a subdivision cell: the largest flag member, recovered from
  // the barycenter tokens.  Token -> original simplex via token list parsing
  // would be fragile; instead map subdivision vertex ids to original
  // simplices by name lookup built from the generation pass.
  std::map<std::string, Simplex> barycenter_of;
  for (int p = 0; p <= X->dim(); ++p)
    for (const Simplex& s : X->cells(p))
      barycenter_of[Subdivision::barycenter_token(*X, s)] = s;

  const SimplicialComplex& sd = *out.subdivided;
  out.carrier.resize(sd.dim() + 1);
  for (int p = 0; p <= sd.dim(); ++p) {
    out.carrier[p].resize(sd.cells(p).size());
    for (int i = 0; i < sd.num_cells(p); ++i) {
      const Simplex& cell = sd.cells(p)[i];
      const Simplex* top = nullptr;
      for (Vertex v : cell) {
        const Simplex& member = barycenter_of.at(sd.token(v));
        if (top == nullptr || member.size() > top->size()) top = &member;
      }
      out.carrier[p][i] = {static_cast<int>(top->size()) - 1,
                           X->index_of(*top)};
    }
  }
  return out;
}

/**
 * @brief Transports a cell set to the subdivision: the cells whose carrier
 *        belongs to A.  Preserves euler_comb exactly.
 */
inline CellSet subdivide_cellset(const Subdivision& S, const CellSet& A) {
  if (&A.complex() != S.original.get())
    throw_precondition("cell set does not live on the subdivided complex's "
                       "original");
  CellSet out(S.subdivided);
  const SimplicialComplex& sd = *S.subdivided;
  for (int p = 0; p <= sd.dim(); ++p)
    for (int i = 0; i < sd.num_cells(p); ++i) {
      const auto [q, j] = S.carrier[p][i];
      if (A.contains(q, j)) out.insert(p, i);
    }
  return out;
}

}  // namespace lefschetz
