#pragma once

/**
 * @file unbounded.hpp
 * @brief Combinatorial Lefschetz numbers of maps of unbounded spaces via
 *        triangulated compactifications, the index at infinity, and the
 *        fixed-point certificates for graphs, surfaces, surfaces with
 *        boundary, and wedges of surfaces.
 *
 * The model: the user supplies a compact complex X (the compactification),
 * a simplicial self-map, and a closed invariant "corona" — the cells at
 * infinity.  U = X ∖ corona plays the role of the unbounded space, and
 * Λ_comb(f,U) = Λ(f,U)_X.  Since corona and U are swapped complements of
 * each other, trace additivity gives Λ(f,X) = Λ_comb(f,U) + Λ(f|corona)
 * identically, and for a one-vertex corona the index of the fixed point at
 * infinity is ind(∞) = Λ_comb(f,U) + 1.
 */

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/core.hpp"
#include "lefschetz/engine.hpp"

namespace lefschetz {

/// Result of coning off a link: the enlarged complex plus the apex token.
struct OnePointCompactification {
  ComplexPtr complex;
  std::string apex;
};

/**
 * @brief One-point compactification: cones a new apex vertex over every
 *        simplex of the given closed link.
 *
 * χ(result) = χ(K) + 1 − χ(link) by the cone formula.  The caller chooses
 * the corona afterwards (typically the apex alone, or the whole cone).
 */
inline OnePointCompactification one_point_compactify(
    ComplexPtr K, const CellSet& link_at_infinity,
    const std::string& apex_token = "inf") {
  if (&link_at_infinity.complex() != K.get())
    throw_precondition("link lives on a different complex");
  if (auto violation = link_at_infinity.subcomplex_violation())
    throw_precondition("link at infinity is not closed: " + *violation);
  if (K->has_vertex(apex_token))
    throw_precondition("apex token already used: " + apex_token);

  std::vector<std::vector<std::string>> simplices;
  for (int p = 0; p <= K->dim(); ++p)
    for (const Simplex& s : K->cells(p)) {
      std::vector<std::string> tokens;
      for (Vertex v : s) tokens.push_back(K->token(v));
      simplices.push_back(tokens);
    }
  simplices.push_back({apex_token});
  link_at_infinity.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    std::vector<std::string> tokens;
    for (Vertex v : s) tokens.push_back(K->token(v));
    tokens.push_back(apex_token);
    simplices.push_back(std::move(tokens));
  });
  return {build_complex(simplices), apex_token};
}

/**
 * @brief A self-map system on a compactification, split into corona and
 *        finite part.
 *
 * Construction verifies that the corona is a closed subcomplex and that both
 * the corona and its complement are preserved cell-by-cell.
 */
class CompactifiedSystem {
 public:
  CompactifiedSystem(SelfMapSystem system, CellSet corona)
      : system_(std::move(system)),
        corona_(std::move(corona)),
        finite_part_(cellset_complement(corona_)) {
    if (&corona_.complex() != &system_.complex())
      throw_precondition("corona lives on a different complex");
    if (auto violation = corona_.subcomplex_violation())
      throw_precondition("corona is not a subcomplex: " + *violation);
    const CompatibilityReport report = check_compatibility(system_, corona_);
    if (!report.a_preserved)
      throw_precondition("corona is not invariant: " +
                         report.violations.front());
    if (!report.complement_preserved)
      throw_precondition("finite part is not preserved: " +
                         report.violations.front());
  }

  const SelfMapSystem& system() const { return system_; }
  const CellSet& corona() const { return corona_; }
  const CellSet& finite_part() const { return finite_part_; }

 private:
  SelfMapSystem system_;
  CellSet corona_;
  CellSet finite_part_;
};

/// Λ_comb(f,U) = Λ(f,U)_X for U = complement of the corona.
inline long long lambda_comb_unbounded(const CompactifiedSystem& C) {
  return lambda_comb(C.system(), C.finite_part(), /*enforce=*/true);
}

/// Λ of the map restricted to the corona cells (used by additivity checks).
inline long long lambda_corona(const CompactifiedSystem& C) {
  return lambda_comb(C.system(), C.corona(), /*enforce=*/true);
}

/**
 * @brief Index of the isolated fixed point at infinity.
 *
 * Requires a one-vertex corona and no pointwise-fixed simplex in U (the
 * combinatorial proxy for "∞ is the only fixed point nearby"); cells that
 * are merely permuted are allowed.  Value: Λ_comb(f,U) + 1.
 */
inline long long index_at_infinity(const CompactifiedSystem& C) {
  if (C.corona().size() != 1 || euler_comb(C.corona()) != 1)
    throw_precondition("corona is not a single vertex");
  std::optional<std::string> fixed_in_u;
  C.finite_part().for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    if (!fixed_in_u && C.system().map().fixes_pointwise(s))
      fixed_in_u = C.system().complex().label(s);
  });
  if (fixed_in_u)
    throw_precondition(
        "fixed point at infinity is not isolated: pointwise-fixed cell " +
        *fixed_in_u + " in U");
  return lambda_comb_unbounded(C) + 1;
}

/**
 * @brief The space classes for which the certificate theorems are stated.
 *
 * Membership is caller-asserted; the machine verifies what it can
 * (dimension, connectivity of the compactification, purity, edge-triangle
 * incidence, Euler-characteristic conditions).  chi_list carries the
 * per-summand compact Euler characteristics for wedges of surfaces.
 */
struct SpaceClass {
  enum class Tag {
    GraphConnected,
    SurfaceNegChi,
    SurfaceWithBoundary,
    WedgeOfSurfaces
  };

  Tag tag = Tag::GraphConnected;
  std::vector<long long> chi_list;  // WedgeOfSurfaces only
};

inline const char* to_string(SpaceClass::Tag tag) {
  switch (tag) {
    case SpaceClass::Tag::GraphConnected:
      return "GraphConnected";
    case SpaceClass::Tag::SurfaceNegChi:
      return "SurfaceNegChi";
    case SpaceClass::Tag::SurfaceWithBoundary:
      return "SurfaceWithBoundary";
    default:
      return "WedgeOfSurfaces";
  }
}

/// Machine-checkable necessary conditions for the asserted class; returns a
/// failure description or nothing.
inline std::optional<std::string> check_space_class(
    const CompactifiedSystem& C, const SpaceClass& cls) {
  const SimplicialComplex& X = C.system().complex();
  switch (cls.tag) {
    case SpaceClass::Tag::GraphConnected: {
      if (X.dim() > 1)
        return std::string("graph class requires dimension at most 1");
      if (!X.connected())
        return std::string("graph class requires a connected compactification");
      return std::nullopt;
    }
    case SpaceClass::Tag::SurfaceNegChi:
    case SpaceClass::Tag::SurfaceWithBoundary: {
      if (!X.connected()) return std::string("surface must be connected");
      if (X.dim() != 2 || !X.pure(2))
        return std::string("surface must be purely 2-dimensional");
      int boundary_edges = 0;
      for (const Simplex& e : X.cells(1)) {
        const int degree = X.coface_count(e, 2);
        if (degree > 2 || degree == 0)
          return "edge " + X.label(e) + " lies in " + std::to_string(degree) +
                 " triangles";
        if (degree == 1) ++boundary_edges;
      }
      if (cls.tag == SpaceClass::Tag::SurfaceNegChi) {
        if (boundary_edges > 0)
          return std::string("closed surface class has boundary edges");
        if (X.euler() >= 0)
          return "closed surface class requires negative Euler "
                 "characteristic, got " + std::to_string(X.euler());
      } else if (boundary_edges == 0) {
        return std::string("surface-with-boundary class has empty boundary");
      }
      return std::nullopt;
    }
    case SpaceClass::Tag::WedgeOfSurfaces: {
      if (cls.chi_list.empty())
        return std::string("wedge class requires the per-summand chi list");
      long long sum = 0;
      for (long long chi : cls.chi_list) {
        if (chi > 0)
          return std::string(
              "wedge class requires non-positive summand Euler "
              "characteristics");
        sum += chi;
      }
      if (sum != euler_comb(C.finite_part()))
        return "chi list sums to " + std::to_string(sum) +
               " but euler_comb(U) = " +
               std::to_string(euler_comb(C.finite_part()));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

/**
 * @brief Fixed-point certificate for a self-map of an unbounded space,
 *        using the class-specific theorems.
 *
 * All four classes: Λ_comb(f,U) ≥ 1 forces a fixed point in the closure of
 * U.  Wedges of surfaces additionally: if every summand has χ_c = −1 (so the
 * list sums to −1) and Λ_comb < −2, a fixed point is forced as well.  With
 * assume_conjecture, the class checks are waived and a Λ_comb ≥ 1 verdict is
 * emitted with the conjectural label (the bound is conditional on an
 * unproven index bound for general collapses).
 */
inline Certificate certify_unbounded(const CompactifiedSystem& C,
                                     const SpaceClass& cls,
                                     bool assume_conjecture = false) {
  Certificate cert;
  cert.lambda_value = lambda_comb_unbounded(C);
  cert.conjectural = assume_conjecture;

  if (!assume_conjecture) {
    if (auto failure = check_space_class(C, cls)) {
      cert.verdict = Certificate::Verdict::PreconditionViolated;
      cert.justification = "space class check failed: " + *failure;
      return cert;
    }
  }

  const bool first_branch = cert.lambda_value >= 1;
  long long chi_sum = std::accumulate(cls.chi_list.begin(),
                                      cls.chi_list.end(), 0LL);
  const bool wedge_second_branch =
      !assume_conjecture && cls.tag == SpaceClass::Tag::WedgeOfSurfaces &&
      chi_sum == -1 && cert.lambda_value < -2;

  if (first_branch || wedge_second_branch) {
    cert.verdict = Certificate::Verdict::FixedPointInClosure;
    cert.justification =
        first_branch
            ? "combinatorial Lefschetz number of the finite part is at least 1"
            : "wedge summands have total compact Euler characteristic -1 and "
              "the combinatorial Lefschetz number is below -2";
    cert.witness = fixed_simplex_witness(C.system(), closure(C.finite_part()));
  } else {
    cert.verdict = Certificate::Verdict::NoGuarantee;
    cert.justification = "no certificate branch applies";
  }
  return cert;
}

/**
 * @brief Certificate for extensions: if the modeled map is fixed-point-free
 *        on U and Λ_comb(f,U) ≠ 0, every admissible extension to a
 *        compactification has a fixed point in the corona.
 *
 * Fixed-point-freeness on U is only proxied combinatorially (no
 * pointwise-fixed simplex in U); when the proxy fails an advisory is
 * attached and the corona arithmetic is still reported.  The witness is a
 * setwise-fixed corona simplex of this particular extension, when one
 * exists.
 */
inline Certificate certify_extension_fixed_point(const CompactifiedSystem& C) {
  Certificate cert;
  cert.lambda_value = lambda_comb_unbounded(C);

  std::optional<std::string> fixed_in_u;
  C.finite_part().for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    if (!fixed_in_u && C.system().map().fixes_pointwise(s))
      fixed_in_u = C.system().complex().label(s);
  });
  if (fixed_in_u)
    cert.advisories.push_back(
        "pointwise-fixed cell " + *fixed_in_u +
        " in U: the modeled map may not be fixed-point-free, the conclusion "
        "is conditional on fixed-point-freeness");

  if (cert.lambda_value != 0) {
    cert.verdict = Certificate::Verdict::FixedPointInClosure;
    cert.justification =
        "nonzero combinatorial Lefschetz number of a fixed-point-free map "
        "forces a fixed point of every admissible extension in the corona";
    cert.witness = fixed_simplex_witness(C.system(), C.corona());
  } else {
    cert.verdict = Certificate::Verdict::NoGuarantee;
    cert.justification = "combinatorial Lefschetz number vanishes";
  }
  return cert;
}

}  // namespace lefschetz
