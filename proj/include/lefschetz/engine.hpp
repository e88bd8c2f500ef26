#pragma once

/**
 * @file engine.hpp
 * @brief The combinatorial Lefschetz number Λ(f,A)_X and its calculus:
 *        compatibility preconditions, additivity and decomposition,
 *        relative and quotient (cofibration) identities, the fixed-point
 *        index reading, and fixed-point certificates.
 *
 * Λ(f,A)_X is the alternating sum over dimensions p of the traces of the
 * induced chain matrices restricted to the open cells of A.  For arbitrary
 * cell sets this raw number depends on the chosen simplicial model; it is
 * well defined exactly when the map is cell-compatible with A (cells of A
 * map to cells of A, cells outside map outside).  The engine therefore
 * computes the raw trace only behind an explicit enforcement flag.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/chain.hpp"
#include "lefschetz/core.hpp"

namespace lefschetz {

/**
 * @brief A complex together with a simplicial self-map and its chain data.
 *
 * Construction fails (naming the offending simplex) when the vertex map is
 * not simplicial; afterwards the chain matrices are available and verified.
 */
class SelfMapSystem {
 public:
  explicit SelfMapSystem(VertexSelfMap phi)
      : phi_(std::move(phi)), chains_(phi_) {}

  const SimplicialComplex& complex() const { return phi_.complex(); }
  const ComplexPtr& complex_ptr() const { return phi_.complex_ptr(); }
  const VertexSelfMap& map() const { return phi_; }
  const ChainSystem& chains() const { return chains_; }

  /// Λ(f,X): the plain Lefschetz number of the self-map.
  long long lefschetz() const { return hopf_lefschetz(chains_); }

 private:
  VertexSelfMap phi_;
  ChainSystem chains_;
};

/**
 * @brief Result of the cell-compatibility check for a set A.
 *
 * a_preserved:     every cell of A has its image cell in A.
 * complement_preserved: every cell outside A has its image cell outside A.
 * nondegenerate_on_cells: the map is injective on the vertices of every
 *                  simplex of A (advisory; degeneracy alone does not make
 *                  the restricted trace ill-defined).
 * violations:      one entry per offending (cell, image cell) pair.
 */
struct CompatibilityReport {
  bool a_preserved = true;
  bool complement_preserved = true;
  bool nondegenerate_on_cells = true;
  std::vector<std::string> violations;

  bool compatible() const { return a_preserved && complement_preserved; }
};

/// Error carrying the report that caused an enforced operation to refuse.
class CompatibilityError : public Error {
 public:
  CompatibilityError(const std::string& message, CompatibilityReport report)
      : Error(Error::Kind::Precondition, message), report_(std::move(report)) {}

  const CompatibilityReport& report() const { return report_; }

 private:
  CompatibilityReport report_;
};

/// Checks cell-level compatibility of the system's map with A.
inline CompatibilityReport check_compatibility(const SelfMapSystem& S,
                                               const CellSet& A) {
  if (&A.complex() != &S.complex())
    throw_precondition("cell set lives on a different complex");
  CompatibilityReport report;
  const SimplicialComplex& X = S.complex();
  const CellSet full = CellSet::full_set(S.complex_ptr());
  full.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    const Simplex image = S.map().image_simplex(s);
    const bool in_a = A.contains(s);
    const bool image_in_a = A.contains(image);
    if (in_a && !image_in_a) {
      report.a_preserved = false;
      report.violations.push_back("cell " + X.label(s) + " in A maps onto " +
                                  X.label(image) + " outside A");
    }
    if (!in_a && image_in_a) {
      report.complement_preserved = false;
      report.violations.push_back("cell " + X.label(s) +
                                  " outside A maps onto " + X.label(image) +
                                  " inside A");
    }
    if (in_a && image.size() != s.size()) {
      report.nondegenerate_on_cells = false;
      report.violations.push_back("cell " + X.label(s) +
                                  " in A degenerates onto " + X.label(image));
    }
  });
  return report;
}

/**
 * @brief Λ(f,A)_X: alternating sum of the diagonal chain-matrix entries at
 *        the cells of A.
 *
 * @param enforce When true (the default everywhere else in the library),
 *        cell-compatibility is checked first and a CompatibilityError with
 *        the full report is thrown on failure.  When false, the raw
 *        restricted trace is returned; that number is model-dependent in
 *        general and exists to demonstrate exactly that.
 */
inline long long lambda_comb(const SelfMapSystem& S, const CellSet& A,
                             bool enforce = true) {
  if (enforce) {
    CompatibilityReport report = check_compatibility(S, A);
    if (!report.compatible()) {
      std::string message =
          "map is not cell-compatible with A: " + report.violations.front();
      throw CompatibilityError(std::move(message), std::move(report));
    }
  }
  return S.chains().lambda_restricted(A);
}

/**
 * @brief Both sides of the inclusion–exclusion identity
 *        Λ(f,A∪B) = Λ(f,A) + Λ(f,B) − Λ(f,A∩B).
 *
 * A and B must each be compatible; unions and intersections of compatible
 * sets are automatically compatible, so all four numbers are well defined.
 */
inline std::pair<long long, long long> lambda_comb_additive_check(
    const SelfMapSystem& S, const CellSet& A, const CellSet& B) {
  const long long lambda_a = lambda_comb(S, A);
  const long long lambda_b = lambda_comb(S, B);
  const long long lhs = lambda_comb(S, cellset_union(A, B));
  const long long rhs =
      lambda_a + lambda_b - lambda_comb(S, cellset_intersection(A, B));
  return {lhs, rhs};
}

/**
 * @brief The relative Lefschetz number Λ(f,(X,C)) for a closed invariant C,
 *        computed as Λ(f, X∖C)_X.
 */
inline long long relative_lefschetz(const SelfMapSystem& S, const CellSet& C) {
  if (auto violation = C.subcomplex_violation())
    throw_precondition("relative part is not a subcomplex: " + *violation);
  return lambda_comb(S, cellset_complement(C), /*enforce=*/true);
}

/**
 * @brief Λ of the induced map on the quotient X/A, computed at chain level.
 *
 * The positive-degree chains of X/A are the chains of X modulo those of A,
 * so the quotient traces are the complement-restricted traces; the extra
 * basepoint contributes +1.  No geometric quotient is built (the quotient of
 * a complex by a subcomplex need not be simplicial).
 *
 * Precondition: A is a subcomplex, the map sends A's cells ONTO A's cells
 * (surjectively — invariance of A alone does not suffice for the
 * cofibration identity), and the complement is preserved.
 */
inline long long quotient_lambda(const SelfMapSystem& S, const CellSet& A) {
  if (auto violation = A.subcomplex_violation())
    throw_precondition("quotient part is not a subcomplex: " + *violation);

  CellSet image(S.complex_ptr());
  A.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    image.insert(S.map().image_simplex(s));
  });
  if (!image.subset_of(A))
    throw_precondition("quotient part is not invariant: some cell of A maps "
                       "outside A");
  if (image != A)
    throw_precondition(
        "map is not surjective on the quotient part: invariance f(A) = A is "
        "required, f(A) inside A is not enough");
  const CompatibilityReport report = check_compatibility(S, A);
  if (!report.complement_preserved)
    throw CompatibilityError(
        "complement of the quotient part is not preserved: " +
            report.violations.front(),
        report);

  return 1 + S.chains().lambda_restricted(cellset_complement(A));
}

/**
 * @brief Fixed-point-index reading of Λ(f,U)_X for an open U.
 *
 * The value always equals lambda_comb(S,U).  It is certified as the
 * fixed-point index i(X,f,U) only when no simplex on the frontier
 * closure(U)∖U is pointwise fixed (the combinatorial proxy for "no fixed
 * points on the frontier"); otherwise the value is still reported with
 * certified = false and the offending frontier simplex named.
 */
struct IndexResult {
  long long value = 0;
  bool certified = true;
  std::optional<std::string> frontier_witness;
};

inline IndexResult index_via_lambda(const SelfMapSystem& S, const CellSet& U) {
  const CellSet complement = cellset_complement(U);
  if (auto violation = complement.subcomplex_violation())
    throw_precondition("U is not open: complement is not a subcomplex: " +
                       *violation);

  IndexResult out;
  out.value = lambda_comb(S, U, /*enforce=*/true);

  const CellSet frontier = cellset_difference(closure(U), U);
  frontier.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    if (!out.certified) return;
    if (S.map().fixes_pointwise(s)) {
      out.certified = false;
      out.frontier_witness = S.complex().label(s);
    }
  });
  return out;
}

/**
 * @brief A machine-checkable fixed-point statement.
 *
 * FixedPointInClosure: the (suitably compatible) realized map has a fixed
 * point in the closure of the realization of the queried set.  NoGuarantee:
 * the Lefschetz obstruction vanishes; nothing is claimed.
 * PreconditionViolated: the hypotheses could not be verified, diagnostics
 * attached.
 */
struct Certificate {
  enum class Verdict { FixedPointInClosure, NoGuarantee, PreconditionViolated };

  Verdict verdict = Verdict::NoGuarantee;
  long long lambda_value = 0;
  std::optional<std::string> witness;  // label of a setwise-fixed simplex
  std::string justification;
  bool conjectural = false;
  std::optional<CompatibilityReport> report;
  std::vector<std::string> advisories;
};

inline const char* to_string(Certificate::Verdict v) {
  switch (v) {
    case Certificate::Verdict::FixedPointInClosure:
      return "FixedPointInClosure";
    case Certificate::Verdict::NoGuarantee:
      return "NoGuarantee";
    default:
      return "PreconditionViolated";
  }
}

/// First setwise-fixed simplex of the given set, in canonical order.
inline std::optional<std::string> fixed_simplex_witness(const SelfMapSystem& S,
                                                        const CellSet& within) {
  std::optional<std::string> witness;
  within.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    if (!witness && S.map().fixes_setwise(s)) witness = S.complex().label(s);
  });
  return witness;
}

/**
 * @brief Fixed-point certificate for a compatible cell set.
 *
 * Λ(f,A)_X ≠ 0 forces a fixed point of the realized map in the closure of
 * |A|.  The witness, when present, is a setwise-fixed simplex (its affine
 * realization contains a fixed point by convexity); its absence does not
 * weaken the verdict.
 */
inline Certificate certify_fixed_point(const SelfMapSystem& S,
                                       const CellSet& A) {
  Certificate cert;
  CompatibilityReport report = check_compatibility(S, A);
  if (!report.compatible()) {
    cert.verdict = Certificate::Verdict::PreconditionViolated;
    cert.justification = "cell-compatibility with A failed";
    cert.report = std::move(report);
    return cert;
  }
  cert.lambda_value = S.chains().lambda_restricted(A);
  if (cert.lambda_value != 0) {
    cert.verdict = Certificate::Verdict::FixedPointInClosure;
    cert.justification =
        "nonzero combinatorial Lefschetz number over A forces a fixed point "
        "in the closure of A";
    cert.witness = fixed_simplex_witness(S, closure(A));
  } else {
    cert.verdict = Certificate::Verdict::NoGuarantee;
    cert.justification = "combinatorial Lefschetz number vanishes";
  }
  return cert;
}

/**
 * @brief Restricts a system to a closed invariant subcomplex, producing a
 *        stand-alone system on the extracted complex.
 *
 * For such A the restricted trace over A equals the Lefschetz number of the
 * restricted map (tested as the subcomplex-restriction identity).
 */
inline SelfMapSystem restrict_system(const SelfMapSystem& S,
                                     const CellSet& closed_invariant) {
  const ComplexPtr sub = subcomplex_of(closed_invariant);
  const SimplicialComplex& X = S.complex();
  std::vector<Vertex> img(sub->num_vertices());
  for (int v = 0; v < sub->num_vertices(); ++v) {
    const Vertex big_v = X.vertex_id(sub->token(v));
    const Vertex big_image = S.map()(big_v);
    if (!sub->has_vertex(X.token(big_image)))
      throw_precondition("subcomplex is not invariant: vertex " +
                         sub->token(v) + " maps outside");
    img[v] = sub->vertex_id(X.token(big_image));
  }
  return SelfMapSystem(VertexSelfMap(sub, std::move(img)));
}

}  // namespace lefschetz
