#pragma once

/**
 * @file suite.hpp
 * @brief The worked-example suite: every fixture in the corpus together with
 *        its frozen expected value, recomputed on demand.
 *
 * Each row records where the expected number comes from:
 *  - "pinned":  a value frozen ahead of time for the exact fixture;
 *  - "trivial": an instance of a closed formula (e.g. Euler characteristic);
 *  - "derived": recomputed here from an independent construction.
 */

#include <string>
#include <vector>

#include "lefschetz/engine.hpp"
#include "lefschetz/spaces.hpp"
#include "lefschetz/torus.hpp"
#include "lefschetz/unbounded.hpp"

namespace lefschetz {

/// One line of the worked-example table.
struct SuiteRow {
  std::string fixture;
  std::string quantity;
  long long expected = 0;
  long long computed = 0;
  std::string provenance;
  bool pass = false;
};

/// Recomputes the whole worked-example table.
inline std::vector<SuiteRow> example_suite() {
  std::vector<SuiteRow> rows;
  auto push = [&rows](const std::string& fixture, const std::string& quantity,
                      long long expected, long long computed,
                      const std::string& provenance) {
    rows.push_back(
        {fixture, quantity, expected, computed, provenance,
         expected == computed});
  };

  // --- Interval: identity and the non-hypothesis approximation g0.
  {
    ComplexPtr X = interval_complex(1);
    SelfMapSystem id(VertexSelfMap::identity(X));
    CellSet open_edge(X);
    open_edge.insert(X->simplex_from_tokens({"0", "1"}));
    push("interval(1)/identity", "lambda[X]", 1,
         lambda_comb(id, CellSet::full_set(X)), "trivial");
    push("interval(1)/identity", "lambda[open]", -1,
         lambda_comb(id, open_edge), "pinned");
    SelfMapSystem g0(
        VertexSelfMap::from_token_pairs(X, {{"0", "0"}, {"1", "0"}}));
    push("interval(1)/g0", "lambda[open],unchecked", 0,
         lambda_comb(g0, open_edge, false), "pinned");
  }

  // --- Circle maps.
  {
    ComplexPtr X = circle_complex(3);
    push("circle(3)/rotation", "lambda[X]", 0,
         lambda_comb(SelfMapSystem(circle_rotation(X, 3)),
                     CellSet::full_set(X)),
         "pinned");
    push("circle(3)/reflection", "lambda[X]", 2,
         lambda_comb(SelfMapSystem(circle_reflection(X, 3)),
                     CellSet::full_set(X)),
         "pinned");
  }

  // --- Wedge of two circles, loop swap.
  {
    ComplexPtr X = wedge_circles(2, 3);
    push("wedge_circles(2,3)/swap", "lambda[X]", 1,
         lambda_comb(SelfMapSystem(wedge_loop_swap(X, 3)),
                     CellSet::full_set(X)),
         "pinned");
  }

  // --- Annulus with slits (both whole-space and per-slit values).
  {
    Fixture fixture = annulus_with_slits(4, 3);
    for (const auto& [quantity, expected] : fixture.expected) {
      const std::string subset =
          quantity.substr(quantity.find('[') + 1,
                          quantity.find(']') - quantity.find('[') - 1);
      push(fixture.name, quantity, expected.value,
           lambda_comb(fixture.system, fixture.subsets.at(subset)),
           expected.provenance);
    }
  }

  // --- Cone glued to a cylinder.
  {
    Fixture fixture = cone_glued_cylinder();
    for (const auto& [quantity, expected] : fixture.expected) {
      const std::string subset =
          quantity.substr(quantity.find('[') + 1,
                          quantity.find(']') - quantity.find('[') - 1);
      push(fixture.name, quantity, expected.value,
           lambda_comb(fixture.system, fixture.subsets.at(subset)),
           expected.provenance);
    }
  }

  // --- Relative and quotient bridges on small models.
  {
    ComplexPtr X = interval_complex(1);
    SelfMapSystem id(VertexSelfMap::identity(X));
    CellSet ends(X);
    ends.insert(X->simplex_from_tokens({"0"}));
    ends.insert(X->simplex_from_tokens({"1"}));
    push("interval(1)/identity", "relative[ends]", -1,
         relative_lefschetz(id, ends), "trivial");
  }
  {
    ComplexPtr X = interval_complex(2);
    SelfMapSystem id(VertexSelfMap::identity(X));
    CellSet ends(X);
    ends.insert(X->simplex_from_tokens({"0"}));
    ends.insert(X->simplex_from_tokens({"2"}));
    push("interval(2)/identity", "quotient[ends]", 0, quotient_lambda(id, ends),
         "derived");
  }

  // --- Torus linear algebra.
  push("torus_matrix[-I2]", "torus_lefschetz", 4,
       static_cast<long long>(torus_lefschetz(TorusMapMatrix::scalar(2, -1))),
       "pinned");
  push("torus_matrix[-I2]", "nielsen", 4,
       static_cast<long long>(torus_nielsen(TorusMapMatrix::scalar(2, -1))),
       "pinned");
  {
    ComplexPtr X = torus_grid(3, 3);
    push("torus_grid(3,3)/negation", "lambda[X]", 4,
         lambda_comb(SelfMapSystem(torus_negation(X, 3, 3)),
                     CellSet::full_set(X)),
         "derived");
  }

  // --- Triad lower bounds, direct and via the combinatorial number.
  push("triad[-I3,-I3,p=3]", "nielsen_bound", 13,
       static_cast<long long>(triad_lower_bound(TorusMapMatrix::scalar(3, -1),
                                                TorusMapMatrix::scalar(3, -1))
                                  .bound),
       "pinned");
  push("triad[-I2,-I2,p=2]", "nielsen_bound", 5,
       static_cast<long long>(triad_lower_bound(TorusMapMatrix::scalar(2, -1),
                                                TorusMapMatrix::scalar(2, -1))
                                  .bound),
       "pinned");
  push("triad[lambda=6,lambda_S=0]", "nielsen_bound_via_lambda", 5,
       static_cast<long long>(
           triad_bound_via_lambda(6, 0, TriadCase::PlusPlus)),
       "derived");
  push("triad[lambda=0,lambda_S=2]", "nielsen_bound_via_lambda", -3,
       static_cast<long long>(
           triad_bound_via_lambda(0, 2, TriadCase::MinusMinus)),
       "pinned");

  // --- Unbounded fixtures: combinatorial values and indices at infinity.
  {
    CompactifiedSystem plane = square_identity_boundary();
    push("square_identity_boundary", "lambda_comb[U]", 1,
         lambda_comb_unbounded(plane), "pinned");
  }
  {
    CompactifiedSystem sphere = translation_sphere();
    push("translation_sphere", "lambda_comb[U]", 1,
         lambda_comb_unbounded(sphere), "derived");
    push("translation_sphere", "index_at_infinity", 2,
         index_at_infinity(sphere), "pinned");
  }
  {
    CompactifiedSystem rotation = pinched_sphere_rotation();
    push("pinched_sphere_rotation", "lambda_comb[U]", 0,
         lambda_comb_unbounded(rotation), "derived");
    push("pinched_sphere_rotation", "index_at_infinity", 1,
         index_at_infinity(rotation), "derived");
  }
  {
    CompactifiedSystem line = line_identity_circle();
    push("line_identity_circle", "lambda_comb[U]", -1,
         lambda_comb_unbounded(line), "pinned");
  }
  {
    auto [A, B] = punctured_tori_pair();
    push("punctured_tori/disjoint", "lambda_comb[U]", 6,
         lambda_comb_unbounded(A), "pinned");
    push("punctured_tori/double_torus", "lambda_comb[U]", 6,
         lambda_comb_unbounded(B), "derived");
  }
  {
    CompactifiedSystem wedge = wedge_tori();
    push("wedge_tori", "lambda_comb[U]", 6, lambda_comb_unbounded(wedge),
         "derived");
  }
  {
    CompactifiedSystem both =
        figure_eight_at_infinity(FigureEightMap::BothReflected);
    push("figure_eight/both_reflected", "lambda_comb[U]", 2,
         lambda_comb_unbounded(both), "derived");
    CompactifiedSystem swap =
        figure_eight_at_infinity(FigureEightMap::LoopSwap);
    push("figure_eight/loop_swap", "lambda_comb[U]", 0,
         lambda_comb_unbounded(swap), "derived");
  }
  {
    CompactifiedSystem collapse = torus_collapse_conjectural();
    push("torus_collapse", "lambda_comb[U]", 2, lambda_comb_unbounded(collapse),
         "derived");
  }

  // --- Paired triangulations: the value is triangulation-independent.
  for (const std::string name : {"circle", "annulus", "punctured-torus"}) {
    auto [coarse, fine] = paired_triangulations(name);
    for (Fixture* fixture : {&coarse, &fine})
      for (const auto& [quantity, expected] : fixture->expected) {
        const std::string subset =
            quantity.substr(quantity.find('[') + 1,
                            quantity.find(']') - quantity.find('[') - 1);
        push(fixture->name, quantity, expected.value,
             lambda_comb(fixture->system, fixture->subsets.at(subset)),
             expected.provenance);
      }
  }

  return rows;
}

/// True when every row of the table reproduces its expected value.
inline bool suite_passes(const std::vector<SuiteRow>& rows) {
  for (const SuiteRow& row : rows)
    if (!row.pass) return false;
  return true;
}

}  // namespace lefschetz
