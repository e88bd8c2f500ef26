/**
 * @file test_spaces_corpus.cpp
 * @brief Sanity of the builder corpus (Euler characteristics, homology,
 *        manifold conditions), builder determinism, the worked-example
 *        suite, paired triangulations, and the random generators.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lefschetz/homology.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/spaces.hpp"
#include "lefschetz/suite.hpp"

using namespace lefschetz;

namespace {

std::vector<int> betti_of(const ComplexPtr& X) {
  ChainSystem S = boundary_system(X);
  return betti(S);
}

/// Extracts NAME from an expectation key of the form "lambda[NAME]"; the
/// result names the matching entry of Fixture::subsets.
std::string subset_name(const std::string& key) {
  const auto open = key.find('[');
  if (open == std::string::npos || key.back() != ']') return key;
  return key.substr(open + 1, key.size() - open - 2);
}

/// Counts edges lying in one triangle (boundary) and in two (interior);
/// returns {-1,-1} when any edge has a non-manifold degree.
std::pair<int, int> edge_degrees(const ComplexPtr& X) {
  int deg1 = 0, deg2 = 0;
  for (const Simplex& e : X->cells(1)) {
    const int d = X->coface_count(e, 2);
    if (d == 1) ++deg1;
    else if (d == 2) ++deg2;
    else return {-1, -1};
  }
  return {deg1, deg2};
}

}  // namespace

TEST_CASE("closed surface builders", "[spaces]") {
  struct Row {
    ComplexPtr X;
    int chi;
    std::vector<int> betti;
  };
  const std::vector<Row> rows = {
      {torus_grid(3, 3), 0, {1, 2, 1}},
      {torus_grid(4, 5), 0, {1, 2, 1}},
      {klein_bottle_grid(4, 4), 0, {1, 1, 0}},
      {projective_plane(), 1, {1, 0, 0}},
      {sphere_complex(2), 2, {1, 0, 1}},
  };
  for (const Row& row : rows) {
    CHECK(row.X->euler() == row.chi);
    CHECK(row.X->connected());
    CHECK(row.X->pure(2));
    const auto [deg1, deg2] = edge_degrees(row.X);
    CHECK(deg1 == 0);  // closed: every edge in exactly two triangles
    CHECK(deg2 == row.X->num_cells(1));
    CHECK(betti_of(row.X) == row.betti);
  }
}

TEST_CASE("surfaces with boundary", "[spaces]") {
  for (const ComplexPtr& X : {cylinder_grid(4, 3), mobius_grid(5, 3),
                              disk_complex(5)}) {
    CHECK(X->connected());
    CHECK(X->pure(2));
    const auto [deg1, deg2] = edge_degrees(X);
    CHECK(deg1 > 0);
    CHECK(deg1 + deg2 == X->num_cells(1));
  }
  CHECK(betti_of(cylinder_grid(4, 3)) == std::vector<int>{1, 1, 0});
  CHECK(betti_of(mobius_grid(5, 3)) == std::vector<int>{1, 1, 0});
  CHECK(betti_of(disk_complex(5)) == std::vector<int>{1, 0, 0});
  CHECK(cylinder_grid(4, 3)->euler() == 0);
  CHECK(mobius_grid(5, 3)->euler() == 0);
  CHECK(disk_complex(5)->euler() == 1);
}

TEST_CASE("graph builders", "[spaces]") {
  CHECK(interval_complex(4)->euler() == 1);
  CHECK(circle_complex(7)->euler() == 0);
  CHECK(wedge_circles(3, 4)->euler() == -2);
  CHECK(betti_of(wedge_circles(3, 4)) == std::vector<int>{1, 3});
  CHECK(betti_of(sphere_complex(3)) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("builders are deterministic", "[spaces]") {
  CHECK(serialize_complex(*torus_grid(3, 3)) ==
        serialize_complex(*torus_grid(3, 3)));
  CHECK(serialize_complex(*klein_bottle_grid(4, 4)) ==
        serialize_complex(*klein_bottle_grid(4, 4)));
  Fixture a1 = annulus_with_slits(2, 3);
  Fixture a2 = annulus_with_slits(2, 3);
  CHECK(serialize_complex(a1.system.complex()) ==
        serialize_complex(a2.system.complex()));
  CHECK(serialize_map(a1.system.map()) == serialize_map(a2.system.map()));
  for (const auto& [name, cells] : a1.subsets)
    CHECK(serialize_cellset(cells) == serialize_cellset(a2.subsets.at(name)));
}

TEST_CASE("annulus fixture anatomy", "[spaces]") {
  Fixture annulus = annulus_with_slits(3, 3);
  const ComplexPtr X = annulus.system.complex_ptr();
  CHECK(X->connected());
  CHECK(X->pure(2));
  CHECK(X->euler() == 0);
  CHECK(betti_of(X) == std::vector<int>{1, 1, 0});
  CHECK(annulus.system.map().is_simplicial());
  // The slit sets are nested open sets: X ⊃ X1 ⊃ X2 ⊃ X3.
  const CellSet& X1 = annulus.subsets.at("X1");
  const CellSet& X2 = annulus.subsets.at("X2");
  const CellSet& X3 = annulus.subsets.at("X3");
  CHECK(X2.subset_of(X1));
  CHECK(X3.subset_of(X2));
  // Each removes one more invariant slit, and stays cell-compatible.
  CHECK(X1.size() < CellSet::full_set(X).size());
  CHECK(X2.size() < X1.size());
  CHECK(X3.size() < X2.size());
  for (const CellSet* A : {&X1, &X2, &X3})
    CHECK(check_compatibility(annulus.system, *A).compatible());
  // Every expected value in the table is reproduced by the engine.
  for (const auto& [key, expect] : annulus.expected) {
    CHECK(lambda_comb(annulus.system, annulus.subsets.at(subset_name(key))) ==
          expect.value);
  }
}

TEST_CASE("cone fixture anatomy", "[spaces]") {
  Fixture cone = cone_glued_cylinder();
  const ComplexPtr X = cone.system.complex_ptr();
  CHECK(X->connected());
  CHECK(X->pure(2));
  CHECK(cone.system.map().is_simplicial());
  CHECK(closure(cone.subsets.at("D")).is_subcomplex());
  for (const auto& [key, expect] : cone.expected)
    CHECK(lambda_comb(cone.system, cone.subsets.at(subset_name(key))) ==
          expect.value);
}

TEST_CASE("worked example suite passes", "[spaces]") {
  const std::vector<SuiteRow> rows = example_suite();
  CHECK(rows.size() >= 40);
  for (const SuiteRow& row : rows) {
    INFO(row.fixture << " / " << row.quantity << ": expected " << row.expected
                     << ", computed " << row.computed);
    CHECK(row.pass);
    CHECK(row.expected == row.computed);
    CHECK((row.provenance == "pinned" || row.provenance == "trivial" ||
           row.provenance == "derived"));
  }
  CHECK(suite_passes(rows));
}

TEST_CASE("paired triangulations agree", "[spaces]") {
  for (const std::string which : {"circle", "annulus", "punctured-torus"}) {
    const auto [coarse, fine] = paired_triangulations(which);
    INFO(which);
    // Different complexes, same answer for the matched subsets.
    CHECK(serialize_complex(coarse.system.complex()) !=
          serialize_complex(fine.system.complex()));
    for (const auto& [key, expect] : coarse.expected) {
      REQUIRE(fine.expected.count(key) == 1);
      const std::string name = subset_name(key);
      const long long coarse_value =
          lambda_comb(coarse.system, coarse.subsets.at(name));
      const long long fine_value =
          lambda_comb(fine.system, fine.subsets.at(name));
      CHECK(coarse_value == expect.value);
      CHECK(fine_value == fine.expected.at(key).value);
      CHECK(coarse_value == fine_value);
    }
  }
}

TEST_CASE("random complex generator", "[spaces]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexPtr X = random_complex(rng);
    CHECK(X->num_vertices() >= 1);
    CHECK(X->num_vertices() <= 7);
    CHECK(X->dim() <= 3);
    // Validity is enforced by construction; spot-check closure under faces.
    for (int p = 1; p <= X->dim(); ++p)
      for (const Simplex& s : X->cells(p))
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<long>(drop));
          CHECK(X->contains(face));
        }
  }

  // Seeded determinism.
  std::mt19937_64 rng_a(99), rng_b(99);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(serialize_complex(*random_complex(rng_a)) ==
          serialize_complex(*random_complex(rng_b)));
}

TEST_CASE("random self-maps are simplicial", "[spaces]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexPtr X = random_complex(rng);
    const VertexSelfMap phi = random_self_map(rng, X);
    CHECK(phi.is_simplicial());
  }
}

TEST_CASE("random cell sets land inside the complex", "[spaces]") {
  std::mt19937_64 rng(13);
  const ComplexPtr X = random_complex(rng);
  const CellSet A = random_cellset(rng, X);
  CHECK(A.size() <= X->total_cells());
  CHECK(A.subset_of(CellSet::full_set(X)));
}
