#pragma once

/**
 * @file spaces.hpp
 * @brief Deterministic builders for the corpus of spaces, self-maps, and
 *        compactified systems used by the example suite and the tests,
 *        plus seeded random generators for property-based testing.
 *
 * Geometry conventions used by several builders:
 *  - Grid complexes triangulate squares either with the main diagonal
 *    (from (i,j) to (i+1,j+1)) or with a center vertex and four triangles.
 *    The centered variant is symmetric under all reflections and quarter
 *    turns of the square pattern, which is what makes the involution maps
 *    below simplicial.
 *  - Torus negation (i,j) -> (-i,-j) is simplicial on the main-diagonal
 *    grid because it maps the edge-direction set {±e1, ±e2, ±(e1+e2)} to
 *    itself and swaps lower and upper triangles of squares.
 */

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/core.hpp"
#include "lefschetz/engine.hpp"
#include "lefschetz/unbounded.hpp"

namespace lefschetz {

// ---------------------------------------------------------------------------
// Plain complexes.
// ---------------------------------------------------------------------------

/// Path with n edges on vertices "0".."n".
inline ComplexPtr interval_complex(int n) {
  if (n < 1) throw_precondition("interval needs at least one edge");
  std::vector<std::vector<std::string>> simplices;
  for (int i = 0; i < n; ++i)
    simplices.push_back({std::to_string(i), std::to_string(i + 1)});
  return build_complex(simplices);
}

/// n-gon on vertices "0".."n-1" (n >= 3).
inline ComplexPtr circle_complex(int n) {
  if (n < 3) throw_precondition("circle needs at least 3 vertices");
  std::vector<std::vector<std::string>> simplices;
  for (int i = 0; i < n; ++i)
    simplices.push_back({std::to_string(i), std::to_string((i + 1) % n)});
  return build_complex(simplices);
}

/// Token of the j-th interior vertex of loop i in a wedge of circles.
inline std::string wedge_loop_token(int loop, int j) {
  return "l" + std::to_string(loop) + "_" + std::to_string(j);
}

/// k circles of n edges each, sharing the hub vertex "w" (n >= 3).
inline ComplexPtr wedge_circles(int k, int n) {
  if (k < 1) throw_precondition("wedge needs at least one circle");
  if (n < 3) throw_precondition("wedge loops need at least 3 edges");
  std::vector<std::vector<std::string>> simplices;
  for (int loop = 0; loop < k; ++loop) {
    simplices.push_back({"w", wedge_loop_token(loop, 1)});
    for (int j = 1; j + 1 < n; ++j)
      simplices.push_back(
          {wedge_loop_token(loop, j), wedge_loop_token(loop, j + 1)});
    simplices.push_back({wedge_loop_token(loop, n - 1), "w"});
  }
  return build_complex(simplices);
}

/// Boundary of the (d+1)-simplex on vertices "0".."d+1".
inline ComplexPtr sphere_complex(int d) {
  if (d < 0) throw_precondition("sphere dimension must be non-negative");
  std::vector<std::vector<std::string>> simplices;
  const int vertices = d + 2;
  for (int omit = 0; omit < vertices; ++omit) {
    std::vector<std::string> facet;
    for (int v = 0; v < vertices; ++v)
      if (v != omit) facet.push_back(std::to_string(v));
    simplices.push_back(std::move(facet));
  }
  return build_complex(simplices);
}

/// Cone over the n-gon: triangles {"c", i, i+1}.
inline ComplexPtr disk_complex(int n) {
  if (n < 3) throw_precondition("disk needs at least 3 boundary vertices");
  std::vector<std::vector<std::string>> simplices;
  for (int i = 0; i < n; ++i)
    simplices.push_back(
        {"c", std::to_string(i), std::to_string((i + 1) % n)});
  return build_complex(simplices);
}

// ---------------------------------------------------------------------------
// Grid surfaces.
// ---------------------------------------------------------------------------

inline std::string grid_token(const std::string& prefix, int i, int j) {
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

/// Main-diagonal torus grid: m x n vertices with both directions wrapped.
inline ComplexPtr torus_grid(int m, int n, const std::string& prefix = "v") {
  if (m < 3 || n < 3) throw_precondition("torus grid needs m, n >= 3");
  std::vector<std::vector<std::string>> simplices;
  auto V = [&](int i, int j) {
    return grid_token(prefix, ((i % m) + m) % m, ((j % n) + n) % n);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      simplices.push_back({V(i, j), V(i + 1, j), V(i + 1, j + 1)});
      simplices.push_back({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
    }
  return build_complex(simplices);
}

/// Klein bottle: horizontal wrap straight, vertical wrap with a flip.
inline ComplexPtr klein_bottle_grid(int m, int n,
                                    const std::string& prefix = "v") {
  if (m < 3 || n < 3) throw_precondition("Klein grid needs m, n >= 3");
  std::vector<std::vector<std::string>> simplices;
  auto V = [&](int i, int j) {
    i = ((i % m) + m) % m;
    if (j == n) return grid_token(prefix, (m - i) % m, 0);
    return grid_token(prefix, i, j);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      simplices.push_back({V(i, j), V(i + 1, j), V(i + 1, j + 1)});
      simplices.push_back({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
    }
  return build_complex(simplices);
}

/// The minimal 6-vertex projective plane (10 triangles, 15 edges).
inline ComplexPtr projective_plane() {
  return build_complex({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"},
                        {"1", "4", "6"}, {"1", "5", "6"}, {"2", "3", "6"},
                        {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "5"},
                        {"3", "4", "6"}});
}

/// Cylinder: m-gon circle times a path with n edges.
inline ComplexPtr cylinder_grid(int m, int n, const std::string& prefix = "v") {
  if (m < 3 || n < 1) throw_precondition("cylinder needs m >= 3, n >= 1");
  std::vector<std::vector<std::string>> simplices;
  auto V = [&](int i, int j) { return grid_token(prefix, ((i % m) + m) % m, j); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      simplices.push_back({V(i, j), V(i + 1, j), V(i + 1, j + 1)});
      simplices.push_back({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
    }
  return build_complex(simplices);
}

/// Moebius strip: a length-m strip of width n glued end-to-end with a flip.
inline ComplexPtr mobius_grid(int m, int n, const std::string& prefix = "v") {
  if (m < 3 || n < 1) throw_precondition("Moebius grid needs m >= 3, n >= 1");
  std::vector<std::vector<std::string>> simplices;
  auto V = [&](int i, int j) {
    if (i == m) return grid_token(prefix, 0, n - j);
    return grid_token(prefix, i, j);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      simplices.push_back({V(i, j), V(i + 1, j), V(i + 1, j + 1)});
      simplices.push_back({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
    }
  return build_complex(simplices);
}

// ---------------------------------------------------------------------------
// Corpus maps on the plain complexes.
// ---------------------------------------------------------------------------

/// Rotation of the n-gon by one step.
inline VertexSelfMap circle_rotation(const ComplexPtr& circle, int n) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    pairs.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
  return VertexSelfMap::from_token_pairs(circle, pairs);
}

/// Reflection of the n-gon fixing vertex 0 (degree -1).
inline VertexSelfMap circle_reflection(const ComplexPtr& circle, int n) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    pairs.emplace_back(std::to_string(i), std::to_string((n - i) % n));
  return VertexSelfMap::from_token_pairs(circle, pairs);
}

/// Swap of the two loops of a wedge (requires k = 2).
inline VertexSelfMap wedge_loop_swap(const ComplexPtr& wedge, int n) {
  std::vector<std::pair<std::string, std::string>> pairs{{"w", "w"}};
  for (int j = 1; j < n; ++j) {
    pairs.emplace_back(wedge_loop_token(0, j), wedge_loop_token(1, j));
    pairs.emplace_back(wedge_loop_token(1, j), wedge_loop_token(0, j));
  }
  return VertexSelfMap::from_token_pairs(wedge, pairs);
}

/// Reflection of every loop of a wedge, fixing the hub.
inline VertexSelfMap wedge_reflection(const ComplexPtr& wedge, int k, int n) {
  std::vector<std::pair<std::string, std::string>> pairs{{"w", "w"}};
  for (int loop = 0; loop < k; ++loop)
    for (int j = 1; j < n; ++j)
      pairs.emplace_back(wedge_loop_token(loop, j),
                         wedge_loop_token(loop, n - j));
  return VertexSelfMap::from_token_pairs(wedge, pairs);
}

/// Torus negation (i,j) -> (-i,-j) on a torus_grid(m,n).
inline VertexSelfMap torus_negation(const ComplexPtr& torus, int m, int n,
                                    const std::string& prefix = "v") {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      pairs.emplace_back(grid_token(prefix, i, j),
                         grid_token(prefix, (m - i) % m, (n - j) % n));
  return VertexSelfMap::from_token_pairs(torus, pairs);
}

// ---------------------------------------------------------------------------
// Fixtures: systems with named subsets and expected values.
// ---------------------------------------------------------------------------

/// An expected integer with its provenance ("pinned" values are the worked
/// results the suite must reproduce; "trivial"/"derived" label how the
/// remaining oracle values were obtained).
struct ExpectedValue {
  long long value = 0;
  std::string provenance;  // "pinned" | "trivial" | "derived"
};

/// A named system plus named cell sets and the expected lambda_comb values
/// over them (key convention: "lambda[<subset>]").
struct Fixture {
  std::string name;
  SelfMapSystem system;
  std::map<std::string, CellSet> subsets;
  std::map<std::string, ExpectedValue> expected;
};

/**
 * @brief The slit-annulus fixture.
 *
 * An annulus with n+2 angular sectors and `resolution` radial layers
 * (resolution must be divisible by 3, matching the documented interface of
 * the modeled fold), triangulated with centered squares.  The map is the
 * radial involution that swaps the two boundary circles and preserves every
 * radial ray; X_i removes the open radial segments of the first i rays.
 *
 * Values: Λ(f,X) = 0 and Λ(f,X_i) = −i; every removed open segment is
 * invariant and carries restricted trace +1 (the flipped middle edge for an
 * odd number of layers, the fixed middle vertex for an even number).
 */
inline Fixture annulus_with_slits(int n, int resolution) {
  if (n < 1) throw_precondition("annulus fixture needs at least one slit");
  if (resolution < 3 || resolution % 3 != 0)
    throw_precondition("annulus resolution must be a positive multiple of 3");
  const int m = n + 2;  // angular sectors: slits at distinct rays plus slack
  const int R = resolution;

  std::vector<std::vector<std::string>> simplices;
  auto ring = [&](int a, int j) { return grid_token("r", ((a % m) + m) % m, j); };
  auto center = [&](int a, int b) {
    return grid_token("z", ((a % m) + m) % m, b);
  };
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < R; ++j) {
      const std::string z = center(a, j);
      simplices.push_back({ring(a, j), ring(a + 1, j), z});
      simplices.push_back({ring(a + 1, j), ring(a + 1, j + 1), z});
      simplices.push_back({ring(a + 1, j + 1), ring(a, j + 1), z});
      simplices.push_back({ring(a, j + 1), ring(a, j), z});
    }
  ComplexPtr X = build_complex(simplices);

  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j <= R; ++j) pairs.emplace_back(ring(a, j), ring(a, R - j));
    for (int b = 0; b < R; ++b)
      pairs.emplace_back(center(a, b), center(a, R - 1 - b));
  }
  SelfMapSystem system(VertexSelfMap::from_token_pairs(X, pairs));

  Fixture fixture{"annulus_with_slits(" + std::to_string(n) + "," +
                      std::to_string(R) + ")",
                  std::move(system),
                  {},
                  {}};

  const CellSet full = CellSet::full_set(X);
  fixture.subsets.emplace("X", full);
  fixture.expected["lambda[X]"] = {0, "pinned"};

  // Closed ray 0 (used by tests for the per-ray value 1).
  CellSet ray(X);
  for (int j = 0; j <= R; ++j) ray.insert(X->simplex_from_tokens({ring(0, j)}));
  for (int j = 0; j < R; ++j)
    ray.insert(X->simplex_from_tokens({ring(0, j), ring(0, j + 1)}));
  fixture.subsets.emplace("ray0", ray);
  fixture.expected["lambda[ray0]"] = {1, "derived"};

  CellSet removed(X);
  for (int i = 1; i <= n; ++i) {
    const int a = i - 1;
    for (int j = 1; j < R; ++j)
      removed.insert(X->simplex_from_tokens({ring(a, j)}));
    for (int j = 0; j < R; ++j)
      removed.insert(X->simplex_from_tokens({ring(a, j), ring(a, j + 1)}));
    fixture.subsets.emplace("X" + std::to_string(i),
                            cellset_difference(full, removed));
    fixture.expected["lambda[X" + std::to_string(i) + "]"] = {-i, "pinned"};
  }
  return fixture;
}

/**
 * @brief Cone glued to a cylinder: a 4-gon cylinder with three circle layers,
 *        coned off at a single apex over both boundary circles (a pinched
 *        sphere), carrying the half-turn that swaps top and bottom.
 *
 * The map reflects the angular coordinate and flips the cylinder
 * vertically; it fixes the apex and exactly two vertices of the middle
 * circle.  Values: Λ(f,X) = 3, Λ(f|D,D) = 2 for the cylinder D,
 * Λ over the two boundary circles = 0, and Λ(f|S,S) = 2 for the middle
 * circle S.
 */
inline Fixture cone_glued_cylinder() {
  const int m = 4;
  std::vector<std::vector<std::string>> simplices;
  auto ring = [&](int a, int j) { return grid_token("r", ((a % m) + m) % m, j); };
  auto center = [&](int a, int b) {
    return grid_token("z", ((a % m) + m) % m, b);
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::string z = center(a, b);
      simplices.push_back({ring(a, b), ring(a + 1, b), z});
      simplices.push_back({ring(a + 1, b), ring(a + 1, b + 1), z});
      simplices.push_back({ring(a + 1, b + 1), ring(a, b + 1), z});
      simplices.push_back({ring(a, b + 1), ring(a, b), z});
    }
  for (int a = 0; a < m; ++a) {
    simplices.push_back({"c", ring(a, 0), ring(a + 1, 0)});
    simplices.push_back({"c", ring(a, 2), ring(a + 1, 2)});
  }
  ComplexPtr X = build_complex(simplices);

  std::vector<std::pair<std::string, std::string>> pairs{{"c", "c"}};
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j <= 2; ++j)
      pairs.emplace_back(ring(a, j), ring((m - a) % m, 2 - j));
    for (int b = 0; b < 2; ++b)
      pairs.emplace_back(center(a, b), center((m - a - 1 + m) % m, 1 - b));
  }
  SelfMapSystem system(VertexSelfMap::from_token_pairs(X, pairs));

  Fixture fixture{"cone_glued_cylinder", std::move(system), {}, {}};
  const CellSet full = CellSet::full_set(X);
  fixture.subsets.emplace("X", full);

  // D: every cell not touching the apex (the closed cylinder).
  CellSet cone_part(X);
  const Vertex apex = X->vertex_id("c");
  full.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    if (std::find(s.begin(), s.end(), apex) != s.end()) cone_part.insert(s);
  });
  fixture.subsets.emplace("D", cellset_complement(cone_part));
  fixture.subsets.emplace("cone_open", cone_part);

  CellSet boundary_circles(X);
  CellSet middle_circle(X);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j <= 2; ++j) {
      const Simplex v = X->simplex_from_tokens({ring(a, j)});
      const Simplex e = X->simplex_from_tokens({ring(a, j), ring(a + 1, j)});
      if (j == 1) {
        middle_circle.insert(v);
        middle_circle.insert(e);
      } else {
        boundary_circles.insert(v);
        boundary_circles.insert(e);
      }
    }
  fixture.subsets.emplace("TB", boundary_circles);
  fixture.subsets.emplace("S", middle_circle);

  fixture.expected["lambda[X]"] = {3, "pinned"};
  fixture.expected["lambda[D]"] = {2, "pinned"};
  fixture.expected["lambda[TB]"] = {0, "pinned"};
  fixture.expected["lambda[S]"] = {2, "pinned"};
  return fixture;
}

// ---------------------------------------------------------------------------
// Compactified systems.
// ---------------------------------------------------------------------------

/// Identity on a 3x3 square grid with the boundary as corona; Λ_comb = 1.
inline CompactifiedSystem square_identity_boundary() {
  std::vector<std::vector<std::string>> simplices;
  auto V = [&](int i, int j) { return grid_token("g", i, j); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      simplices.push_back({V(i, j), V(i + 1, j), V(i + 1, j + 1)});
      simplices.push_back({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
    }
  ComplexPtr X = build_complex(simplices);
  SelfMapSystem system(VertexSelfMap::identity(X));

  CellSet corona(X);
  for (int p = 0; p <= 1; ++p)
    for (const Simplex& s : X->cells(p)) {
      bool on_boundary = true;
      for (Vertex v : s) {
        const std::string& token = X->token(v);
        // Interior vertices are exactly g1_1 on the 3x3 grid.
        if (token == "g1_1") on_boundary = false;
      }
      // An edge is on the boundary when it joins two boundary vertices and
      // lies in only one triangle.
      if (p == 1 && X->coface_count(s, 2) != 1) on_boundary = false;
      if (on_boundary) corona.insert(s);
    }
  return CompactifiedSystem(std::move(system), std::move(corona));
}

/**
 * @brief Translation-class sphere model: a quartered disk whose half-turn
 *        has no fixed vertices, one-point compactified at "inf".
 *
 * The disk is the square p0 p1 p2 p3 split along the diagonal {p0, p2}; the
 * half-turn flips that diagonal setwise.  On the sphere the map fixes only
 * the cells {inf} and {p0 p2}, so Λ(f,X) = 2, Λ_comb(f,U) = 1, and the
 * fixed point at infinity is isolated with index 2.
 */
inline CompactifiedSystem translation_sphere() {
  ComplexPtr disk = build_complex({{"p0", "p1", "p2"}, {"p0", "p2", "p3"}});
  CellSet boundary(disk);
  boundary.insert(disk->simplex_from_tokens({"p0"}));
  boundary.insert(disk->simplex_from_tokens({"p1"}));
  boundary.insert(disk->simplex_from_tokens({"p2"}));
  boundary.insert(disk->simplex_from_tokens({"p3"}));
  boundary.insert(disk->simplex_from_tokens({"p0", "p1"}));
  boundary.insert(disk->simplex_from_tokens({"p1", "p2"}));
  boundary.insert(disk->simplex_from_tokens({"p2", "p3"}));
  boundary.insert(disk->simplex_from_tokens({"p0", "p3"}));
  const OnePointCompactification sphere =
      one_point_compactify(disk, boundary, "inf");

  SelfMapSystem system(VertexSelfMap::from_token_pairs(
      sphere.complex, {{"p0", "p2"},
                       {"p1", "p3"},
                       {"p2", "p0"},
                       {"p3", "p1"},
                       {"inf", "inf"}}));
  CellSet corona(sphere.complex);
  corona.insert(sphere.complex->simplex_from_tokens({"inf"}));
  return CompactifiedSystem(std::move(system), std::move(corona));
}

/// The cone_glued_cylinder complex with a free one-step rotation: only the
/// apex is fixed, Λ_comb(f,U) = 0 and ind(∞) = 1.
inline CompactifiedSystem pinched_sphere_rotation() {
  const int m = 4;
  Fixture base = cone_glued_cylinder();
  const ComplexPtr X = base.system.complex_ptr();
  std::vector<std::pair<std::string, std::string>> pairs{{"c", "c"}};
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j <= 2; ++j)
      pairs.emplace_back(grid_token("r", a, j),
                         grid_token("r", (a + 1) % m, j));
    for (int b = 0; b < 2; ++b)
      pairs.emplace_back(grid_token("z", a, b),
                         grid_token("z", (a + 1) % m, b));
  }
  SelfMapSystem system(VertexSelfMap::from_token_pairs(X, pairs));
  CellSet corona(X);
  corona.insert(X->simplex_from_tokens({"c"}));
  return CompactifiedSystem(std::move(system), std::move(corona));
}

/// A path one-point compactified into a circle, carrying the identity:
/// the degenerate stand-in for a line model whose corona is one vertex.
inline CompactifiedSystem line_identity_circle() {
  ComplexPtr path = interval_complex(2);
  CellSet ends(path);
  ends.insert(path->simplex_from_tokens({"0"}));
  ends.insert(path->simplex_from_tokens({"2"}));
  const OnePointCompactification circle =
      one_point_compactify(path, ends, "inf");
  SelfMapSystem system(VertexSelfMap::identity(circle.complex));
  CellSet corona(circle.complex);
  corona.insert(circle.complex->simplex_from_tokens({"inf"}));
  return CompactifiedSystem(std::move(system), std::move(corona));
}

/// Figure-eight (two hexagon loops) with the hub as corona.
enum class FigureEightMap { BothReflected, LoopSwap };

inline CompactifiedSystem figure_eight_at_infinity(FigureEightMap kind) {
  const int n = 6;
  ComplexPtr X = wedge_circles(2, n);
  VertexSelfMap phi = kind == FigureEightMap::BothReflected
                          ? wedge_reflection(X, 2, n)
                          : wedge_loop_swap(X, n);
  SelfMapSystem system(std::move(phi));
  CellSet corona(X);
  corona.insert(X->simplex_from_tokens({"w"}));
  return CompactifiedSystem(std::move(system), std::move(corona));
}

namespace spaces_detail {

/// Simplices of a torus grid minus the open star of one vertex, with the
/// hexagonal link of that vertex renamed to shared tokens ("q<i>_<j>").
/// Used to glue two negation-symmetric tori into a double torus.
inline std::vector<std::vector<std::string>> punctured_torus_sheet(
    int size, int hole_i, int hole_j, const std::string& prefix) {
  const int m = size;
  ComplexPtr torus = torus_grid(m, m, prefix);
  const Vertex hole =
      torus->vertex_id(grid_token(prefix, hole_i, hole_j));

  // Link vertices of the hole: its six grid neighbours.
  std::vector<std::vector<std::string>> out;
  for (int p = 0; p <= torus->dim(); ++p)
    for (const Simplex& s : torus->cells(p)) {
      if (std::find(s.begin(), s.end(), hole) != s.end()) continue;
      if (p < torus->dim()) {
        // Skip non-maximal cells: faces regenerate on build.
        if (torus->coface_count(s, p + 1) > 0) continue;
      }
      std::vector<std::string> tokens;
      for (Vertex v : s) tokens.push_back(torus->token(v));
      out.push_back(std::move(tokens));
    }
  return out;
}

/// Renames the six link tokens of the hole to shared "q" tokens.
inline void share_link_tokens(std::vector<std::vector<std::string>>& simplices,
                              int size, int hole_i, int hole_j,
                              const std::string& prefix) {
  const int m = size;
  auto wrap = [&](int k) { return ((k % m) + m) % m; };
  std::map<std::string, std::string> rename;
  const int di[] = {1, -1, 0, 0, 1, -1};
  const int dj[] = {0, 0, 1, -1, 1, -1};
  for (int k = 0; k < 6; ++k) {
    const int i = wrap(hole_i + di[k]);
    const int j = wrap(hole_j + dj[k]);
    rename[grid_token(prefix, i, j)] = grid_token("q", i, j);
  }
  for (auto& simplex : simplices)
    for (auto& token : simplex)
      if (auto it = rename.find(token); it != rename.end()) token = it->second;
}

}  // namespace spaces_detail

/**
 * @brief The two compactifications of a pair of once-punctured tori carrying
 *        the double reflection (negation on first homology).
 *
 * A: the disjoint tori themselves; the corona is the two puncture vertices.
 * B: the double torus made by removing the open star of a negation-fixed
 *    vertex from two 4x4 tori and gluing the hexagonal links; the corona is
 *    the waist hexagon, on which the map acts freely.
 *
 * Both give Λ_comb(f,U) = 6 — the number does not depend on the
 * compactification.
 */
inline std::pair<CompactifiedSystem, CompactifiedSystem> punctured_tori_pair() {
  // --- A: disjoint 3x3 tori, negation on each, corona = two fixed points.
  std::vector<std::vector<std::string>> simplices;
  for (const std::string prefix : {"s", "t"}) {
    ComplexPtr torus = torus_grid(3, 3, prefix);
    for (const Simplex& tri : torus->cells(2)) {
      std::vector<std::string> tokens;
      for (Vertex v : tri) tokens.push_back(torus->token(v));
      simplices.push_back(std::move(tokens));
    }
  }
  ComplexPtr XA = build_complex(simplices);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string prefix : {"s", "t"})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        pairs.emplace_back(grid_token(prefix, i, j),
                           grid_token(prefix, (3 - i) % 3, (3 - j) % 3));
  SelfMapSystem system_a(VertexSelfMap::from_token_pairs(XA, pairs));
  CellSet corona_a(XA);
  corona_a.insert(XA->simplex_from_tokens({grid_token("s", 0, 0)}));
  corona_a.insert(XA->simplex_from_tokens({grid_token("t", 0, 0)}));
  CompactifiedSystem A(std::move(system_a), std::move(corona_a));

  // --- B: double torus glued along the hexagonal links around (2,2).
  std::vector<std::vector<std::string>> glued;
  for (const std::string prefix : {"s", "t"}) {
    auto sheet = spaces_detail::punctured_torus_sheet(4, 2, 2, prefix);
    spaces_detail::share_link_tokens(sheet, 4, 2, 2, prefix);
    for (auto& simplex : sheet) glued.push_back(std::move(simplex));
  }
  ComplexPtr XB = build_complex(glued);
  std::vector<std::pair<std::string, std::string>> pairs_b;
  for (const std::string prefix : {"s", "t"})
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == 2 && j == 2) continue;  // removed hole vertex
        std::string from = grid_token(prefix, i, j);
        std::string to = grid_token(prefix, (4 - i) % 4, (4 - j) % 4);
        if (!XB->has_vertex(from)) from = grid_token("q", i, j);
        if (!XB->has_vertex(to)) to = grid_token("q", (4 - i) % 4, (4 - j) % 4);
        pairs_b.emplace_back(std::move(from), std::move(to));
      }
  SelfMapSystem system_b(VertexSelfMap::from_token_pairs(XB, pairs_b));
  CellSet corona_b(XB);
  const int di[] = {1, -1, 0, 0, 1, -1};
  const int dj[] = {0, 0, 1, -1, 1, -1};
  std::vector<std::string> link_tokens;
  for (int k = 0; k < 6; ++k)
    link_tokens.push_back(
        grid_token("q", ((2 + di[k]) % 4 + 4) % 4, ((2 + dj[k]) % 4 + 4) % 4));
  for (const std::string& token : link_tokens)
    corona_b.insert(XB->simplex_from_tokens({token}));
  for (const Simplex& e : XB->cells(1)) {
    bool both_in_link = true;
    for (Vertex v : e) {
      const std::string& token = XB->token(v);
      if (token.size() < 1 || token[0] != 'q') both_in_link = false;
    }
    if (both_in_link) corona_b.insert(e);
  }
  CompactifiedSystem B(std::move(system_b), std::move(corona_b));
  return {std::move(A), std::move(B)};
}

/// Wedge of two 3x3 negation tori at their fixed vertices (shared token
/// "q0_0"); the corona is the wedge point.  A third compactification of the
/// punctured-tori pair: Λ_comb = 6, with χ_c = −1 per summand.
inline CompactifiedSystem wedge_tori() {
  std::vector<std::vector<std::string>> simplices;
  for (const std::string prefix : {"s", "t"}) {
    ComplexPtr torus = torus_grid(3, 3, prefix);
    for (const Simplex& tri : torus->cells(2)) {
      std::vector<std::string> tokens;
      for (Vertex v : tri) {
        std::string token = torus->token(v);
        if (token == grid_token(prefix, 0, 0)) token = "q0_0";
        tokens.push_back(std::move(token));
      }
      simplices.push_back(std::move(tokens));
    }
  }
  ComplexPtr X = build_complex(simplices);
  std::vector<std::pair<std::string, std::string>> pairs{{"q0_0", "q0_0"}};
  for (const std::string prefix : {"s", "t"})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == 0 && j == 0) continue;
        pairs.emplace_back(grid_token(prefix, i, j),
                           grid_token(prefix, (3 - i) % 3, (3 - j) % 3));
      }
  SelfMapSystem system(VertexSelfMap::from_token_pairs(X, pairs));
  CellSet corona(X);
  corona.insert(X->simplex_from_tokens({"q0_0"}));
  return CompactifiedSystem(std::move(system), std::move(corona));
}

/// 4x4 negation torus with two fixed vertices as corona: Λ_comb = 2.  The
/// closed-torus compactification is outside the proven certificate classes
/// (χ = 0), so certifying it requires the conjectural mode.
inline CompactifiedSystem torus_collapse_conjectural() {
  ComplexPtr X = torus_grid(4, 4);
  SelfMapSystem system(torus_negation(X, 4, 4));
  CellSet corona(X);
  corona.insert(X->simplex_from_tokens({grid_token("v", 0, 0)}));
  corona.insert(X->simplex_from_tokens({grid_token("v", 2, 2)}));
  return CompactifiedSystem(std::move(system), std::move(corona));
}

// ---------------------------------------------------------------------------
// Paired triangulations (invariance fixtures).
// ---------------------------------------------------------------------------

/**
 * @brief Two triangulations of the same (space, map, subset) situation.
 *
 * "circle": 3-gon vs 6-gon reflection, A = complement of the fixed vertex 0;
 *           both Λ_comb = 1.
 * "annulus": one-slit annulus at radial resolutions 3 and 6; both
 *           Λ(f,X₁) = −1.
 * "punctured-torus": identity on the 3x3 vs 4x4 torus grid, A = complement
 *           of one vertex; both Λ_comb = χ_c = −1.
 */
inline std::pair<Fixture, Fixture> paired_triangulations(
    const std::string& name) {
  auto minus_vertex = [](const ComplexPtr& X, const std::string& token) {
    CellSet vertex_cell(X);
    vertex_cell.insert(X->simplex_from_tokens({token}));
    return cellset_complement(vertex_cell);
  };

  if (name == "circle") {
    auto make = [&](int n) {
      ComplexPtr X = circle_complex(n);
      Fixture fixture{"circle(" + std::to_string(n) + ")_reflection",
                      SelfMapSystem(circle_reflection(X, n)),
                      {},
                      {}};
      fixture.subsets.emplace("A", minus_vertex(X, "0"));
      fixture.expected["lambda[A]"] = {1, "derived"};
      return fixture;
    };
    return {make(3), make(6)};
  }
  if (name == "annulus") {
    Fixture coarse = annulus_with_slits(1, 3);
    Fixture fine = annulus_with_slits(1, 6);
    auto keep = [](Fixture& fixture) {
      std::map<std::string, ExpectedValue> expected;
      expected["lambda[X1]"] = fixture.expected.at("lambda[X1]");
      fixture.expected = std::move(expected);
    };
    keep(coarse);
    keep(fine);
    return {std::move(coarse), std::move(fine)};
  }
  if (name == "punctured-torus") {
    auto make = [&](int size) {
      ComplexPtr X = torus_grid(size, size);
      Fixture fixture{"torus_grid(" + std::to_string(size) + ")_identity",
                      SelfMapSystem(VertexSelfMap::identity(X)),
                      {},
                      {}};
      fixture.subsets.emplace("A", minus_vertex(X, grid_token("v", 0, 0)));
      fixture.expected["lambda[A]"] = {-1, "trivial"};
      return fixture;
    };
    return {make(3), make(4)};
  }
  throw_precondition("unknown paired fixture: " + name);
}

// ---------------------------------------------------------------------------
// Seeded random generators for property tests.
// ---------------------------------------------------------------------------

/**
 * @brief Random face-closed subcomplex of a simplex on up to max_vertices
 *        vertices.  Deterministic for a given generator state.
 */
inline ComplexPtr random_complex(std::mt19937_64& rng, int max_vertices = 7) {
  std::uniform_int_distribution<int> vertex_count(1, max_vertices);
  const int n = vertex_count(rng);
  std::vector<std::vector<std::string>> simplices;
  for (int v = 0; v < n; ++v) simplices.push_back({std::to_string(v)});

  // Include candidate faces with dimension-dependent probability; the build
  // step closes the result under faces.
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double probability[] = {0.0, 0.0, 0.45, 0.28, 0.14};
  const int max_size = std::min(n, 4);
  for (int size = 2; size <= max_size; ++size) {
    std::vector<int> members(size);
    // Enumerate size-subsets of {0..n-1} in lexicographic order.
    for (int i = 0; i < size; ++i) members[i] = i;
    while (true) {
      if (coin(rng) < probability[size]) {
        std::vector<std::string> tokens;
        for (int v : members) tokens.push_back(std::to_string(v));
        simplices.push_back(std::move(tokens));
      }
      int k = size - 1;
      while (k >= 0 && members[k] == n - size + k) --k;
      if (k < 0) break;
      ++members[k];
      for (int i = k + 1; i < size; ++i) members[i] = members[i - 1] + 1;
    }
  }
  return build_complex(simplices);
}

/// Random simplicial self-map: uniform vertex images filtered by
/// simpliciality, falling back to a constant map (always simplicial).
inline VertexSelfMap random_self_map(std::mt19937_64& rng, const ComplexPtr& X,
                                     int attempts = 60) {
  std::uniform_int_distribution<int> pick(0, X->num_vertices() - 1);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Vertex> img(X->num_vertices());
    for (auto& w : img) w = pick(rng);
    VertexSelfMap candidate(X, std::move(img));
    if (candidate.is_simplicial()) return candidate;
  }
  return VertexSelfMap(X, std::vector<Vertex>(X->num_vertices(), pick(rng)));
}

/// Random cell set: every cell joins independently with probability one half.
inline CellSet random_cellset(std::mt19937_64& rng, const ComplexPtr& X) {
  std::uniform_int_distribution<int> coin(0, 1);
  CellSet A(X);
  for (int p = 0; p <= X->dim(); ++p)
    for (int i = 0; i < X->num_cells(p); ++i)
      if (coin(rng)) A.insert(p, i);
  return A;
}

}  // namespace lefschetz
