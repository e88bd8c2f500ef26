#pragma once

/**
 * @file core.hpp
 * @brief Abstract simplicial complexes, open-cell sets, and their exact
 *        combinatorial invariants.
 *
 * A complex stores every simplex (not only the maximal ones) grouped by
 * dimension, in a canonical order, so that chain groups have a well-defined
 * ordered basis and every computation in the library is deterministic.
 *
 * A CellSet is an arbitrary set of open cells (= simplices regarded as their
 * relative interiors).  It is the combinatorial stand-in for a definable
 * subset: unions of open cells.  CellSets support exact boolean algebra,
 * topological closure, the interior/frontier/trace decomposition, and the
 * combinatorial Euler characteristic chi_c = sum over cells of (-1)^dim.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/**
 * @brief Error taxonomy shared across the library.
 *
 * Parse errors cover malformed input text, precondition errors cover
 * well-formed but mathematically inadmissible inputs, and property errors
 * signal the violation of an identity the library guarantees internally
 * (these should never fire and indicate a bug if they do).
 */
class Error : public std::runtime_error {
 public:
  enum class Kind { Parse, Precondition, Property };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_parse(const std::string& message) {
  throw Error(Error::Kind::Parse, message);
}
[[noreturn]] inline void throw_precondition(const std::string& message) {
  throw Error(Error::Kind::Precondition, message);
}
[[noreturn]] inline void throw_property(const std::string& message) {
  throw Error(Error::Kind::Property, message);
}

/// Dense internal vertex id.  Ids are assigned by sorting the vertex tokens.
using Vertex = int;

/// A simplex is a strictly increasing tuple of vertex ids.
using Simplex = std::vector<Vertex>;

/**
 * @brief Shortlex order on vertex tokens: shorter strings first, ties broken
 *        lexicographically.  Unpadded decimal names therefore sort
 *        numerically ("2" before "10"), which keeps human-written files and
 *        generated complexes in the expected order.
 */
inline bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/**
 * @brief A finite abstract simplicial complex with named vertices.
 *
 * Construction closes the input under faces, so callers may provide maximal
 * simplices only.  All simplex lists are sorted (by dimension, then
 * lexicographically on vertex ids) and immutable afterwards.
 */
class SimplicialComplex {
 public:
  /**
   * @brief Builds a complex from (at least the maximal) simplices, given as
   *        tuples of vertex tokens.  The input is closed under faces.
   *
   * @param maximal_simplices Vertex-token tuples; repeated tokens within one
   *        tuple are rejected (a simplex has distinct vertices).
   * @returns An immutable, canonically ordered complex.
   */
  static SimplicialComplex build(
      const std::vector<std::vector<std::string>>& maximal_simplices) {
    SimplicialComplex X;

    std::vector<std::string> tokens;
    for (const auto& simplex : maximal_simplices)
      for (const auto& token : simplex) tokens.push_back(token);
    std::sort(tokens.begin(), tokens.end(), shortlex_less);
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    X.names_ = tokens;
    for (int id = 0; id < static_cast<int>(tokens.size()); ++id)
      X.ids_[tokens[id]] = id;

    // Collect the closure of the input under faces, dimension by dimension.
    std::vector<std::map<Simplex, int>> present;
    auto ensure_dim = [&](int p) {
      if (static_cast<int>(present.size()) <= p) present.resize(p + 1);
    };
    for (const auto& simplex_tokens : maximal_simplices) {
      Simplex s;
      for (const auto& token : simplex_tokens) s.push_back(X.ids_.at(token));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw_precondition("simplex with repeated vertex: " +
                           join_tokens(simplex_tokens));
      if (s.size() > 24) throw_precondition("simplex dimension too large");
      // Every nonempty subset of s is a face.
      const std::uint32_t subsets = 1u << s.size();
      for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (mask & (1u << i)) face.push_back(s[i]);
        ensure_dim(static_cast<int>(face.size()) - 1);
        present[face.size() - 1].emplace(std::move(face), 0);
      }
    }
    if (present.empty()) throw_precondition("empty complex is not supported");

    X.cells_.resize(present.size());
    X.index_.resize(present.size());
    for (std::size_t p = 0; p < present.size(); ++p) {
      int position = 0;
      for (auto& [simplex, index] : present[p]) {
        index = position++;
        X.cells_[p].push_back(simplex);
      }
      X.index_[p] = std::move(present[p]);
    }
    return X;
  }

  /// Dimension of the complex (largest simplex dimension).
  int dim() const { return static_cast<int>(cells_.size()) - 1; }

  int num_vertices() const { return static_cast<int>(names_.size()); }

  /// Number of p-simplices (0 when p is out of range).
  int num_cells(int p) const {
    if (p < 0 || p > dim()) return 0;
    return static_cast<int>(cells_[p].size());
  }

  long long total_cells() const {
    long long total = 0;
    for (int p = 0; p <= dim(); ++p) total += num_cells(p);
    return total;
  }

  /// All p-simplices in canonical order.
  const std::vector<Simplex>& cells(int p) const {
    static const std::vector<Simplex> kEmpty;
    if (p < 0 || p > dim()) return kEmpty;
    return cells_[p];
  }

  bool contains(const Simplex& s) const {
    const int p = static_cast<int>(s.size()) - 1;
    if (p < 0 || p > dim()) return false;
    return index_[p].count(s) > 0;
  }

  /// Canonical position of a simplex among those of its dimension.
  int index_of(const Simplex& s) const {
    const int p = static_cast<int>(s.size()) - 1;
    if (p < 0 || p > dim()) throw_precondition("simplex not in complex");
    auto it = index_[p].find(s);
    if (it == index_[p].end())
      throw_precondition("simplex not in complex: " + label(s));
    return it->second;
  }

  bool has_vertex(const std::string& token) const {
    return ids_.count(token) > 0;
  }

  Vertex vertex_id(const std::string& token) const {
    auto it = ids_.find(token);
    if (it == ids_.end()) throw_parse("unknown vertex token: " + token);
    return it->second;
  }

  const std::string& token(Vertex v) const { return names_.at(v); }

  const std::vector<std::string>& tokens() const { return names_; }

  /// Builds a simplex from vertex tokens (sorting into canonical id order).
  Simplex simplex_from_tokens(const std::vector<std::string>& tokens) const {
    Simplex s;
    for (const auto& t : tokens) s.push_back(vertex_id(t));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw_parse("simplex with repeated vertex: " + join_tokens(tokens));
    return s;
  }

  /// Human-readable label, e.g. "{0 1 2}".
  std::string label(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += token(s[i]);
    }
    out += '}';
    return out;
  }

  /// Euler characteristic: alternating count of all simplices.
  long long euler() const {
    long long chi = 0;
    for (int p = 0; p <= dim(); ++p)
      chi += (p % 2 == 0) ? num_cells(p) : -num_cells(p);
    return chi;
  }

  /// Whether the 1-skeleton connects all vertices.
  bool connected() const {
    if (num_vertices() == 0) return true;
    std::vector<int> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : cells(1)) parent[find(e[0])] = find(e[1]);
    const int root = find(0);
    for (int v = 1; v < num_vertices(); ++v)
      if (find(v) != root) return false;
    return true;
  }

  /// Number of p-simplices having the given simplex as a face.
  int coface_count(const Simplex& s, int p) const {
    int count = 0;
    for (const auto& c : cells(p))
      if (std::includes(c.begin(), c.end(), s.begin(), s.end())) ++count;
    return count;
  }

  /// Every maximal simplex has dimension d.
  bool pure(int d) const {
    for (int p = 0; p < d; ++p)
      for (const auto& s : cells(p))
        if (coface_count(s, p + 1) == 0) return false;
    return dim() == d;
  }

 private:
  static std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out += ' ';
      out += tokens[i];
    }
    return out;
  }

  std::vector<std::string> names_;           // id -> token (shortlex order)
  std::map<std::string, int> ids_;           // token -> id
  std::vector<std::vector<Simplex>> cells_;  // by dimension, sorted
  std::vector<std::map<Simplex, int>> index_;
};

/// Builds a complex behind a shared handle (CellSets and systems keep the
/// handle alive, which makes fixtures safely copyable).
inline ComplexPtr build_complex(
    const std::vector<std::vector<std::string>>& maximal_simplices) {
  return std::make_shared<const SimplicialComplex>(
      SimplicialComplex::build(maximal_simplices));
}

/**
 * @brief A set of open cells of a fixed complex.
 *
 * Stored as one membership bit per simplex, per dimension.  All set algebra
 * is exact and requires both operands to live on the same complex object.
 */
class CellSet {
 public:
  CellSet() = default;

  explicit CellSet(ComplexPtr X) : X_(std::move(X)) {
    in_.resize(X_->dim() + 1);
    for (int p = 0; p <= X_->dim(); ++p) in_[p].assign(X_->num_cells(p), 0);
  }

  static CellSet empty_set(ComplexPtr X) { return CellSet(std::move(X)); }

  static CellSet full_set(ComplexPtr X) {
    CellSet A(std::move(X));
    for (auto& dim_bits : A.in_) dim_bits.assign(dim_bits.size(), 1);
    return A;
  }

  static CellSet of_simplices(ComplexPtr X, const std::vector<Simplex>& list) {
    CellSet A(std::move(X));
    for (const auto& s : list) A.insert(s);
    return A;
  }

  const SimplicialComplex& complex() const { return *X_; }
  const ComplexPtr& complex_ptr() const { return X_; }

  bool contains(int p, int index) const {
    if (p < 0 || p >= static_cast<int>(in_.size())) return false;
    return in_[p][index] != 0;
  }

  bool contains(const Simplex& s) const {
    if (!X_->contains(s)) return false;
    return contains(static_cast<int>(s.size()) - 1, X_->index_of(s));
  }

  void insert(const Simplex& s) {
    in_[s.size() - 1][X_->index_of(s)] = 1;
  }

  void erase(const Simplex& s) {
    in_[s.size() - 1][X_->index_of(s)] = 0;
  }

  void insert(int p, int index) { in_[p][index] = 1; }

  long long size() const {
    long long n = 0;
    for (const auto& dim_bits : in_)
      n += std::count(dim_bits.begin(), dim_bits.end(), 1);
    return n;
  }

  bool empty() const { return size() == 0; }

  /// All member simplices in canonical order (dimension, then position).
  std::vector<Simplex> to_simplices() const {
    std::vector<Simplex> out;
    for (int p = 0; p <= X_->dim(); ++p)
      for (int i = 0; i < X_->num_cells(p); ++i)
        if (in_[p][i]) out.push_back(X_->cells(p)[i]);
    return out;
  }

  /// Face-closedness: every face of a member is a member.  (Checking
  /// codimension-1 faces suffices by induction.)
  bool is_subcomplex() const {
    for (int p = 1; p <= X_->dim(); ++p)
      for (int i = 0; i < X_->num_cells(p); ++i) {
        if (!in_[p][i]) continue;
        const Simplex& s = X_->cells(p)[i];
        Simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          int k = 0;
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != drop) face[k++] = s[j];
          if (!contains(static_cast<int>(face.size()) - 1,
                        X_->index_of(face)))
            return false;
        }
      }
    return true;
  }

  /// Name of some simplex violating face-closedness, if any.
  std::optional<std::string> subcomplex_violation() const {
    for (int p = 1; p <= X_->dim(); ++p)
      for (int i = 0; i < X_->num_cells(p); ++i) {
        if (!in_[p][i]) continue;
        const Simplex& s = X_->cells(p)[i];
        Simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          int k = 0;
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != drop) face[k++] = s[j];
          if (!contains(static_cast<int>(face.size()) - 1, X_->index_of(face)))
            return X_->label(s) + " lacks face " + X_->label(face);
        }
      }
    return std::nullopt;
  }

  bool operator==(const CellSet& other) const {
    require_same_complex(other);
    return in_ == other.in_;
  }

  bool operator!=(const CellSet& other) const { return !(*this == other); }

  bool subset_of(const CellSet& other) const {
    require_same_complex(other);
    for (std::size_t p = 0; p < in_.size(); ++p)
      for (std::size_t i = 0; i < in_[p].size(); ++i)
        if (in_[p][i] && !other.in_[p][i]) return false;
    return true;
  }

  bool disjoint_from(const CellSet& other) const {
    require_same_complex(other);
    for (std::size_t p = 0; p < in_.size(); ++p)
      for (std::size_t i = 0; i < in_[p].size(); ++i)
        if (in_[p][i] && other.in_[p][i]) return false;
    return true;
  }

  void require_same_complex(const CellSet& other) const {
    if (X_.get() != other.X_.get())
      throw_precondition("cell sets live on different complexes");
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int p = 0; p <= X_->dim(); ++p)
      for (int i = 0; i < X_->num_cells(p); ++i)
        if (in_[p][i]) fn(p, i, X_->cells(p)[i]);
  }

 private:
  ComplexPtr X_;
  std::vector<std::vector<char>> in_;  // in_[p][i]: membership bit

  friend CellSet cellset_union(const CellSet&, const CellSet&);
  friend CellSet cellset_intersection(const CellSet&, const CellSet&);
  friend CellSet cellset_difference(const CellSet&, const CellSet&);
  friend CellSet cellset_complement(const CellSet&);
};

inline CellSet cellset_union(const CellSet& A, const CellSet& B) {
  A.require_same_complex(B);
  CellSet out = A;
  for (std::size_t p = 0; p < out.in_.size(); ++p)
    for (std::size_t i = 0; i < out.in_[p].size(); ++i)
      out.in_[p][i] = A.in_[p][i] || B.in_[p][i];
  return out;
}

inline CellSet cellset_intersection(const CellSet& A, const CellSet& B) {
  A.require_same_complex(B);
  CellSet out = A;
  for (std::size_t p = 0; p < out.in_.size(); ++p)
    for (std::size_t i = 0; i < out.in_[p].size(); ++i)
      out.in_[p][i] = A.in_[p][i] && B.in_[p][i];
  return out;
}

inline CellSet cellset_difference(const CellSet& A, const CellSet& B) {
  A.require_same_complex(B);
  CellSet out = A;
  for (std::size_t p = 0; p < out.in_.size(); ++p)
    for (std::size_t i = 0; i < out.in_[p].size(); ++i)
      out.in_[p][i] = A.in_[p][i] && !B.in_[p][i];
  return out;
}

inline CellSet cellset_complement(const CellSet& A) {
  CellSet out = A;
  for (std::size_t p = 0; p < out.in_.size(); ++p)
    for (std::size_t i = 0; i < out.in_[p].size(); ++i)
      out.in_[p][i] = !A.in_[p][i];
  return out;
}

/**
 * @brief Topological closure: adds every face of every member cell.
 *
 * Idempotent and monotone; the result is always a subcomplex.
 */
inline CellSet closure(const CellSet& A) {
  CellSet out = A;
  const SimplicialComplex& X = A.complex();
  A.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    const std::uint32_t subsets = 1u << s.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (mask & (1u << j)) face.push_back(s[j]);
      out.insert(static_cast<int>(face.size()) - 1, X.index_of(face));
    }
  });
  return out;
}

/**
 * @brief The interior/frontier/trace decomposition of a cell set.
 *
 * frontier    = closure(A) minus A (the cells pressed against A from outside),
 * trace_part  = closure(frontier) intersected with A,
 * interior    = A minus closure(frontier).
 *
 * A is the disjoint union of interior and trace_part, and the frontier is
 * disjoint from A.  Restricted traces are additive over the three parts,
 * which is the engine of the subdivision-invariance argument.
 */
struct DecomposedTriple {
  CellSet interior;
  CellSet frontier;
  CellSet trace_part;
};

inline DecomposedTriple decompose_triple(const CellSet& A) {
  const CellSet cl = closure(A);
  CellSet frontier = cellset_difference(cl, A);
  const CellSet cl_frontier = closure(frontier);
  DecomposedTriple out{cellset_difference(A, cl_frontier), std::move(frontier),
                       cellset_intersection(cl_frontier, A)};
  return out;
}

/// chi_c(A) = sum over member cells of (-1)^dim.  Equals the Lefschetz number
/// of the identity restricted to A, and is additive over disjoint unions.
inline long long euler_comb(const CellSet& A) {
  long long chi = 0;
  A.for_each([&](int p, int /*i*/, const Simplex& /*s*/) {
    chi += (p % 2 == 0) ? 1 : -1;
  });
  return chi;
}

/**
 * @brief Extracts a face-closed cell set as a stand-alone complex (vertex
 *        tokens are preserved).
 */
inline ComplexPtr subcomplex_of(const CellSet& closed) {
  if (auto violation = closed.subcomplex_violation())
    throw_precondition("not a subcomplex: " + *violation);
  const SimplicialComplex& X = closed.complex();
  std::vector<std::vector<std::string>> simplices;
  closed.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    std::vector<std::string> tokens;
    for (Vertex v : s) tokens.push_back(X.token(v));
    simplices.push_back(std::move(tokens));
  });
  return build_complex(simplices);
}

/**
 * @brief A self-map of the vertex set of a complex.
 *
 * Simpliciality (every simplex's image vertex set spans a simplex) is what
 * makes the map induce chain maps; it is verified by the chain layer and may
 * be queried here.
 */
class VertexSelfMap {
 public:
  VertexSelfMap(ComplexPtr X, std::vector<Vertex> images)
      : X_(std::move(X)), img_(std::move(images)) {
    if (static_cast<int>(img_.size()) != X_->num_vertices())
      throw_precondition("vertex map must assign every vertex");
    for (Vertex w : img_)
      if (w < 0 || w >= X_->num_vertices())
        throw_precondition("vertex map image out of range");
  }

  static VertexSelfMap identity(ComplexPtr X) {
    std::vector<Vertex> img(X->num_vertices());
    std::iota(img.begin(), img.end(), 0);
    return VertexSelfMap(std::move(X), std::move(img));
  }

  /// Builds from token pairs; the assignment must be total and single-valued.
  static VertexSelfMap from_token_pairs(
      ComplexPtr X,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Vertex> img(X->num_vertices(), -1);
    for (const auto& [from, to] : pairs) {
      const Vertex v = X->vertex_id(from);
      const Vertex w = X->vertex_id(to);
      if (img[v] != -1 && img[v] != w)
        throw_parse("vertex mapped twice: " + from);
      img[v] = w;
    }
    for (int v = 0; v < X->num_vertices(); ++v)
      if (img[v] == -1)
        throw_parse("vertex map is not total; missing: " + X->token(v));
    return VertexSelfMap(std::move(X), std::move(img));
  }

  const ComplexPtr& complex_ptr() const { return X_; }
  const SimplicialComplex& complex() const { return *X_; }

  Vertex operator()(Vertex v) const { return img_.at(v); }

  /**
   * @brief The simplex spanned by the images of s's vertices: sorted with
   *        duplicates removed, so it may have lower dimension than s.
   */
  Simplex image_simplex(const Simplex& s) const {
    Simplex image;
    image.reserve(s.size());
    for (Vertex v : s) image.push_back(img_[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
  }

  /// phi is injective on the vertices of s (the image keeps s's dimension).
  bool nondegenerate_on(const Simplex& s) const {
    return image_simplex(s).size() == s.size();
  }

  /// s is mapped onto itself as a set (its realization contains a fixed point).
  bool fixes_setwise(const Simplex& s) const { return image_simplex(s) == s; }

  /// Every vertex of s is individually fixed.
  bool fixes_pointwise(const Simplex& s) const {
    for (Vertex v : s)
      if (img_[v] != v) return false;
    return true;
  }

  /// Label of some simplex whose image is not a simplex, if any exists.
  /// Checking top-dimensional membership per simplex is exact: faces of
  /// simplices in the complex are in the complex.
  std::optional<std::string> simpliciality_violation() const {
    for (int p = 1; p <= X_->dim(); ++p)
      for (const auto& s : X_->cells(p)) {
        const Simplex image = image_simplex(s);
        if (!X_->contains(image))
          return X_->label(s) + " maps onto " + X_->label(image) +
                 " which is not a simplex";
      }
    return std::nullopt;
  }

  bool is_simplicial() const { return !simpliciality_violation().has_value(); }

  void require_simplicial() const {
    if (auto violation = simpliciality_violation())
      throw_precondition("vertex map is not simplicial: " + *violation);
  }

  /// (*this) composed after inner: v -> this(inner(v)).
  VertexSelfMap compose_after(const VertexSelfMap& inner) const {
    if (X_.get() != inner.X_.get())
      throw_precondition("composing maps of different complexes");
    std::vector<Vertex> img(img_.size());
    for (std::size_t v = 0; v < img.size(); ++v) img[v] = img_[inner.img_[v]];
    return VertexSelfMap(X_, std::move(img));
  }

  bool operator==(const VertexSelfMap& other) const {
    return X_.get() == other.X_.get() && img_ == other.img_;
  }

 private:
  ComplexPtr X_;
  std::vector<Vertex> img_;
};

}  // namespace lefschetz
