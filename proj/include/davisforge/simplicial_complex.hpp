#ifndef DAVISFORGE_SIMPLICIAL_COMPLEX_HPP_
#define DAVISFORGE_SIMPLICIAL_COMPLEX_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "davisforge/errors.hpp"

namespace davisforge {

// Vertices are opaque strings; inside a complex they are referred to by
// index into the (lexicographically sorted) vertex table, so index order
// and name order agree.  A simplex is a strictly increasing index tuple.
using VertexIx = int;
using SimplexKey = std::vector<VertexIx>;

// Canonical simplex order: by dimension, then lexicographically.
struct SimplexOrder {
  bool operator()(const SimplexKey& a, const SimplexKey& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using SimplexSet = std::set<SimplexKey, SimplexOrder>;

// Finite abstract simplicial complex.  Invariants: face-closed, and every
// vertex of the vertex table occurs as a 0-simplex.  The empty complex (no
// vertices at all) is allowed; the empty simplex is never stored.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Face closure of the given maximal simplices.  Every listed vertex
  // becomes a 0-simplex even when no maximal simplex mentions it.
  static SimplicialComplex from_maximal(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& maximal);

  // Trusted constructor for callers that guarantee the invariants (the
  // simplex set is face-closed w.r.t. the given, already sorted, table).
  static SimplicialComplex from_sorted_parts(std::vector<std::string> vertices,
                                             SimplexSet simplices);

  long vertex_count() const { return static_cast<long>(vertices_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::string& vertex_name(VertexIx i) const { return vertices_[i]; }
  VertexIx index_of(const std::string& name) const;  // -1 when absent

  int dimension() const;  // -1 for the empty complex
  long long simplex_count() const { return static_cast<long long>(simplices_.size()); }
  const SimplexSet& simplices() const { return simplices_; }
  std::vector<SimplexKey> simplices_of_dimension(int k) const;
  std::vector<long long> face_vector() const;  // counts indexed by dimension

  bool contains_key(const SimplexKey& s) const { return simplices_.count(s) > 0; }
  bool contains(const std::vector<std::string>& simplex) const;

  std::vector<std::string> names_of(const SimplexKey& s) const;
  // Sorted index tuple for a set of vertex names; UNKNOWN_VERTEX on miss.
  SimplexKey key_of(const std::vector<std::string>& names) const;

  std::vector<std::vector<std::string>> maximal_simplices() const;

  long long euler_characteristic() const;

  bool operator==(const SimplicialComplex& rhs) const {
    return vertices_ == rhs.vertices_ && simplices_ == rhs.simplices_;
  }

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, VertexIx> index_;
  SimplexSet simplices_;
};

// Containment by vertex names: every simplex of sub is a simplex of ambient.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient);

// Largest subcomplex of x with vertex set exactly verts.
SimplicialComplex full_subcomplex(const SimplicialComplex& x,
                                  const std::vector<std::string>& verts);

// Whether subcomplex y equals the full subcomplex of x on y's vertices.
bool is_full_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y);

// Full subcomplex on all vertices except v.
SimplicialComplex vertex_deletion(const SimplicialComplex& x, const std::string& v);

SimplicialComplex cone(const SimplicialComplex& x, const std::string& apex);

bool is_connected(const SimplicialComplex& x);

// Flag condition: every set of pairwise adjacent vertices spans a simplex.
bool is_flag(const SimplicialComplex& x);

// Flag + no empty square: no induced 4-cycle in the 1-skeleton.  Throws
// NOT_FLAG when x is not flag to begin with.
bool is_flag_no_square(const SimplicialComplex& x);

// Clique complex of a simple undirected graph.
SimplicialComplex flag_from_graph(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges);

// Set operations on subcomplexes of a common ambient complex; each part must
// be a subcomplex of ambient (AMBIENT_MISMATCH otherwise).  The intersection
// of an empty list is ambient itself; the union of an empty list is empty.
SimplicialComplex complex_union(const SimplicialComplex& ambient,
                                const std::vector<SimplicialComplex>& parts);
SimplicialComplex complex_intersection(const SimplicialComplex& ambient,
                                       const std::vector<SimplicialComplex>& parts);

// Barycentric subdivision.  New vertices are named after the simplices they
// subdivide ("{a|b|c}"), which keeps names stable across complexes: the
// subdivision of a subcomplex is literally a subcomplex of the subdivision.
std::string subdivision_vertex_name(const std::vector<std::string>& simplex_names);

struct Subdivision {
  SimplicialComplex complex;
  // new vertex name -> the original simplex it subdivides
  std::map<std::string, std::vector<std::string>> provenance;

  const std::vector<std::string>& simplex_for(const std::string& vertex) const;
  std::string vertex_for(const std::vector<std::string>& simplex_names) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& x);

// Ordered list of named subcomplexes covering an ambient complex.
struct Cover {
  SimplicialComplex ambient;
  std::vector<std::pair<std::string, SimplicialComplex>> parts;

  // Validates: names distinct (NAME_COLLISION) and parts subcomplexes of
  // ambient (AMBIENT_MISMATCH).  Parts need not exhaust the ambient complex.
  static Cover checked(SimplicialComplex ambient,
                       std::vector<std::pair<std::string, SimplicialComplex>> parts);
};

// Nerve: vertices are part names; a set of parts spans a simplex iff the
// parts share a vertex (equivalently, their intersection is a nonempty
// subcomplex, since parts are face-closed).
SimplicialComplex nerve_of_cover(const Cover& cover);

}  // namespace davisforge

#endif
