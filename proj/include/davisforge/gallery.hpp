#ifndef DAVISFORGE_GALLERY_HPP_
#define DAVISFORGE_GALLERY_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "davisforge/chain_complex.hpp"
#include "davisforge/coxeter.hpp"
#include "davisforge/exact_matrix.hpp"
#include "davisforge/group_action.hpp"
#include "davisforge/simplicial_complex.hpp"

namespace davisforge {

// A regular 2-complex whose cells are polygons: vertices, edges, and
// boundary cycles of length at least three.  Cells are glued along their
// names, so an edge may lie on any number of polygons.
struct PolygonalComplex {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> polygons;
};

// Simplicial subdivision: one new vertex per edge and per polygon, and two
// triangles per polygon side.  Edge and polygon barycenters are named after
// what they subdivide ("{a|b}" for an edge; the polygon name lists its
// boundary cycle in a rotation/reflection-canonical order, so the name does
// not depend on how the cycle was written down).  INVALID_INPUT on repeated
// or degenerate cells, UNKNOWN_VERTEX on names outside the vertex list,
// and polygon sides must be listed edges.
SimplicialComplex subdivide_polygonal(const PolygonalComplex& pc);

// The 2-skeleton of the 120-cell model of the Poincaré homology sphere:
// the complete graph on five vertices with one pentagon for each of the six
// inverse-pairs of five-cycles in the alternating group's 12-element
// conjugacy class, subdivided so that the rotation action is simplicial and
// admissible.
struct PoincareSkeleton {
  PolygonalComplex cells;
  SimplicialComplex complex;  // the subdivision: 21 vertices, 80 edges, 60 triangles
  SimplicialAction action;    // A5, generated by a five-cycle and a three-cycle
  std::vector<std::string> pentagon_barycenters;  // the six polygon vertices, sorted
};

PoincareSkeleton poincare_two_skeleton();

// Recomputes and checks every homological claim about the skeleton: acyclic
// but not simply connected, no global fixed point, singular set the full
// 1-skeleton (not a full subcomplex), relative second cohomology free of
// rank sixty, fundamental group of order 120, and a deleted pentagon
// barycenter leaving first cohomology of rank one.  Throws
// VERIFICATION_FAILED naming the first claim that fails; the report carries
// the computed values.
struct PoincareReport {
  HomologySummary reduced;         // reduced homology of the skeleton
  bool no_global_fixed_point = false;
  SimplicialComplex singular;
  bool singular_is_one_skeleton = false;
  bool singular_full = false;      // false: the pentagon interiors are missing
  GroupSummary pair_h2;            // H^2 of (complex, singular)
  long pi1_order = 0;
  GroupSummary deleted_vertex_h1;  // H^1 after deleting a pentagon barycenter
};

PoincareReport verify_poincare(const SimplicialComplex& l,
                               const SimplicialAction& act);

// Equivariant cellular chain model of a Moore-space pair for distinct
// primes p and q (BAD_PRIMES otherwise).  One vertex v, one loop c, and a
// 2-cell f with boundary p·c are fixed by the cyclic group of order q; a
// free orbit of 2-cells f_0, ..., f_{q-1} with boundary c and a free orbit
// of 3-cells b_0, ..., b_{q-1} with boundary e_j = f - (f_j + ... +
// f_{j+p-1}) (indices mod q) kill everything above degree zero.  The
// generator's action is recorded as a chain map per degree.
struct EquivariantCWChainModel {
  long p = 0, q = 0;
  ChainComplex complex;                       // degrees 0 through 3
  std::map<int, SparseMat> generator_action;  // the rotation, degree by degree
  std::vector<std::string> fixed_cells;       // "v", "c", "f"
  ChainComplex fixed;                         // the subcomplex they span
  ChainComplex relative;                      // complex modulo fixed
};

EquivariantCWChainModel moore_chain_model(long p, long q);

// Recomputes and checks the model's homological claims: boundaries square
// to zero and commute with the action, the total complex is acyclic, the
// fixed subcomplex has first homology of order p, the relative complex has
// third cohomology of order p (the Smith form of the q x q circulant
// relative boundary), the degree-2 kernel is free of rank q on the e_j, and
// the action permutes the e_j cyclically.  VERIFICATION_FAILED on any
// mismatch; the report carries the computed values.
struct MooreReport {
  HomologySummary total;
  GroupSummary fixed_h1;
  GroupSummary relative_h3;
  bigint circulant_det;  // +- p
};

MooreReport verify_moore(const EquivariantCWChainModel& model);

// Named fixture: a flag complex together with a symmetry group acting
// admissibly on it and a finite quotient of the associated right-angled
// Coxeter group.  These exercise every construction downstream of a nerve;
// sizes stay small enough that each instance's Davis complex quotient fits
// comfortably under the default caps.
struct GalleryInstance {
  std::string name;
  SimplicialComplex complex;
  SimplicialAction action;
  FiniteQuotient quotient;
};

std::vector<GalleryInstance> gallery();

// Single fixture by name; UNKNOWN_EXAMPLE when no such instance exists.
GalleryInstance gallery_instance(const std::string& name);

}  // namespace davisforge

#endif
