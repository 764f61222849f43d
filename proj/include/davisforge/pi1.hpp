#ifndef DAVISFORGE_PI1_HPP_
#define DAVISFORGE_PI1_HPP_

#include <string>
#include <vector>

#include "davisforge/chain_complex.hpp"
#include "davisforge/exact_matrix.hpp"
#include "davisforge/simplicial_complex.hpp"

namespace davisforge {

inline constexpr long kDefaultCosetLimit = 1'000'000;

// Finite group presentation.  A relator is a word in the generators: the
// letter +k stands for generator k-1, the letter -k for its inverse, so
// words avoid any dependence on generator spelling.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

// Edge-path presentation of the fundamental group of the 2-skeleton of x,
// based at base_vertex (the first vertex when base_vertex is empty).
// A spanning tree is grown breadth-first in vertex order; the generators
// are the non-tree edges ("x0", "x1", ... in canonical edge order) and the
// relators are the boundary words of the 2-simplices, read over non-tree
// edges only.  Simplices above dimension 2 cannot change the group and are
// ignored.  NOT_CONNECTED when x is not connected (or empty),
// UNKNOWN_VERTEX when base_vertex names no vertex.
Presentation presentation_from_two_complex(const SimplicialComplex& x,
                                           const std::string& base_vertex = "");

// Index of the subgroup generated by the given words, by coset enumeration
// (HLT with lookahead).  The index must be finite to be found; enumeration
// that cannot close within max_cosets live cosets throws
// COSET_LIMIT_EXCEEDED, which is inconclusive — the index may be finite but
// large, or infinite.  With no subgroup generators this is the order of the
// presented group.  The result is independent of max_cosets once the table
// closes.  INVALID_INPUT on malformed words or a non-positive limit.
long todd_coxeter(const Presentation& pres,
                  const std::vector<std::vector<int>>& subgroup_generators = {},
                  long max_cosets = kDefaultCosetLimit);

// Matrix of total exponents d_ij = (exponent sum of generator j in relator
// i) together with its determinant: the presentation's abelianisation is
// finite iff det != 0, and trivial iff det = +-1.  Both values depend only
// on the images of the relators in the free abelian group, so they are
// invariant under free cancellation and cyclic permutation of the words.
// SHAPE_MISMATCH unless the number of relators equals the number of
// generators.
struct ExponentMatrix {
  IntMat exponents;
  bigint det;

  bool nonzero() const { return det != 0; }
  bool unimodular() const { return det == 1 || det == -1; }
};

ExponentMatrix exponent_matrix(const Presentation& pres);

// Nerve comparison for a cover by subcomplexes: when every collection of
// parts with a common vertex intersects in an acyclic subcomplex, the union
// of the parts and the nerve of the cover have the same reduced homology.
// The check throws INAPPLICABLE_COVER when some such intersection fails to
// be acyclic, and VERIFICATION_FAILED if the two homologies disagree (which
// would indicate a bug, not bad input).
struct NerveComparison {
  SimplicialComplex nerve;
  HomologySummary cover_homology;  // reduced homology of the union
  HomologySummary nerve_homology;  // reduced homology of the nerve
};

NerveComparison nerve_homology_comparison(const Cover& cover);

}  // namespace davisforge

#endif
