#ifndef DAVISFORGE_CHAIN_COMPLEX_HPP_
#define DAVISFORGE_CHAIN_COMPLEX_HPP_

#include <map>
#include <string>
#include <vector>

#include "davisforge/exact_matrix.hpp"
#include "davisforge/simplicial_complex.hpp"

namespace davisforge {

// Coefficient system: the integers, or a prime field F_p.
class Coefficients {
 public:
  static Coefficients integers() { return Coefficients(0); }
  static Coefficients mod(long p) {
    if (!is_prime(p)) fail(errc::invalid_input, "coefficient modulus must be prime");
    return Coefficients(p);
  }

  bool is_field() const { return p_ != 0; }
  long p() const { return p_; }
  std::string label() const { return p_ == 0 ? "Z" : "F_" + std::to_string(p_); }
  bool operator==(const Coefficients& rhs) const { return p_ == rhs.p_; }

 private:
  explicit Coefficients(long p) : p_(p) {}
  long p_;
};

// Bounded chain complex of finitely generated free Z-modules with labelled
// bases.  Degrees form the contiguous range [lowest, highest]; the boundary
// out of the lowest degree is zero.  The composite of consecutive boundary
// maps is checked to vanish at construction.
class ChainComplex {
 public:
  // boundaries[i] maps degree lowest+i to degree lowest+i-1 and must have
  // shape dim(lowest+i-1) x dim(lowest+i); boundaries[0] is ignored.
  ChainComplex(int lowest, std::vector<std::vector<std::string>> labels,
               std::vector<SparseMat> boundaries);

  static ChainComplex zero();

  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(labels_.size()) - 1; }

  long dim(int degree) const;  // 0 outside [lowest, highest]
  const std::vector<std::string>& labels(int degree) const;
  long index_of(int degree, const std::string& label) const;  // -1 when absent

  // dim(degree-1) x dim(degree); a zero matrix outside the stored range.
  SparseMat boundary(int degree) const;

  long long total_dim() const;

 private:
  int lowest_ = 0;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::map<std::string, long>> index_;
  std::vector<SparseMat> boundaries_;
};

struct GroupSummary {
  long betti = 0;
  std::vector<bigint> torsion;  // invariant factors > 1, divisibility chain

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const GroupSummary& rhs) const {
    return betti == rhs.betti && torsion == rhs.torsion;
  }
};

std::string group_to_string(const GroupSummary& g);

// Homology groups per degree over a contiguous range.
class HomologySummary {
 public:
  HomologySummary() = default;
  HomologySummary(int lowest, std::vector<GroupSummary> groups)
      : lowest_(lowest), groups_(std::move(groups)) {}

  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(groups_.size()) - 1; }
  GroupSummary at(int degree) const;  // zero group outside the range

  // Equal as graded groups: zero entries outside either range are fine.
  bool operator==(const HomologySummary& rhs) const;
  bool is_trivial() const;

 private:
  int lowest_ = 0;
  std::vector<GroupSummary> groups_;
};

// Simplicial chain complex with the canonical orientation (vertices sorted
// by the ambient order).  The reduced variant appends the augmentation in
// degree -1.
ChainComplex chain_complex_of(const SimplicialComplex& x, bool reduced);

// Relative complex of the pair (x, a): basis in each degree is the set of
// simplices of x not in a, boundary entries landing in a are dropped.
ChainComplex relative_chain_complex(const SimplicialComplex& x,
                                    const SimplicialComplex& a);

HomologySummary homology(const ChainComplex& c, Coefficients k);
// Computed from the transposed boundaries (independent of homology()).
HomologySummary cohomology(const ChainComplex& c, Coefficients k);

HomologySummary reduced_homology(const SimplicialComplex& x, Coefficients k);

// (C (x) D)_n = sum of C_i (x) D_{n-i} with the Koszul sign (-1)^i on the
// second factor's boundary.
ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d);

// f is a degree-indexed family of matrices f[k]: C_k -> D_k (missing
// degrees are zero maps); true iff f commutes with the boundaries.
bool is_chain_map(const std::map<int, SparseMat>& f, const ChainComplex& c,
                  const ChainComplex& d);

// Constraints of Prop. 6.1-type on a subcomplex y of an acyclic complex of
// dimension <= 2: H_2(y) = 0 and every H_i(y) torsion-free.  Throws
// HYPOTHESIS_FAILED when the ambient hypotheses fail, NOT_SUBCOMPLEX when y
// is not a subcomplex, CONSTRAINT_VIOLATED when the conclusion fails (which
// would indicate a bug, not bad input).
HomologySummary subcomplex_acyclic_constraints(const SimplicialComplex& ambient,
                                               const SimplicialComplex& y);

}  // namespace davisforge

#endif
