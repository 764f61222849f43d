#ifndef DAVISFORGE_COXETER_HPP
#define DAVISFORGE_COXETER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "davisforge/permutation.hpp"
#include "davisforge/simplicial_complex.hpp"

namespace davisforge {

// Right-angled Coxeter system determined by a finite flag complex: one
// involutive generator per vertex, with s and t commuting exactly when
// {s, t} is an edge.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(SimplicialComplex nerve);

  const SimplicialComplex& nerve() const { return nerve_; }
  long generator_count() const { return nerve_.vertex_count(); }
  const std::string& generator_name(VertexIx s) const {
    return nerve_.vertex_name(s);
  }
  bool commute(VertexIx s, VertexIx t) const;

 private:
  SimplicialComplex nerve_;
};

CoxeterSystem coxeter_from_flag(const SimplicialComplex& l);

// T is spherical when it is empty or spans a simplex of the nerve, i.e. the
// special parabolic subgroup W_T is finite (here C2^T).
bool is_spherical(const CoxeterSystem& sys, const std::vector<VertexIx>& t);

inline constexpr long kQuotientCap = 1L << 20;

// Finite quotient Ḡ = W/N presented by permutation images of the
// generators; N is the kernel.  Elements are identified by BFS discovery
// order from the identity (id 0), expanding generators in vertex order, so
// ids are stable across runs.
class FiniteQuotient {
 public:
  const CoxeterSystem& system() const { return sys_; }
  long order() const { return static_cast<long>(elements_.size()); }
  long domain_size() const { return domain_; }

  long generator_element(VertexIx s) const { return generator_elem_[s]; }
  long multiply(long a, long b) const;
  long inverse(long g) const;
  const Permutation& permutation(long g) const { return elements_[g]; }

  // BFS witness word for g, as generator indices
  std::vector<VertexIx> word(long g) const;
  long bfs_parent(long g) const { return parent_[g]; }
  VertexIx bfs_generator(long g) const { return via_[g]; }

  bool has_parity() const { return parity_.has_value(); }
  // +1 or -1; only valid once parity_character has succeeded
  int parity(long g) const { return (*parity_)[g]; }

  friend FiniteQuotient quotient_from_permutations(
      const CoxeterSystem& sys, const std::vector<Permutation>& images,
      long limit);
  friend const std::vector<int>& parity_character(FiniteQuotient& q);

 private:
  FiniteQuotient(const CoxeterSystem& sys, long domain)
      : sys_(sys), domain_(domain) {}

  long lookup(const Permutation& p) const;

  CoxeterSystem sys_;
  long domain_;
  std::vector<Permutation> elements_;
  std::map<Permutation, long> index_;
  std::vector<long> generator_elem_;
  std::vector<long> parent_;     // BFS tree
  std::vector<VertexIx> via_;    // generator applied at the tree edge
  std::vector<int> depth_mod2_;  // word-length parity along the tree
  std::optional<std::vector<int>> parity_;
};

FiniteQuotient quotient_from_permutations(const CoxeterSystem& sys,
                                          const std::vector<Permutation>& images,
                                          long limit = kQuotientCap);

// Ḡ = C2^S: generator s flips its own coordinate (a transposition on a
// private pair of points), so N is the commutator subgroup.
FiniteQuotient abelianization_quotient(const CoxeterSystem& sys,
                                       long limit = kQuotientCap);

// Ḡ = C2 via word length mod 2, so N = W^ev.
FiniteQuotient parity_quotient(const CoxeterSystem& sys);

// Ḡ = 1, so N = W.
FiniteQuotient trivial_quotient(const CoxeterSystem& sys);

// Assigns ε(ḡ) = (-1)^{word length} and stores it in the quotient; fails
// with PARITY_UNDEFINED when some element is reachable with both parities
// (exactly when N is not contained in W^ev).
const std::vector<int>& parity_character(FiniteQuotient& q);

// Image of the special parabolic subgroup W_T in Ḡ together with its left
// cosets.  Cosets are ordered by their minimal element id, so coset ids are
// as stable as element ids.
struct ParabolicImage {
  std::vector<VertexIx> subset;
  std::vector<long> subgroup;              // sorted element ids
  std::vector<std::vector<long>> cosets;   // each sorted; coset 0 contains id 0
  std::vector<long> coset_of;              // element id -> coset index

  long subgroup_order() const { return static_cast<long>(subgroup.size()); }
  long coset_count() const { return static_cast<long>(cosets.size()); }
};

ParabolicImage parabolic_image(const FiniteQuotient& q,
                               const std::vector<VertexIx>& t);

// The automorphism of Ḡ induced by a symmetry of the nerve (s ↦ q·s),
// propagated along BFS words; rejected when the propagation is inconsistent,
// which certifies that N is not invariant under the symmetry.
std::vector<long> induced_automorphism(const FiniteQuotient& q,
                                       const std::vector<VertexIx>& vertex_image);

}  // namespace davisforge

#endif
