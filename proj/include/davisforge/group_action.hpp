#ifndef DAVISFORGE_GROUP_ACTION_HPP
#define DAVISFORGE_GROUP_ACTION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "davisforge/permutation.hpp"
#include "davisforge/simplicial_complex.hpp"

namespace davisforge {

inline constexpr long kGroupCap = 1L << 20;

// A concrete finite permutation group on {0, ..., domain-1}: the closure of
// a list of named generators.  Elements are identified by BFS discovery
// order from the identity (id 0), expanding generators in the given order,
// so ids are stable across runs.
class FiniteGroup {
 public:
  static FiniteGroup from_permutations(
      long domain_size,
      std::vector<std::pair<std::string, Permutation>> generators,
      long limit = kGroupCap);

  long order() const { return static_cast<long>(elements_.size()); }
  long domain_size() const { return domain_; }
  long identity() const { return 0; }

  long multiply(long a, long b) const;
  long inverse(long g) const;
  const Permutation& permutation(long g) const { return elements_[g]; }

  long generator_count() const { return static_cast<long>(generator_elem_.size()); }
  long generator_element(int i) const { return generator_elem_[i]; }
  const std::string& generator_name(int i) const { return generator_names_[i]; }

  int element_order(long g) const;
  // Elements of prime order (the elements that witness every nontrivial
  // stabilizer: some power of any g ≠ 1 has prime order).
  std::vector<long> prime_order_elements() const;

  // Closure of the given elements, as a sorted id list.
  std::vector<long> subgroup_closure(const std::vector<long>& gens) const;
  // Every subgroup, each a sorted id list, found by closing one added
  // element at a time.  Brute force; meant for orders up to a few hundred.
  std::vector<std::vector<long>> all_subgroups() const;
  // Derived series of the subgroup terminates at the identity.
  bool is_soluble(const std::vector<long>& subgroup) const;

 private:
  explicit FiniteGroup(long domain) : domain_(domain) {}

  long lookup(const Permutation& p) const;

  long domain_;
  std::vector<Permutation> elements_;
  std::map<Permutation, long> index_;
  std::vector<long> generator_elem_;
  std::vector<std::string> generator_names_;
};

// A group acting simplicially on a complex.  The group is the closure of
// the generators' vertex permutations, so the action is faithful by
// construction and apply(g, -) is just the element's permutation.
class SimplicialAction {
 public:
  // Each generator maps vertex names to vertex names; the map must be a
  // bijection on the vertex set (INVALID_INPUT otherwise) carrying
  // simplices to simplices (SHAPE_MISMATCH otherwise).
  static SimplicialAction from_generators(
      SimplicialComplex complex,
      const std::vector<std::pair<std::string, std::map<std::string, std::string>>>&
          generators,
      long limit = kGroupCap);

  static SimplicialAction trivial(SimplicialComplex complex);

  const FiniteGroup& group() const { return group_; }
  const SimplicialComplex& complex() const { return complex_; }

  VertexIx apply(long g, VertexIx v) const { return group_.permutation(g)[v]; }
  SimplexKey apply(long g, const SimplexKey& s) const;

  friend SimplicialAction transport_to_subdivision(const SimplicialAction& act,
                                                   const Subdivision& sub);

 private:
  SimplicialAction(FiniteGroup group, SimplicialComplex complex)
      : group_(std::move(group)), complex_(std::move(complex)) {}

  FiniteGroup group_;
  SimplicialComplex complex_;
};

// Setwise stabilizers equal pointwise stabilizers: whenever g·σ = σ, g
// fixes every vertex of σ.
bool is_admissible(const SimplicialAction& act);

// The induced action on the barycentric subdivision: g moves the barycenter
// of σ to the barycenter of g·σ.  Always admissible (and verified to be).
SimplicialAction transport_to_subdivision(const SimplicialAction& act,
                                          const Subdivision& sub);

// Full subcomplex on the vertices fixed by every listed element (hence by
// the subgroup they generate).  NOT_ADMISSIBLE unless is_admissible(act).
SimplicialComplex fixed_subcomplex(const SimplicialAction& act,
                                   const std::vector<long>& subgroup_generators);

// Union of the fixed subcomplexes of all prime-order elements: the points
// with nontrivial stabilizer.  NOT_ADMISSIBLE unless is_admissible(act).
SimplicialComplex singular_subcomplex(const SimplicialAction& act);

struct SimplexOrbit {
  SimplexKey representative;        // least member in canonical simplex order
  std::vector<SimplexKey> members;  // sorted in canonical simplex order
  long stabilizer_order;            // of the setwise stabilizer of the representative
};

// Partition of all simplices into orbits, sorted by representative.
std::vector<SimplexOrbit> orbits_of_simplices(const SimplicialAction& act);

}  // namespace davisforge

#endif
