#include "davisforge/group_action.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "davisforge/errors.hpp"
#include "davisforge/exact_matrix.hpp"

namespace davisforge {

FiniteGroup FiniteGroup::from_permutations(
    long domain_size, std::vector<std::pair<std::string, Permutation>> generators,
    long limit) {
  if (domain_size < 0) fail(errc::invalid_input, "negative domain size");
  for (const auto& [name, p] : generators)
    if (p.size() != static_cast<std::size_t>(domain_size) || !valid_permutation(p))
      fail(errc::invalid_input,
           "generator " + name + " is not a permutation of the domain");

  FiniteGroup g(domain_size);
  Permutation id = identity_permutation(domain_size);
  g.elements_.push_back(id);
  g.index_.emplace(std::move(id), 0);
  for (long head = 0; head < static_cast<long>(g.elements_.size()); ++head) {
    for (const auto& [name, p] : generators) {
      Permutation next = compose(g.elements_[head], p);
      if (g.index_.count(next)) continue;
      if (static_cast<long>(g.elements_.size()) >= limit)
        fail(errc::quotient_too_large,
             "group closure exceeds " + std::to_string(limit) + " elements");
      long ix = static_cast<long>(g.elements_.size());
      g.elements_.push_back(next);
      g.index_.emplace(std::move(next), ix);
    }
  }
  for (const auto& [name, p] : generators) {
    g.generator_elem_.push_back(g.lookup(p));
    g.generator_names_.push_back(name);
  }
  return g;
}

long FiniteGroup::lookup(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

long FiniteGroup::multiply(long a, long b) const {
  long id = lookup(compose(elements_[a], elements_[b]));
  if (id < 0) fail(errc::invalid_input, "product left the element table");
  return id;
}

long FiniteGroup::inverse(long g) const {
  long id = lookup(inverse_permutation(elements_[g]));
  if (id < 0) fail(errc::invalid_input, "inverse left the element table");
  return id;
}

int FiniteGroup::element_order(long g) const {
  int n = 1;
  long acc = g;
  while (acc != 0) {
    acc = multiply(acc, g);
    ++n;
  }
  return n;
}

std::vector<long> FiniteGroup::prime_order_elements() const {
  std::vector<long> out;
  for (long g = 1; g < order(); ++g)
    if (is_prime(element_order(g))) out.push_back(g);
  return out;
}

std::vector<long> FiniteGroup::subgroup_closure(const std::vector<long>& gens) const {
  std::set<long> seen{0};
  std::deque<long> queue{0};
  while (!queue.empty()) {
    long h = queue.front();
    queue.pop_front();
    for (long g : gens) {
      long next = multiply(h, g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<long>(seen.begin(), seen.end());
}

std::vector<std::vector<long>> FiniteGroup::all_subgroups() const {
  std::set<std::vector<long>> found;
  std::vector<std::vector<long>> frontier;
  std::vector<long> trivial{0};
  found.insert(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& h : frontier) {
      for (long g = 1; g < order(); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<long> gens = h;
        gens.push_back(g);
        std::vector<long> k = subgroup_closure(gens);
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<std::vector<long>>(found.begin(), found.end());
}

bool FiniteGroup::is_soluble(const std::vector<long>& subgroup) const {
  std::vector<long> h = subgroup_closure(subgroup);
  for (;;) {
    std::vector<long> commutators;
    for (long a : h)
      for (long b : h)
        commutators.push_back(
            multiply(multiply(inverse(a), inverse(b)), multiply(a, b)));
    std::vector<long> derived = subgroup_closure(commutators);
    if (derived.size() == 1) return true;
    if (derived == h) return false;
    h = std::move(derived);
  }
}

SimplicialAction SimplicialAction::from_generators(
    SimplicialComplex complex,
    const std::vector<std::pair<std::string, std::map<std::string, std::string>>>&
        generators,
    long limit) {
  std::vector<std::pair<std::string, Permutation>> perms;
  for (const auto& [name, vmap] : generators) {
    Permutation p(complex.vertex_count(), -1);
    for (const auto& [from, to] : vmap) {
      VertexIx a = complex.index_of(from);
      VertexIx b = complex.index_of(to);
      if (a < 0 || b < 0)
        fail(errc::unknown_vertex, "generator " + name + " mentions " +
                                       (a < 0 ? from : to));
      p[a] = b;
    }
    for (VertexIx v = 0; v < complex.vertex_count(); ++v)
      if (p[v] < 0) p[v] = v;  // unmentioned vertices stay put
    if (!valid_permutation(p))
      fail(errc::invalid_input,
           "generator " + name + " is not a bijection on the vertex set");
    perms.emplace_back(name, std::move(p));
  }
  FiniteGroup group =
      FiniteGroup::from_permutations(complex.vertex_count(), std::move(perms), limit);

  // Generators carrying simplices to simplices is enough: products do too,
  // and on a finite complex an injection of the simplex set is a bijection.
  for (int i = 0; i < group.generator_count(); ++i) {
    long g = group.generator_element(i);
    for (const SimplexKey& s : complex.simplices()) {
      SimplexKey image = s;
      for (VertexIx& v : image) v = group.permutation(g)[v];
      std::sort(image.begin(), image.end());
      if (!complex.contains_key(image))
        fail(errc::shape_mismatch,
             "generator " + group.generator_name(i) + " does not map " +
                 subdivision_vertex_name(complex.names_of(s)) + " to a simplex");
    }
  }
  return SimplicialAction(std::move(group), std::move(complex));
}

SimplicialAction SimplicialAction::trivial(SimplicialComplex complex) {
  FiniteGroup group = FiniteGroup::from_permutations(complex.vertex_count(), {});
  return SimplicialAction(std::move(group), std::move(complex));
}

SimplexKey SimplicialAction::apply(long g, const SimplexKey& s) const {
  SimplexKey image = s;
  for (VertexIx& v : image) v = group_.permutation(g)[v];
  std::sort(image.begin(), image.end());
  return image;
}

bool is_admissible(const SimplicialAction& act) {
  for (long g = 1; g < act.group().order(); ++g) {
    const Permutation& p = act.group().permutation(g);
    for (const SimplexKey& s : act.complex().simplices()) {
      if (s.size() < 2) continue;  // vertices are always fixed pointwise
      if (act.apply(g, s) != s) continue;
      for (VertexIx v : s)
        if (p[v] != v) return false;
    }
  }
  return true;
}

SimplicialAction transport_to_subdivision(const SimplicialAction& act,
                                          const Subdivision& sub) {
  const SimplicialComplex& x = act.complex();
  const SimplicialComplex& xp = sub.complex;
  std::vector<std::pair<std::string, Permutation>> perms;
  for (int i = 0; i < act.group().generator_count(); ++i) {
    long g = act.group().generator_element(i);
    Permutation p(xp.vertex_count());
    for (VertexIx v = 0; v < xp.vertex_count(); ++v) {
      std::vector<std::string> image;
      for (const std::string& name : sub.simplex_for(xp.vertex_name(v)))
        image.push_back(x.vertex_name(act.apply(g, x.index_of(name))));
      p[v] = xp.index_of(sub.vertex_for(image));
    }
    perms.emplace_back(act.group().generator_name(i), std::move(p));
  }
  FiniteGroup group =
      FiniteGroup::from_permutations(xp.vertex_count(), std::move(perms));
  // Barycenters of distinct simplices are distinct vertices, so a setwise
  // fixed chain is fixed pointwise; this cannot fail, but it is cheap to
  // keep the promise honest.
  SimplicialAction out(std::move(group), xp);
  if (!is_admissible(out))
    fail(errc::verification_failed, "subdivision action is not admissible");
  return out;
}

SimplicialComplex fixed_subcomplex(const SimplicialAction& act,
                                   const std::vector<long>& subgroup_generators) {
  if (!is_admissible(act))
    fail(errc::not_admissible, "fixed subcomplex of a non-admissible action");
  std::vector<std::string> fixed;
  for (VertexIx v = 0; v < act.complex().vertex_count(); ++v) {
    bool ok = true;
    for (long g : subgroup_generators)
      if (act.apply(g, v) != v) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(act.complex().vertex_name(v));
  }
  return full_subcomplex(act.complex(), fixed);
}

SimplicialComplex singular_subcomplex(const SimplicialAction& act) {
  if (!is_admissible(act))
    fail(errc::not_admissible, "singular subcomplex of a non-admissible action");
  std::vector<SimplicialComplex> parts;
  for (long g : act.group().prime_order_elements())
    parts.push_back(fixed_subcomplex(act, {g}));
  return complex_union(act.complex(), parts);
}

std::vector<SimplexOrbit> orbits_of_simplices(const SimplicialAction& act) {
  std::vector<SimplexOrbit> out;
  std::set<SimplexKey, SimplexOrder> done;
  for (const SimplexKey& s : act.complex().simplices()) {
    if (done.count(s)) continue;
    SimplexOrbit orbit;
    std::set<SimplexKey, SimplexOrder> members;
    long stabilizer = 0;
    for (long g = 0; g < act.group().order(); ++g) {
      SimplexKey image = act.apply(g, s);
      if (image == s) ++stabilizer;
      members.insert(std::move(image));
    }
    orbit.representative = *members.begin();
    orbit.members.assign(members.begin(), members.end());
    orbit.stabilizer_order = stabilizer;
    done.insert(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  // simplices() iterates in canonical order and each orbit is keyed by its
  // least member, so orbits come out sorted by representative already; the
  // sort is a cheap guarantee against that coupling.
  std::sort(out.begin(), out.end(),
            [](const SimplexOrbit& a, const SimplexOrbit& b) {
              return SimplexOrder()(a.representative, b.representative);
            });
  return out;
}

}  // namespace davisforge
