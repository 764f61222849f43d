#include "davisforge/coxeter.hpp"

#include <algorithm>
#include <set>

#include "davisforge/errors.hpp"

namespace davisforge {

CoxeterSystem::CoxeterSystem(SimplicialComplex nerve) : nerve_(std::move(nerve)) {
  if (!is_flag(nerve_)) fail(errc::not_flag, "nerve of a Coxeter system");
}

bool CoxeterSystem::commute(VertexIx s, VertexIx t) const {
  if (s == t) return true;
  SimplexKey edge{std::min(s, t), std::max(s, t)};
  return nerve_.contains_key(edge);
}

CoxeterSystem coxeter_from_flag(const SimplicialComplex& l) {
  return CoxeterSystem(l);
}

bool is_spherical(const CoxeterSystem& sys, const std::vector<VertexIx>& t) {
  if (t.empty()) return true;
  SimplexKey key = t;
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
  return sys.nerve().contains_key(key);
}

namespace {

bool is_involution(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[p[x]] != static_cast<int>(x)) return false;
  return true;
}

}  // namespace

long FiniteQuotient::lookup(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

long FiniteQuotient::multiply(long a, long b) const {
  long id = lookup(compose(elements_[a], elements_[b]));
  if (id < 0) fail(errc::invalid_input, "product left the element table");
  return id;
}

long FiniteQuotient::inverse(long g) const {
  const Permutation& p = elements_[g];
  Permutation inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<int>(x);
  long id = lookup(inv);
  if (id < 0) fail(errc::invalid_input, "inverse left the element table");
  return id;
}

std::vector<VertexIx> FiniteQuotient::word(long g) const {
  std::vector<VertexIx> w;
  while (g != 0) {
    w.push_back(via_[g]);
    g = parent_[g];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

FiniteQuotient quotient_from_permutations(const CoxeterSystem& sys,
                                          const std::vector<Permutation>& images,
                                          long limit) {
  const long n = sys.generator_count();
  if (static_cast<long>(images.size()) != n)
    fail(errc::invalid_input, "need one permutation per generator");
  const std::size_t domain = images.empty() ? 0 : images[0].size();
  for (const Permutation& p : images)
    if (p.size() != domain || !valid_permutation(p))
      fail(errc::invalid_input, "generator images must permute a common set");
  for (long s = 0; s < n; ++s)
    if (!is_involution(images[s]))
      fail(errc::relation_violation,
           "image of " + sys.generator_name(s) + " is not an involution");
  for (long s = 0; s < n; ++s)
    for (long t = s + 1; t < n; ++t)
      if (sys.commute(s, t) &&
          compose(images[s], images[t]) != compose(images[t], images[s]))
        fail(errc::relation_violation,
             "images of the edge {" + sys.generator_name(s) + "," +
                 sys.generator_name(t) + "} do not commute");

  FiniteQuotient q(sys, static_cast<long>(domain));
  Permutation identity(domain);
  for (std::size_t x = 0; x < domain; ++x) identity[x] = static_cast<int>(x);
  q.elements_.push_back(identity);
  q.index_.emplace(identity, 0);
  q.parent_.push_back(0);
  q.via_.push_back(-1);
  q.depth_mod2_.push_back(0);
  for (long head = 0; head < static_cast<long>(q.elements_.size()); ++head) {
    for (long s = 0; s < n; ++s) {
      Permutation next = compose(q.elements_[head], images[s]);
      if (q.lookup(next) >= 0) continue;
      if (static_cast<long>(q.elements_.size()) >= limit)
        fail(errc::quotient_too_large,
             "quotient exceeds " + std::to_string(limit) + " elements");
      long id = static_cast<long>(q.elements_.size());
      q.elements_.push_back(next);
      q.index_.emplace(std::move(next), id);
      q.parent_.push_back(head);
      q.via_.push_back(s);
      q.depth_mod2_.push_back(q.depth_mod2_[head] ^ 1);
    }
  }
  q.generator_elem_.resize(n);
  for (long s = 0; s < n; ++s) q.generator_elem_[s] = q.lookup(images[s]);
  return q;
}

FiniteQuotient abelianization_quotient(const CoxeterSystem& sys, long limit) {
  const long n = sys.generator_count();
  if (n >= 63 || (1L << n) > limit)
    fail(errc::quotient_too_large,
         "abelianization has 2^" + std::to_string(n) + " elements");
  std::vector<Permutation> images(n);
  for (long s = 0; s < n; ++s) {
    Permutation p(2 * n);
    for (long x = 0; x < 2 * n; ++x) p[x] = static_cast<int>(x);
    std::swap(p[2 * s], p[2 * s + 1]);
    images[s] = std::move(p);
  }
  return quotient_from_permutations(sys, images, limit);
}

FiniteQuotient parity_quotient(const CoxeterSystem& sys) {
  std::vector<Permutation> images(sys.generator_count(), Permutation{1, 0});
  return quotient_from_permutations(sys, images, 4);
}

FiniteQuotient trivial_quotient(const CoxeterSystem& sys) {
  std::vector<Permutation> images(sys.generator_count(), Permutation{0});
  return quotient_from_permutations(sys, images, 2);
}

const std::vector<int>& parity_character(FiniteQuotient& q) {
  if (q.parity_) return *q.parity_;
  std::vector<int> sign(q.order());
  for (long g = 0; g < q.order(); ++g)
    sign[g] = q.depth_mod2_[g] ? -1 : 1;
  // each Cayley edge must flip the sign, otherwise some element carries both
  // parities and N contains an odd word
  for (long g = 0; g < q.order(); ++g)
    for (long s = 0; s < q.system().generator_count(); ++s) {
      long h = q.multiply(g, q.generator_element(s));
      if (sign[h] != -sign[g])
        fail(errc::parity_undefined,
             "element " + std::to_string(h) + " is reachable with both parities");
    }
  q.parity_ = std::move(sign);
  return *q.parity_;
}

ParabolicImage parabolic_image(const FiniteQuotient& q,
                               const std::vector<VertexIx>& t) {
  if (!is_spherical(q.system(), t))
    fail(errc::not_spherical, "subset does not span a simplex of the nerve");
  ParabolicImage out;
  out.subset = t;
  std::sort(out.subset.begin(), out.subset.end());

  std::vector<long> gens;
  for (VertexIx s : out.subset) gens.push_back(q.generator_element(s));
  std::set<long> subgroup{0};
  std::vector<long> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (long g : gens) {
      long h = q.multiply(queue[head], g);
      if (subgroup.insert(h).second) queue.push_back(h);
    }
  out.subgroup.assign(subgroup.begin(), subgroup.end());

  out.coset_of.assign(q.order(), -1);
  for (long g = 0; g < q.order(); ++g) {
    if (out.coset_of[g] >= 0) continue;
    long id = static_cast<long>(out.cosets.size());
    std::set<long> members;
    for (long h : out.subgroup) members.insert(q.multiply(g, h));
    for (long m : members) out.coset_of[m] = id;
    out.cosets.emplace_back(members.begin(), members.end());
  }
  return out;
}

std::vector<long> induced_automorphism(const FiniteQuotient& q,
                                       const std::vector<VertexIx>& vertex_image) {
  const long n = q.system().generator_count();
  if (static_cast<long>(vertex_image.size()) != n)
    fail(errc::invalid_input, "vertex image must cover every generator");
  // Push s̄ ↦ (q·s)‾ along the BFS tree (parents precede children), then
  // check every Cayley edge; a mismatch means the rule is not well defined
  // on Ḡ, i.e. N is not invariant under the symmetry.
  std::vector<long> phi(q.order());
  phi[0] = 0;
  for (long g = 1; g < q.order(); ++g)
    phi[g] = q.multiply(phi[q.bfs_parent(g)],
                        q.generator_element(vertex_image[q.bfs_generator(g)]));
  for (long g = 0; g < q.order(); ++g)
    for (long s = 0; s < n; ++s) {
      long lhs = phi[q.multiply(g, q.generator_element(s))];
      long rhs = q.multiply(phi[g], q.generator_element(vertex_image[s]));
      if (lhs != rhs)
        fail(errc::not_q_invariant,
             "s ↦ q·s does not descend to the quotient at generator " +
                 q.system().generator_name(s));
    }
  return phi;
}

}  // namespace davisforge
