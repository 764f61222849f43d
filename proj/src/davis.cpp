#include "davisforge/davis.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>

#include "davisforge/errors.hpp"

namespace davisforge {

namespace {

constexpr long long kCountSaturated = std::numeric_limits<long long>::max() / 4;

long long sat_add(long long a, long long b) {
  return (a >= kCountSaturated - b) ? kCountSaturated : a + b;
}

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return (a >= kCountSaturated / b) ? kCountSaturated : a * b;
}

std::string davis_vertex_name(int type, long coset) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "t%04d.c%07ld", type, coset);
  return buf;
}

std::string label_of(const SimplicialComplex& x, const SimplexKey& s) {
  return subdivision_vertex_name(x.names_of(s));
}

}  // namespace

std::vector<std::vector<VertexIx>> spherical_subsets(const CoxeterSystem& sys) {
  std::vector<std::vector<VertexIx>> out;
  out.emplace_back();
  for (const SimplexKey& s : sys.nerve().simplices()) out.push_back(s);
  return out;
}

DavisVertex DavisQuotientComplex::vertex_info(VertexIx v) const {
  auto it = std::upper_bound(vertex_offset_.begin(), vertex_offset_.end(),
                             static_cast<long>(v));
  int t = static_cast<int>(it - vertex_offset_.begin()) - 1;
  return DavisVertex{t, static_cast<long>(v) - vertex_offset_[t]};
}

DavisQuotientComplex davis_quotient(const FiniteQuotient& quotient, long long cap) {
  DavisQuotientComplex d(quotient);
  try {
    parity_character(d.quotient_);
  } catch (const error& e) {
    if (e.code() != errc::parity_undefined) throw;
  }

  const CoxeterSystem& sys = d.quotient_.system();
  d.types_ = spherical_subsets(sys);
  const int nt = static_cast<int>(d.types_.size());
  if (nt > 9999)
    fail(errc::quotient_too_large, "more than 9999 spherical subsets");
  if (d.quotient_.order() > 9999999)
    fail(errc::quotient_too_large, "more than 9999999 quotient elements");
  for (const auto& t : d.types_)
    d.parabolics_.push_back(parabolic_image(d.quotient_, t));

  // Strict containment of types; types are sorted by size, so supersets of
  // t always have a larger index.
  std::vector<std::vector<int>> supersets(nt);
  for (int a = 0; a < nt; ++a)
    for (int b = a + 1; b < nt; ++b)
      if (d.types_[a].size() < d.types_[b].size() &&
          std::includes(d.types_[b].begin(), d.types_[b].end(),
                        d.types_[a].begin(), d.types_[a].end()))
        supersets[a].push_back(b);

  // Each chain of types, taken with a coset at its minimum, determines the
  // rest of its cosets; so the simplex count is known before enumeration.
  std::vector<long long> chains_from(nt, 1);
  for (int t = nt - 1; t >= 0; --t)
    for (int s : supersets[t])
      chains_from[t] = sat_add(chains_from[t], chains_from[s]);
  long long projected = 0;
  for (int t = 0; t < nt; ++t)
    projected = sat_add(
        projected, sat_mul(d.parabolics_[t].coset_count(), chains_from[t]));
  if (projected > cap)
    fail(errc::quotient_too_large,
         "Davis quotient needs " + std::to_string(projected) +
             " simplices; cap is " + std::to_string(cap));

  std::vector<std::string> names;
  d.vertex_offset_.assign(nt + 1, 0);
  for (int t = 0; t < nt; ++t) {
    d.vertex_offset_[t] = static_cast<long>(names.size());
    for (long c = 0; c < d.parabolics_[t].coset_count(); ++c)
      names.push_back(davis_vertex_name(t, c));
  }
  d.vertex_offset_[nt] = static_cast<long>(names.size());

  SimplexSet chains;
  SimplexKey chain;
  std::function<void(int, long)> extend = [&](int t, long c) {
    chain.push_back(d.vertex(t, c));
    chains.insert(chain);
    long rep = d.parabolics_[t].cosets[c][0];
    for (int s : supersets[t]) extend(s, d.parabolics_[s].coset_of[rep]);
    chain.pop_back();
  };
  for (int t = 0; t < nt; ++t)
    for (long c = 0; c < d.parabolics_[t].coset_count(); ++c) extend(t, c);

  d.complex_ = SimplicialComplex::from_sorted_parts(std::move(names),
                                                    std::move(chains));
  return d;
}

SimplicialComplex sing_subcomplex(const DavisQuotientComplex& davis) {
  std::vector<std::string> keep;
  for (VertexIx v = davis.vertex(1, 0); v < davis.complex().vertex_count(); ++v)
    keep.push_back(davis.complex().vertex_name(v));
  return full_subcomplex(davis.complex(), keep);
}

SimplicialComplex invariant_subcomplex(const DavisQuotientComplex& davis,
                                       const SimplicialComplex& k) {
  const SimplicialComplex& nerve = davis.system().nerve();
  if (!is_subcomplex(k, nerve))
    fail(errc::not_subcomplex, "K is not a subcomplex of the nerve");
  std::vector<std::string> keep;
  for (int t = 0; t < davis.type_count(); ++t) {
    if (t > 0 && !k.contains(nerve.names_of(davis.type(t)))) continue;
    for (long c = 0; c < davis.parabolic(t).coset_count(); ++c)
      keep.push_back(davis.complex().vertex_name(davis.vertex(t, c)));
  }
  return full_subcomplex(davis.complex(), keep);
}

namespace {

// NOT_Q_INVARIANT unless every generator's symmetry preserves N.
void require_invariance(const DavisQuotientComplex& davis,
                        const SimplicialAction& q_action) {
  if (!(q_action.complex() == davis.system().nerve()))
    fail(errc::invalid_input, "the Q-action is not on the nerve");
  for (int i = 0; i < q_action.group().generator_count(); ++i)
    induced_automorphism(
        davis.quotient(),
        q_action.group().permutation(q_action.group().generator_element(i)));
}

}  // namespace

SimplicialComplex family_singular_subcomplex(const DavisQuotientComplex& davis,
                                             const SimplicialAction& q_action) {
  SimplicialComplex k = singular_subcomplex(q_action);  // NOT_ADMISSIBLE inside
  require_invariance(davis, q_action);
  return invariant_subcomplex(davis, k);
}

SimplicialAction induced_action_on_quotient(const DavisQuotientComplex& davis,
                                            const SimplicialAction& q_action) {
  require_invariance(davis, q_action);

  std::map<std::vector<VertexIx>, int> type_index;
  for (int t = 0; t < davis.type_count(); ++t) type_index[davis.type(t)] = t;

  std::vector<std::pair<std::string, std::map<std::string, std::string>>> gens;
  for (int i = 0; i < q_action.group().generator_count(); ++i) {
    long ge = q_action.group().generator_element(i);
    const Permutation& p = q_action.group().permutation(ge);
    std::vector<long> alpha = induced_automorphism(davis.quotient(), p);
    std::map<std::string, std::string> vmap;
    for (int t = 0; t < davis.type_count(); ++t) {
      std::vector<VertexIx> image_type = davis.type(t);
      for (VertexIx& s : image_type) s = p[s];
      std::sort(image_type.begin(), image_type.end());
      int ti = type_index.at(image_type);
      for (long c = 0; c < davis.parabolic(t).coset_count(); ++c) {
        long rep = davis.parabolic(t).cosets[c][0];
        long ci = davis.parabolic(ti).coset_of[alpha[rep]];
        vmap[davis.complex().vertex_name(davis.vertex(t, c))] =
            davis.complex().vertex_name(davis.vertex(ti, ci));
      }
    }
    gens.emplace_back(q_action.group().generator_name(i), std::move(vmap));
  }
  return SimplicialAction::from_generators(davis.complex(), gens);
}

namespace {

SplittingMaps build_splitting_maps(const DavisQuotientComplex& davis,
                                   const SimplicialComplex* k) {
  const FiniteQuotient& q = davis.quotient();
  if (!q.has_parity())
    fail(errc::parity_undefined, "splitting maps need the parity character");

  // The cone model CL′ is the same construction over the trivial quotient;
  // both complexes index their vertices by the same spherical-subset order.
  DavisQuotientComplex cone = davis_quotient(trivial_quotient(davis.system()));

  SimplicialComplex cone_base = sing_subcomplex(cone);  // L′
  ChainComplex target = chain_complex_of(davis.complex(), false);
  if (k != nullptr) {
    cone_base = complex_union(cone.complex(),
                              {cone_base, invariant_subcomplex(cone, *k)});
    target = relative_chain_complex(davis.complex(), invariant_subcomplex(davis, *k));
  }
  ChainComplex domain = relative_chain_complex(cone.complex(), cone_base);

  const int top = std::max(domain.highest(), target.highest());
  std::map<int, SparseMat> psi, phi;
  for (int r = 0; r <= top; ++r) {
    SparseMat p(target.dim(r), domain.dim(r));
    for (const SimplexKey& s : cone.complex().simplices_of_dimension(r)) {
      long col = domain.index_of(r, label_of(cone.complex(), s));
      if (col < 0) continue;
      std::vector<int> types;
      for (VertexIx v : s) types.push_back(cone.vertex_info(v).type);
      for (long g = 0; g < q.order(); ++g) {
        SimplexKey image;
        for (int t : types)
          image.push_back(davis.vertex(t, davis.parabolic(t).coset_of[g]));
        long row = target.index_of(r, label_of(davis.complex(), image));
        if (row < 0)
          fail(errc::verification_failed, "translate fell into the base pair");
        p.add(row, col, q.parity(g));
      }
    }
    psi.emplace(r, std::move(p));

    SparseMat f(domain.dim(r), target.dim(r));
    for (const SimplexKey& s : davis.complex().simplices_of_dimension(r)) {
      long col = target.index_of(r, label_of(davis.complex(), s));
      if (col < 0) continue;
      if (s[0] != davis.vertex(0, 0)) continue;  // excision kills the rest
      SimplexKey stripped;
      for (VertexIx v : s)
        stripped.push_back(cone.vertex(davis.vertex_info(v).type, 0));
      long row = domain.index_of(r, label_of(cone.complex(), stripped));
      if (row < 0)
        fail(errc::verification_failed, "excision image missing from the cone");
      f.set(row, col, 1);
    }
    phi.emplace(r, std::move(f));
  }

  if (!is_chain_map(psi, domain, target))
    fail(errc::verification_failed, "psi is not a chain map");
  if (!is_chain_map(phi, target, domain))
    fail(errc::verification_failed, "phi is not a chain map");
  for (int r = 0; r <= top; ++r) {
    SparseMat id(domain.dim(r), domain.dim(r));
    for (long i = 0; i < domain.dim(r); ++i) id.set(i, i, 1);
    if (!(phi.at(r) * psi.at(r) == id))
      fail(errc::verification_failed, "phi . psi is not the identity");
  }
  return SplittingMaps{std::move(domain), std::move(target), std::move(psi),
                       std::move(phi)};
}

}  // namespace

SplittingMaps splitting_maps(const DavisQuotientComplex& davis) {
  return build_splitting_maps(davis, nullptr);
}

SplittingMaps relative_splitting_maps(const DavisQuotientComplex& davis,
                                      const SimplicialComplex& k) {
  if (!is_subcomplex(k, davis.system().nerve()))
    fail(errc::not_subcomplex, "K is not a subcomplex of the nerve");
  return build_splitting_maps(davis, &k);
}

ConePairReport cone_pair_cohomology_check(const SimplicialComplex& l,
                                          const SimplicialComplex& k) {
  if (!is_subcomplex(k, l)) fail(errc::not_subcomplex, "K is not a subcomplex of L");
  const std::string apex = "*";  // sorts before every "{...}" barycenter name
  SimplicialComplex lp = barycentric_subdivision(l).complex;
  SimplicialComplex kp = barycentric_subdivision(k).complex;
  SimplicialComplex cl = cone(lp, apex);
  SimplicialComplex ck = cone(kp, apex);
  SimplicialComplex base = complex_union(cl, {lp, ck});

  ConePairReport report{
      cohomology(relative_chain_complex(cl, base), Coefficients::integers()),
      cohomology(relative_chain_complex(lp, kp), Coefficients::integers())};
  for (int deg = 1; deg <= std::max(report.base_cohomology.highest(),
                                    report.pair_cohomology.highest());
       ++deg)
    if (!(report.pair_cohomology.at(deg + 1) == report.base_cohomology.at(deg)))
      fail(errc::verification_failed,
           "H^" + std::to_string(deg + 1) + " of the cone pair differs from H^" +
               std::to_string(deg) + " of (L', K')");
  return report;
}

namespace {

// A vertex of l that subdivides a top cell, judged by its provenance-style
// name "{v0|...|vk}": a barycenter of a simplex needs k+1 = dim l + 1 parts,
// a polygonal cell may list more.  The center of the widest cell wins; empty
// when l does not look like a subdivision.
std::string top_cell_barycenter(const SimplicialComplex& l) {
  const int parts_wanted = l.dimension() + 1;
  std::string best;
  int best_parts = parts_wanted - 1;
  for (const std::string& name : l.vertex_names()) {
    if (name.size() < 2 || name.front() != '{' || name.back() != '}') continue;
    int parts = 1;
    for (char ch : name) parts += (ch == '|');
    if (parts > best_parts) {
      best = name;
      best_parts = parts;
    }
  }
  return best;
}

}  // namespace

Theorem1Certificate theorem1_certificate(const SimplicialComplex& l,
                                         const SimplicialAction& q_action,
                                         const FiniteQuotient& quotient,
                                         long long cap) {
  if (!(q_action.complex() == l))
    fail(errc::invalid_input, "the Q-action is not on L");
  if (!(quotient.system().nerve() == l))
    fail(errc::invalid_input, "the quotient is not over the Coxeter system of L");
  if (!is_flag(l)) fail(errc::hypothesis_failed, "L is not a flag complex");
  if (!is_admissible(q_action))
    fail(errc::not_admissible, "the Q-action on L is not admissible");

  Theorem1Certificate cert;
  cert.n = l.dimension();
  cert.group_order = q_action.group().order();
  cert.l_acyclic = reduced_homology(l, Coefficients::integers()).is_trivial();

  SimplicialComplex k = singular_subcomplex(q_action);
  cert.h_nerve_pair =
      cohomology(relative_chain_complex(l, k), Coefficients::integers())
          .at(cert.n);
  cert.nerve_pair_nonzero = !cert.h_nerve_pair.trivial();

  DavisQuotientComplex davis = davis_quotient(quotient, cap);
  cert.quotient_order = davis.quotient().order();
  cert.davis_dimension = davis.complex().dimension();

  // The 𝒲-singular subcomplex must exist (Q-invariance gate) and is by
  // construction the K-invariant subcomplex that the splitting pairs with.
  SimplicialComplex wsing = family_singular_subcomplex(davis, q_action);

  // Independent model of the pair, plus the degree-shift assertions.
  ConePairReport rep = cone_pair_cohomology_check(l, k);
  cert.h_cone_pair = rep.pair_cohomology.at(cert.n + 1);
  cert.cone_pair_matches = cert.h_cone_pair == cert.h_nerve_pair;

  if (davis.quotient().has_parity()) {
    SplittingMaps maps = relative_splitting_maps(davis, k);
    cert.splitting_verified = true;  // build_splitting_maps throws otherwise
    cert.h_davis_pair =
        cohomology(maps.target, Coefficients::integers()).at(cert.n + 1);
    if (!(cohomology(maps.domain, Coefficients::integers()).at(cert.n + 1) ==
          cert.h_cone_pair))
      fail(errc::verification_failed, "the two cone pair models disagree");
  } else if (cert.nerve_pair_nonzero) {
    // The lower bound claims a nonzero summand, but the ε-signed transfer
    // needs ε; nothing weaker would certify the claim.
    fail(errc::parity_undefined,
         "the quotient kernel meets odd-length words, so the signed transfer "
         "is unavailable and the nonzero lower bound cannot be certified");
  } else {
    // Nothing to split: the lower bound is vacuous, so only the pair groups
    // are recorded.  splitting_verified stays false.
    cert.h_davis_pair =
        cohomology(relative_chain_complex(davis.complex(),
                                          invariant_subcomplex(davis, k)),
                   Coefficients::integers())
            .at(cert.n + 1);
  }

  std::string v = top_cell_barycenter(l);
  if (!v.empty()) {
    cert.deleted_vertex = v;
    cert.deleted_vertex_witness =
        cohomology(chain_complex_of(vertex_deletion(l, v), true),
                   Coefficients::integers())
            .at(cert.n - 1);
  }
  if (k.vertex_count() > 0 && is_full_subcomplex(l, k))
    cert.full_singular_witness =
        cohomology(chain_complex_of(k, true), Coefficients::integers())
            .at(cert.n - 1);
  return cert;
}

}  // namespace davisforge
