#include "davisforge/davis.hpp"

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "davisforge/chain_complex.hpp"
#include "davisforge/coxeter.hpp"
#include "davisforge/errors.hpp"
#include "davisforge/group_action.hpp"
#include "test_support.hpp"

using namespace davisforge;

namespace {

SimplicialComplex single_point() {
  return SimplicialComplex::from_maximal({"a"}, {{"a"}});
}

SimplicialComplex two_points() {
  return SimplicialComplex::from_maximal({"a", "b"}, {{"a"}, {"b"}});
}

SimplicialComplex edge_ab() {
  return SimplicialComplex::from_maximal({"a", "b"}, {{"a", "b"}});
}

SimplicialComplex four_cycle() {
  return SimplicialComplex::from_maximal(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

SimplicialComplex solid_triangle() {
  return SimplicialComplex::from_maximal({"a", "b", "c"}, {{"a", "b", "c"}});
}

SimplicialComplex rp2_six() {
  return SimplicialComplex::from_maximal(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2", "5"},
       {"1", "2", "6"},
       {"1", "3", "4"},
       {"1", "3", "6"},
       {"1", "4", "5"},
       {"2", "3", "4"},
       {"2", "3", "5"},
       {"2", "4", "6"},
       {"3", "5", "6"},
       {"4", "5", "6"}});
}

DavisQuotientComplex ab_davis(const SimplicialComplex& l) {
  return davis_quotient(abelianization_quotient(coxeter_from_flag(l)));
}

std::vector<long long> fvec(const SimplicialComplex& x) {
  return x.face_vector();
}

// All simplices as sorted name tuples, optionally through a renaming.
std::set<std::vector<std::string>> simplex_names(
    const SimplicialComplex& x,
    const std::map<std::string, std::string>* rename = nullptr) {
  std::set<std::vector<std::string>> out;
  for (const auto& s : x.simplices()) {
    std::vector<std::string> names;
    for (VertexIx v : s) {
      std::string n = x.vertex_name(v);
      names.push_back(rename ? rename->at(n) : n);
    }
    std::sort(names.begin(), names.end());
    out.insert(names);
  }
  return out;
}

// For a one-element quotient group: the Lemma 3.3 dictionary from Davis
// vertices to the cone CL' (type ∅ is the apex, type T its barycenter).
std::map<std::string, std::string> cone_dictionary(
    const DavisQuotientComplex& d) {
  const SimplicialComplex& nerve = d.system().nerve();
  std::map<std::string, std::string> m;
  for (VertexIx v = 0; v < d.complex().vertex_count(); ++v) {
    DavisVertex info = d.vertex_info(v);
    m[d.complex().vertex_name(v)] =
        info.type == 0 ? "*"
                       : subdivision_vertex_name(nerve.names_of(d.type(info.type)));
  }
  return m;
}

bool poset_comparable(const DavisQuotientComplex& d, VertexIx v, VertexIx w) {
  DavisVertex a = d.vertex_info(v), b = d.vertex_info(w);
  if (a.type == b.type) return false;
  if (a.type > b.type) std::swap(a, b);  // types are listed smallest first
  const auto& ta = d.type(a.type);
  const auto& tb = d.type(b.type);
  if (ta.size() >= tb.size() ||
      !std::includes(tb.begin(), tb.end(), ta.begin(), ta.end()))
    return false;
  long rep = a.type == 0 ? d.parabolic(0).cosets[a.coset][0]
                         : d.parabolic(a.type).cosets[a.coset][0];
  return d.parabolic(b.type).coset_of[rep] == b.coset;
}

// Edges of the realization are exactly the comparable vertex pairs.
void check_edges_match_poset(const DavisQuotientComplex& d) {
  const SimplicialComplex& x = d.complex();
  for (VertexIx v = 0; v < x.vertex_count(); ++v)
    for (VertexIx w = v + 1; w < x.vertex_count(); ++w) {
      INFO(x.vertex_name(v) << " vs " << x.vertex_name(w));
      CHECK(x.contains_key({v, w}) == poset_comparable(d, v, w));
    }
}

// The Lemma 3.7 sum applied to a chain whose smallest type is nonempty; the
// parity pairing g ↔ g·t for t in T_0 must cancel every translate.
void check_psi_kills_nonapex_chains(const DavisQuotientComplex& davis) {
  REQUIRE(davis.quotient().has_parity());
  DavisQuotientComplex cone = davis_quotient(trivial_quotient(davis.system()));
  long order = davis.quotient().order();
  for (const auto& s : cone.complex().simplices()) {
    if (cone.vertex_info(s[0]).type == 0) continue;
    std::map<std::vector<VertexIx>, long long> image;
    for (long g = 0; g < order; ++g) {
      std::vector<VertexIx> translated;
      for (VertexIx v : s) {
        int t = cone.vertex_info(v).type;
        translated.push_back(davis.vertex(t, davis.parabolic(t).coset_of[g]));
      }
      image[translated] += davis.quotient().parity(g);
    }
    for (const auto& [chain, coefficient] : image) {
      INFO("chain starting at " << davis.complex().vertex_name(chain[0]));
      CHECK(coefficient == 0);
    }
  }
}

SparseMat identity_matrix(long n) {
  SparseMat id(n, n);
  for (long i = 0; i < n; ++i) id.set(i, i, 1);
  return id;
}

}  // namespace

TEST_CASE("spherical subsets are the empty set plus the nerve") {
  SECTION("edge") {
    auto subsets = spherical_subsets(coxeter_from_flag(edge_ab()));
    REQUIRE(subsets.size() == 4);
    CHECK(subsets[0].empty());
    CHECK(subsets[1] == std::vector<VertexIx>{0});
    CHECK(subsets[2] == std::vector<VertexIx>{1});
    CHECK(subsets[3] == std::vector<VertexIx>{0, 1});
  }
  SECTION("4-cycle skips the diagonals") {
    auto subsets = spherical_subsets(coxeter_from_flag(four_cycle()));
    REQUIRE(subsets.size() == 9);  // ∅, 4 vertices, 4 edges
    std::set<std::vector<VertexIx>> all(subsets.begin(), subsets.end());
    CHECK(all.size() == 9);
    CHECK_FALSE(all.count({0, 2}));  // {a, c}
    CHECK_FALSE(all.count({1, 3}));  // {b, d}
  }
}

TEST_CASE("davis quotient oracles") {
  SECTION("point with one-element quotient group is a single edge") {
    DavisQuotientComplex d =
        davis_quotient(trivial_quotient(coxeter_from_flag(single_point())));
    CHECK(fvec(d.complex()) == std::vector<long long>{2, 1});
    CHECK(d.complex().vertex_name(0) == "t0000.c0000000");
    CHECK(d.complex().vertex_name(1) == "t0001.c0000000");
    CHECK(fvec(sing_subcomplex(d)) == std::vector<long long>{1});
  }
  SECTION("point with faithful quotient is the two-edge path") {
    DavisQuotientComplex d = ab_davis(single_point());
    CHECK(d.quotient().order() == 2);
    CHECK(fvec(d.complex()) == std::vector<long long>{3, 2});
    CHECK(reduced_homology(d.complex(), Coefficients::integers()).is_trivial());
  }
  SECTION("edge with faithful quotient is the subdivided square") {
    DavisQuotientComplex d = ab_davis(edge_ab());
    CHECK(d.quotient().order() == 4);
    CHECK(fvec(d.complex()) == std::vector<long long>{9, 16, 8});
    CHECK(d.complex().euler_characteristic() == 1);
    CHECK(reduced_homology(d.complex(), Coefficients::integers()).is_trivial());
    // The singular part is the plus-sign: four spokes into the center.
    CHECK(fvec(sing_subcomplex(d)) == std::vector<long long>{5, 4});
  }
  SECTION("two points with abelianization is the 8-edge circle") {
    DavisQuotientComplex d = ab_davis(two_points());
    CHECK(fvec(d.complex()) == std::vector<long long>{8, 8});
    CHECK(is_connected(d.complex()));
    HomologySummary h =
        homology(chain_complex_of(d.complex(), false), Coefficients::integers());
    CHECK(h.at(0) == GroupSummary{1, {}});
    CHECK(h.at(1) == GroupSummary{1, {}});
    SimplicialComplex sing = sing_subcomplex(d);
    CHECK(fvec(sing) == std::vector<long long>{4});
    CHECK(is_full_subcomplex(d.complex(), sing));
  }
  SECTION("4-cycle with abelianization is a torus") {
    DavisQuotientComplex d = ab_davis(four_cycle());
    CHECK(d.quotient().order() == 16);
    CHECK(fvec(d.complex()) == std::vector<long long>{64, 192, 128});
    CHECK(d.complex().euler_characteristic() == 0);
    HomologySummary h =
        homology(chain_complex_of(d.complex(), false), Coefficients::integers());
    CHECK(h.at(0) == GroupSummary{1, {}});
    CHECK(h.at(1) == GroupSummary{2, {}});
    CHECK(h.at(2) == GroupSummary{1, {}});
  }
  SECTION("4-cycle with parity quotient") {
    DavisQuotientComplex d =
        davis_quotient(parity_quotient(coxeter_from_flag(four_cycle())));
    CHECK(d.quotient().order() == 2);
    CHECK(d.quotient().has_parity());
    CHECK(fvec(d.complex()) == std::vector<long long>{10, 24, 16});
    CHECK(d.complex().euler_characteristic() == 2);
  }
  SECTION("vertex ids round-trip through vertex_info") {
    DavisQuotientComplex d = ab_davis(two_points());
    for (VertexIx v = 0; v < d.complex().vertex_count(); ++v) {
      DavisVertex info = d.vertex_info(v);
      CHECK(d.vertex(info.type, info.coset) == v);
    }
    CHECK(std::is_sorted(d.complex().vertex_names().begin(),
                         d.complex().vertex_names().end()));
  }
  SECTION("projected size check fires before enumeration") {
    FiniteQuotient q = abelianization_quotient(coxeter_from_flag(four_cycle()));
    REQUIRE_THROWS_MATCHES(davis_quotient(q, 100), error,
                           dftest::has_code(errc::quotient_too_large));
  }
}

TEST_CASE("one-element quotient group gives the chamber pair") {
  auto check_chamber = [](const SimplicialComplex& l) {
    DavisQuotientComplex d =
        davis_quotient(trivial_quotient(coxeter_from_flag(l)));
    std::map<std::string, std::string> rename = cone_dictionary(d);
    Subdivision sub = barycentric_subdivision(l);
    CHECK(simplex_names(d.complex(), &rename) ==
          simplex_names(cone(sub.complex, "*")));
    CHECK(simplex_names(sing_subcomplex(d), &rename) ==
          simplex_names(sub.complex));
  };
  check_chamber(edge_ab());
  check_chamber(four_cycle());
  check_chamber(solid_triangle());
  dftest::Rng rng(20260814);
  for (int trial = 0; trial < 3; ++trial)
    check_chamber(dftest::flag_skeleton(dftest::random_complex(rng, 6, 5, 3)));
}

TEST_CASE("davis vertex blocks follow the coset formula") {
  auto check_counts = [](const DavisQuotientComplex& d) {
    long total = 0;
    for (int t = 0; t < d.type_count(); ++t) {
      const ParabolicImage& p = d.parabolic(t);
      CHECK(p.coset_count() * p.subgroup_order() == d.quotient().order());
      total += p.coset_count();
    }
    CHECK(total == d.complex().vertex_count());
    CHECK(d.complex().dimension() == d.system().nerve().dimension() + 1);
  };
  SECTION("named instances") {
    for (const auto& l :
         {edge_ab(), two_points(), four_cycle(), solid_triangle()}) {
      DavisQuotientComplex d = ab_davis(l);
      check_counts(d);
      // Abelianized parabolic subgroups are independent involutions.
      for (int t = 0; t < d.type_count(); ++t)
        CHECK(d.parabolic(t).subgroup_order() == (1L << d.type(t).size()));
    }
    DavisQuotientComplex p =
        davis_quotient(parity_quotient(coxeter_from_flag(four_cycle())));
    check_counts(p);
    for (int t = 1; t < p.type_count(); ++t)
      CHECK(p.parabolic(t).subgroup_order() == 2);
  }
  SECTION("random flag nerves") {
    dftest::Rng rng(7771);
    for (int trial = 0; trial < 4; ++trial) {
      SimplicialComplex l =
          dftest::flag_skeleton(dftest::random_complex(rng, 5, 4, 3));
      if (l.vertex_count() == 0) continue;
      check_counts(ab_davis(l));
    }
  }
}

TEST_CASE("davis edges are exactly the comparable coset pairs") {
  check_edges_match_poset(ab_davis(edge_ab()));
  check_edges_match_poset(ab_davis(two_points()));
  check_edges_match_poset(
      davis_quotient(parity_quotient(coxeter_from_flag(four_cycle()))));
}

TEST_CASE("invariant subcomplexes") {
  SimplicialComplex l = edge_ab();
  DavisQuotientComplex d = ab_davis(l);
  SECTION("K = L recovers the whole quotient") {
    CHECK(invariant_subcomplex(d, l) == d.complex());
  }
  SECTION("K = ∅ leaves the free-orbit vertices") {
    SimplicialComplex inv = invariant_subcomplex(d, full_subcomplex(l, {}));
    CHECK(fvec(inv) == std::vector<long long>{4});
  }
  SECTION("K = one endpoint") {
    SimplicialComplex inv =
        invariant_subcomplex(d, full_subcomplex(l, {"a"}));
    CHECK(fvec(inv) == std::vector<long long>{6, 4});
    CHECK(is_full_subcomplex(d.complex(), inv));
    // Two cosets of ⟨a⟩, each joined to its two group elements.
    CHECK(reduced_homology(inv, Coefficients::integers()).at(0) ==
          GroupSummary{1, {}});
  }
  SECTION("K must live in the nerve") {
    SimplicialComplex stray = SimplicialComplex::from_maximal({"z"}, {{"z"}});
    REQUIRE_THROWS_MATCHES(invariant_subcomplex(d, stray), error,
                           dftest::has_code(errc::not_subcomplex));
  }
}

TEST_CASE("family singular subcomplex") {
  SimplicialComplex l = four_cycle();
  DavisQuotientComplex d = ab_davis(l);
  SECTION("C2 swapping the b/d corners") {
    SimplicialAction act = SimplicialAction::from_generators(
        l, {{"s", {{"b", "d"}, {"d", "b"}}}});
    SimplicialComplex fam = family_singular_subcomplex(d, act);
    CHECK(fam == invariant_subcomplex(d, full_subcomplex(l, {"a", "c"})));
    CHECK(fvec(fam) == std::vector<long long>{32, 32});
    HomologySummary h =
        homology(chain_complex_of(fam, false), Coefficients::integers());
    CHECK(h.at(0) == GroupSummary{4, {}});  // four disjoint 8-cycles
    CHECK(h.at(1) == GroupSummary{4, {}});
  }
  SECTION("rotation does not preserve a lopsided quotient") {
    CoxeterSystem sys = coxeter_from_flag(l);
    Permutation swap01{1, 0}, id2{0, 1};
    FiniteQuotient lopsided =
        quotient_from_permutations(sys, {swap01, id2, id2, id2});
    REQUIRE(lopsided.order() == 2);
    DavisQuotientComplex dl = davis_quotient(lopsided);
    SimplicialAction rotation = SimplicialAction::from_generators(
        l, {{"r", {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}}});
    REQUIRE_THROWS_MATCHES(family_singular_subcomplex(dl, rotation), error,
                           dftest::has_code(errc::not_q_invariant));
  }
  SECTION("non-admissible actions are rejected") {
    DavisQuotientComplex de = ab_davis(edge_ab());
    SimplicialAction flip = SimplicialAction::from_generators(
        edge_ab(), {{"s", {{"a", "b"}, {"b", "a"}}}});
    REQUIRE_THROWS_MATCHES(family_singular_subcomplex(de, flip), error,
                           dftest::has_code(errc::not_admissible));
  }
}

TEST_CASE("induced action on the quotient") {
  SECTION("two points swapped") {
    SimplicialComplex l = two_points();
    DavisQuotientComplex d = ab_davis(l);
    SimplicialAction swap = SimplicialAction::from_generators(
        l, {{"s", {{"a", "b"}, {"b", "a"}}}});
    SimplicialAction induced = induced_action_on_quotient(d, swap);
    CHECK(induced.group().order() == 2);
    long g = induced.group().generator_element(0);
    // Type {a} vertices land on type {b} vertices and vice versa.
    CHECK(d.vertex_info(induced.apply(g, d.vertex(1, 0))).type == 2);
    CHECK(d.vertex_info(induced.apply(g, d.vertex(2, 0))).type == 1);
    std::set<std::string> sing_names;
    SimplicialComplex sing = sing_subcomplex(d);
    for (const auto& n : sing.vertex_names()) sing_names.insert(n);
    for (const auto& n : sing.vertex_names()) {
      VertexIx image = induced.apply(g, d.complex().index_of(n));
      CHECK(sing_names.count(d.complex().vertex_name(image)) == 1);
    }
  }
  SECTION("b/d swap on the 4-cycle torus") {
    SimplicialComplex l = four_cycle();
    DavisQuotientComplex d = ab_davis(l);
    SimplicialAction act = SimplicialAction::from_generators(
        l, {{"s", {{"b", "d"}, {"d", "b"}}}});
    SimplicialAction induced = induced_action_on_quotient(d, act);
    CHECK(induced.group().order() == 2);
    CHECK(is_admissible(induced));
    long g = induced.group().generator_element(0);
    SimplicialComplex fam = family_singular_subcomplex(d, act);
    std::set<std::string> fam_names;
    for (const auto& n : fam.vertex_names()) fam_names.insert(n);
    for (const auto& n : fam.vertex_names()) {
      VertexIx image = induced.apply(g, d.complex().index_of(n));
      CHECK(fam_names.count(d.complex().vertex_name(image)) == 1);
    }
  }
}

TEST_CASE("splitting maps") {
  SECTION("parity character is required") {
    DavisQuotientComplex d =
        davis_quotient(trivial_quotient(coxeter_from_flag(single_point())));
    REQUIRE_THROWS_MATCHES(splitting_maps(d), error,
                           dftest::has_code(errc::parity_undefined));
    // A quotient killing one of two free generators has odd words in N.
    CoxeterSystem sys = coxeter_from_flag(two_points());
    Permutation swap01{1, 0}, id2{0, 1};
    DavisQuotientComplex lop =
        davis_quotient(quotient_from_permutations(sys, {swap01, id2}));
    REQUIRE_THROWS_MATCHES(splitting_maps(lop), error,
                           dftest::has_code(errc::parity_undefined));
  }
  SECTION("point: signed pair of path edges") {
    DavisQuotientComplex d = ab_davis(single_point());
    SplittingMaps maps = splitting_maps(d);
    REQUIRE(maps.domain.dim(1) == 1);
    REQUIRE(maps.target.dim(1) == 2);
    const SimplicialComplex& x = d.complex();
    long identity_edge = maps.target.index_of(
        1, subdivision_vertex_name(
               {x.vertex_name(d.vertex(0, 0)), x.vertex_name(d.vertex(1, 0))}));
    long other_edge = maps.target.index_of(
        1, subdivision_vertex_name(
               {x.vertex_name(d.vertex(0, 1)), x.vertex_name(d.vertex(1, 0))}));
    REQUIRE(identity_edge >= 0);
    REQUIRE(other_edge >= 0);
    CHECK(maps.psi.at(1).get(identity_edge, 0) == 1);
    CHECK(maps.psi.at(1).get(other_edge, 0) == -1);
    CHECK(maps.phi.at(1) * maps.psi.at(1) == identity_matrix(1));
  }
  SECTION("two points: alternating sums around the 8-cycle") {
    DavisQuotientComplex d = ab_davis(two_points());
    SplittingMaps maps = splitting_maps(d);
    REQUIRE(maps.domain.dim(1) == 2);
    REQUIRE(maps.target.dim(1) == 8);
    for (long col = 0; col < 2; ++col) {
      const auto& column = maps.psi.at(1).column(col);
      CHECK(column.size() == 4);
      bigint sum = 0;
      for (const auto& [row, value] : column) {
        CHECK((value == 1 || value == -1));
        sum += value;
      }
      CHECK(sum == 0);
    }
    CHECK(maps.phi.at(1) * maps.psi.at(1) == identity_matrix(2));
  }
  SECTION("chains with nonempty smallest type cancel to zero") {
    check_psi_kills_nonapex_chains(ab_davis(edge_ab()));
    check_psi_kills_nonapex_chains(ab_davis(four_cycle()));
    check_psi_kills_nonapex_chains(
        davis_quotient(parity_quotient(coxeter_from_flag(four_cycle()))));
  }
  SECTION("relative form on the 4-cycle with K = the fixed corners") {
    SimplicialComplex l = four_cycle();
    DavisQuotientComplex d = ab_davis(l);
    SplittingMaps maps =
        relative_splitting_maps(d, full_subcomplex(l, {"a", "c"}));
    CHECK(maps.domain.dim(0) == 0);
    CHECK(maps.domain.dim(1) == 6);
    CHECK(maps.domain.dim(2) == 8);
    CHECK(maps.target.dim(0) == 32);
    CHECK(maps.target.dim(1) == 160);
    CHECK(maps.target.dim(2) == 128);
    CHECK(cohomology(maps.domain, Coefficients::integers()).at(2) ==
          GroupSummary{2, {}});
    CHECK(cohomology(maps.target, Coefficients::integers()).at(2) ==
          GroupSummary{4, {}});
  }
  SECTION("relative form with K = L is a pair of zero complexes") {
    SimplicialComplex l = four_cycle();
    SplittingMaps maps = relative_splitting_maps(ab_davis(l), l);
    CHECK(maps.domain.total_dim() == 0);
    CHECK(maps.target.total_dim() == 0);
  }
}

TEST_CASE("cone pair cohomology check") {
  SECTION("K = L gives zero on both sides") {
    SimplicialComplex l = edge_ab();
    ConePairReport rep = cone_pair_cohomology_check(l, l);
    CHECK(rep.pair_cohomology.is_trivial());
    CHECK(rep.base_cohomology.is_trivial());
  }
  SECTION("circle relative two points") {
    ConePairReport rep = cone_pair_cohomology_check(
        four_cycle(), full_subcomplex(four_cycle(), {"a", "c"}));
    CHECK(rep.pair_cohomology.at(2) == GroupSummary{2, {}});
    CHECK(rep.base_cohomology.at(1) == GroupSummary{2, {}});
  }
  SECTION("disc relative its boundary circle") {
    SimplicialComplex boundary = SimplicialComplex::from_maximal(
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    ConePairReport rep = cone_pair_cohomology_check(solid_triangle(), boundary);
    CHECK(rep.pair_cohomology.at(3) == GroupSummary{1, {}});
    CHECK(rep.base_cohomology.at(2) == GroupSummary{1, {}});
  }
  SECTION("projective plane keeps its torsion through the shift") {
    ConePairReport rep =
        cone_pair_cohomology_check(rp2_six(), full_subcomplex(rp2_six(), {}));
    CHECK(rep.pair_cohomology.at(3) == GroupSummary{0, {2}});
    CHECK(rep.base_cohomology.at(2) == GroupSummary{0, {2}});
    CHECK(rep.pair_cohomology.at(2).trivial());
  }
  SECTION("K must be a subcomplex") {
    SimplicialComplex stray = SimplicialComplex::from_maximal({"z"}, {{"z"}});
    REQUIRE_THROWS_MATCHES(cone_pair_cohomology_check(edge_ab(), stray), error,
                           dftest::has_code(errc::not_subcomplex));
  }
}

TEST_CASE("theorem 1.1 certificate") {
  SECTION("4-cycle with the corner swap") {
    SimplicialComplex l = four_cycle();
    SimplicialAction act = SimplicialAction::from_generators(
        l, {{"s", {{"b", "d"}, {"d", "b"}}}});
    FiniteQuotient q = abelianization_quotient(coxeter_from_flag(l));
    Theorem1Certificate cert = theorem1_certificate(l, act, q);
    CHECK(cert.n == 1);
    CHECK(cert.davis_dimension == 2);
    CHECK(cert.quotient_order == 16);
    CHECK(cert.group_order == 2);
    CHECK_FALSE(cert.l_acyclic);  // the circle: lower bound machinery only
    CHECK(cert.h_nerve_pair == GroupSummary{2, {}});
    CHECK(cert.nerve_pair_nonzero);
    CHECK(cert.h_cone_pair == GroupSummary{2, {}});
    CHECK(cert.cone_pair_matches);
    CHECK(cert.h_davis_pair == GroupSummary{4, {}});
    CHECK(cert.splitting_verified);
    CHECK(cert.deleted_vertex.empty());
    CHECK_FALSE(cert.deleted_vertex_witness.has_value());
    REQUIRE(cert.full_singular_witness.has_value());
    CHECK(*cert.full_singular_witness == GroupSummary{1, {}});
  }
  SECTION("acyclic nerve with trivial symmetry group") {
    SimplicialComplex l = solid_triangle();
    SimplicialAction act = SimplicialAction::trivial(l);
    FiniteQuotient q = abelianization_quotient(coxeter_from_flag(l));
    Theorem1Certificate cert = theorem1_certificate(l, act, q);
    CHECK(cert.n == 2);
    CHECK(cert.davis_dimension == 3);
    CHECK(cert.quotient_order == 8);
    CHECK(cert.group_order == 1);
    CHECK(cert.l_acyclic);
    CHECK(cert.h_nerve_pair.trivial());
    CHECK_FALSE(cert.nerve_pair_nonzero);
    CHECK(cert.h_cone_pair.trivial());
    CHECK(cert.cone_pair_matches);
    CHECK(cert.h_davis_pair.trivial());
    CHECK(cert.splitting_verified);
    CHECK_FALSE(cert.full_singular_witness.has_value());
  }
  SECTION("no parity character: allowed only when the lower bound is vacuous") {
    SimplicialComplex l = solid_triangle();
    Theorem1Certificate cert = theorem1_certificate(
        l, SimplicialAction::trivial(l), trivial_quotient(coxeter_from_flag(l)));
    CHECK(cert.quotient_order == 1);
    CHECK(cert.h_nerve_pair.trivial());
    CHECK(cert.cone_pair_matches);
    CHECK_FALSE(cert.splitting_verified);  // the transfer needs ε, Ḡ = 1 has none
    CHECK(cert.h_davis_pair.trivial());

    SimplicialComplex circle = four_cycle();  // H^1(circle, ∅) = Z is a real claim
    REQUIRE_THROWS_MATCHES(
        theorem1_certificate(circle, SimplicialAction::trivial(circle),
                             trivial_quotient(coxeter_from_flag(circle))),
        error, dftest::has_code(errc::parity_undefined));
  }
  SECTION("mismatched inputs are rejected") {
    SimplicialComplex l = four_cycle();
    SimplicialAction wrong_complex = SimplicialAction::trivial(edge_ab());
    FiniteQuotient q = abelianization_quotient(coxeter_from_flag(l));
    REQUIRE_THROWS_MATCHES(theorem1_certificate(l, wrong_complex, q), error,
                           dftest::has_code(errc::invalid_input));
    FiniteQuotient wrong_system =
        abelianization_quotient(coxeter_from_flag(edge_ab()));
    REQUIRE_THROWS_MATCHES(
        theorem1_certificate(l, SimplicialAction::trivial(l), wrong_system),
        error, dftest::has_code(errc::invalid_input));
  }
}
