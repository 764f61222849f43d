#include "davisforge/gallery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "davisforge/davis.hpp"
#include "davisforge/pi1.hpp"
#include "test_support.hpp"

using namespace davisforge;

namespace {

PolygonalComplex square_cells(std::vector<std::string> cycle = {"a", "b", "c",
                                                                "d"}) {
  PolygonalComplex pc;
  pc.vertices = {"a", "b", "c", "d"};
  pc.edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}};
  pc.polygons = {std::move(cycle)};
  return pc;
}

std::vector<long long> fvec(const SimplicialComplex& x) {
  return x.face_vector();
}

}  // namespace

TEST_CASE("polygonal subdivision") {
  SECTION("a square becomes the subdivided square") {
    SimplicialComplex s = subdivide_polygonal(square_cells());
    REQUIRE(fvec(s) == std::vector<long long>{9, 16, 8});
    REQUIRE(s.euler_characteristic() == 1);
    REQUIRE(is_flag(s));
    REQUIRE(reduced_homology(s, Coefficients::integers()).is_trivial());
    REQUIRE(s.index_of("{a|b|c|d}") >= 0);
  }

  SECTION("the polygon name ignores rotation and reflection") {
    SimplicialComplex plain = subdivide_polygonal(square_cells());
    SimplicialComplex rotated =
        subdivide_polygonal(square_cells({"c", "d", "a", "b"}));
    SimplicialComplex reflected =
        subdivide_polygonal(square_cells({"d", "c", "b", "a"}));
    REQUIRE(plain == rotated);
    REQUIRE(plain == reflected);
  }

  SECTION("a triangle matches the barycentric subdivision of a 2-simplex") {
    PolygonalComplex pc;
    pc.vertices = {"a", "b", "c"};
    pc.edges = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
    pc.polygons = {{"a", "b", "c"}};
    SimplicialComplex full =
        SimplicialComplex::from_maximal({"a", "b", "c"}, {{"a", "b", "c"}});
    REQUIRE(subdivide_polygonal(pc) == barycentric_subdivision(full).complex);
  }

  SECTION("bare edges and isolated vertices subdivide too") {
    PolygonalComplex pc;
    pc.vertices = {"a", "b", "c"};
    pc.edges = {{"a", "b"}};
    SimplicialComplex s = subdivide_polygonal(pc);
    REQUIRE(fvec(s) == std::vector<long long>{4, 2});
  }

  SECTION("two polygons on the same vertex set stay distinct") {
    PolygonalComplex pc;
    pc.vertices = {"a", "b", "c", "d"};
    pc.edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
                {"a", "c"}, {"b", "d"}};
    pc.polygons = {{"a", "b", "c", "d"}, {"a", "c", "b", "d"}};
    SimplicialComplex s = subdivide_polygonal(pc);
    REQUIRE(s.vertex_count() == 4 + 6 + 2);
  }

  SECTION("validation") {
    PolygonalComplex dup;
    dup.vertices = {"a", "a"};
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(dup), error,
                           dftest::has_code(errc::name_collision));

    PolygonalComplex stray;
    stray.vertices = {"a", "b"};
    stray.edges = {{"a", "z"}};
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(stray), error,
                           dftest::has_code(errc::unknown_vertex));

    PolygonalComplex loop;
    loop.vertices = {"a"};
    loop.edges = {{"a", "a"}};
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(loop), error,
                           dftest::has_code(errc::invalid_input));

    PolygonalComplex twice;
    twice.vertices = {"a", "b"};
    twice.edges = {{"a", "b"}, {"b", "a"}};
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(twice), error,
                           dftest::has_code(errc::invalid_input));

    PolygonalComplex smallgon = square_cells({"a", "b"});
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(smallgon), error,
                           dftest::has_code(errc::invalid_input));

    PolygonalComplex revisit = square_cells({"a", "b", "a", "d"});
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(revisit), error,
                           dftest::has_code(errc::invalid_input));

    PolygonalComplex chord = square_cells({"a", "b", "d", "c"});
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(chord), error,
                           dftest::has_code(errc::invalid_input));

    PolygonalComplex repeat = square_cells();
    repeat.polygons.push_back({"b", "c", "d", "a"});
    REQUIRE_THROWS_MATCHES(subdivide_polygonal(repeat), error,
                           dftest::has_code(errc::invalid_input));
  }
}

TEST_CASE("the pentagon skeleton") {
  PoincareSkeleton pk = poincare_two_skeleton();

  SECTION("cell counts") {
    REQUIRE(pk.cells.vertices.size() == 5);
    REQUIRE(pk.cells.edges.size() == 10);
    REQUIRE(pk.cells.polygons.size() == 6);
    for (const auto& poly : pk.cells.polygons) {
      REQUIRE(poly.size() == 5);
      REQUIRE(std::set<std::string>(poly.begin(), poly.end()).size() == 5);
    }
    REQUIRE(fvec(pk.complex) == std::vector<long long>{21, 80, 60});
    REQUIRE(pk.complex.euler_characteristic() == 1);
    REQUIRE(is_flag(pk.complex));
  }

  SECTION("every edge of the complete graph lies on exactly three pentagons") {
    std::map<std::pair<std::string, std::string>, int> count;
    for (const auto& poly : pk.cells.polygons)
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const std::string& u = poly[i];
        const std::string& v = poly[(i + 1) % poly.size()];
        ++count[{std::min(u, v), std::max(u, v)}];
      }
    REQUIRE(count.size() == 10);
    for (const auto& [e, n] : count) REQUIRE(n == 3);
  }

  SECTION("pentagon barycenters") {
    REQUIRE(pk.pentagon_barycenters.size() == 6);
    REQUIRE(std::is_sorted(pk.pentagon_barycenters.begin(),
                           pk.pentagon_barycenters.end()));
    for (const std::string& c : pk.pentagon_barycenters)
      REQUIRE(pk.complex.index_of(c) >= 0);
  }

  SECTION("the rotation action") {
    REQUIRE(pk.action.group().order() == 60);
    REQUIRE(is_admissible(pk.action));
  }

  SECTION("construction is deterministic") {
    PoincareSkeleton again = poincare_two_skeleton();
    REQUIRE(again.complex == pk.complex);
    REQUIRE(again.pentagon_barycenters == pk.pentagon_barycenters);
    REQUIRE(again.action.group().order() == 60);
  }
}

TEST_CASE("pentagon skeleton verification") {
  PoincareSkeleton pk = poincare_two_skeleton();

  SECTION("all claims hold") {
    PoincareReport r = verify_poincare(pk.complex, pk.action);
    REQUIRE(r.reduced.is_trivial());
    REQUIRE(r.no_global_fixed_point);
    REQUIRE(r.singular_is_one_skeleton);
    REQUIRE(fvec(r.singular) == std::vector<long long>{21, 80});
    REQUIRE(!r.singular_full);
    REQUIRE(r.pair_h2 == GroupSummary{60, {}});
    REQUIRE(r.pi1_order == 120);
    REQUIRE(r.deleted_vertex_h1 == GroupSummary{1, {}});
  }

  SECTION("the trivial action on the same complex fails verification") {
    REQUIRE_THROWS_MATCHES(
        verify_poincare(pk.complex, SimplicialAction::trivial(pk.complex)),
        error, dftest::has_code(errc::verification_failed));
  }

  SECTION("a mismatched complex is an input error") {
    SimplicialComplex other = SimplicialComplex::from_maximal({"a"}, {});
    REQUIRE_THROWS_MATCHES(verify_poincare(other, pk.action), error,
                           dftest::has_code(errc::invalid_input));
  }

  SECTION("soluble subgroups fix acyclic subcomplexes; the whole group fixes nothing") {
    const FiniteGroup& g = pk.action.group();
    int soluble_seen = 0;
    for (const std::vector<long>& h : g.all_subgroups()) {
      if (h.size() == 1) continue;
      if (!g.is_soluble(h)) continue;
      ++soluble_seen;
      SimplicialComplex fixed = fixed_subcomplex(pk.action, h);
      REQUIRE(fixed.vertex_count() > 0);
      REQUIRE(reduced_homology(fixed, Coefficients::integers()).is_trivial());
    }
    // 15 + 10 + 5 + 6 of prime-power order, 10 dihedral of order six,
    // 6 dihedral of order ten, 5 tetrahedral: every proper nontrivial
    // subgroup of the 60-element group is soluble.
    REQUIRE(soluble_seen == 57);
    std::vector<long> everyone(static_cast<std::size_t>(g.order()));
    std::iota(everyone.begin(), everyone.end(), 0L);
    REQUIRE(!g.is_soluble(everyone));
    REQUIRE(fixed_subcomplex(pk.action, everyone).vertex_count() == 0);
  }
}

TEST_CASE("equivariant Moore-space chain models") {
  SECTION("shape of the (2,3) model") {
    EquivariantCWChainModel m = moore_chain_model(2, 3);
    REQUIRE(m.complex.lowest() == 0);
    REQUIRE(m.complex.highest() == 3);
    REQUIRE(m.complex.dim(2) == 4);
    REQUIRE(m.complex.dim(3) == 3);
    REQUIRE(m.complex.labels(2)[0] == "f");
    REQUIRE(m.fixed_cells == std::vector<std::string>{"v", "c", "f"});
    REQUIRE(m.complex.boundary(2).get(0, 0) == 2);  // df = p c
    REQUIRE(m.complex.boundary(2).get(0, 1) == 1);  // df_i = c
    REQUIRE(m.relative.lowest() == 2);
    REQUIRE(m.relative.dim(2) == 3);
    REQUIRE(m.relative.dim(3) == 3);
  }

  SECTION("verification of the three standard prime pairs") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 5}, {5, 3}}) {
      EquivariantCWChainModel m = moore_chain_model(p, q);
      MooreReport r = verify_moore(m);
      REQUIRE(r.total.at(0) == GroupSummary{1, {}});
      REQUIRE(r.total.at(1).trivial());
      REQUIRE(r.total.at(2).trivial());
      REQUIRE(r.total.at(3).trivial());
      REQUIRE(r.fixed_h1 == GroupSummary{0, {bigint(p)}});
      REQUIRE(r.relative_h3 == GroupSummary{0, {bigint(p)}});
      REQUIRE(abs(r.circulant_det) == p);
    }
  }

  SECTION("prime validation") {
    REQUIRE_THROWS_MATCHES(moore_chain_model(3, 3), error,
                           dftest::has_code(errc::bad_primes));
    REQUIRE_THROWS_MATCHES(moore_chain_model(4, 3), error,
                           dftest::has_code(errc::bad_primes));
    REQUIRE_THROWS_MATCHES(moore_chain_model(3, 15), error,
                           dftest::has_code(errc::bad_primes));
  }

  SECTION("a tampered action is caught") {
    EquivariantCWChainModel m = moore_chain_model(2, 3);
    m.generator_action.at(3) = SparseMat(3, 3);
    for (long i = 0; i < 3; ++i) m.generator_action.at(3).set(i, i, 1);
    REQUIRE_THROWS_MATCHES(verify_moore(m), error,
                           dftest::has_code(errc::verification_failed));
  }

  SECTION("a tampered prime is caught") {
    EquivariantCWChainModel m = moore_chain_model(2, 3);
    m.p = 7;
    REQUIRE_THROWS_MATCHES(verify_moore(m), error,
                           dftest::has_code(errc::verification_failed));
  }
}

TEST_CASE("the gallery") {
  std::vector<GalleryInstance> all = gallery();

  SECTION("names and sizes are frozen") {
    std::vector<std::string> names;
    for (const auto& g : all) names.push_back(g.name);
    REQUIRE(names == std::vector<std::string>{
                         "point-ab", "edge-trivial", "edge-ab", "2pts-ab",
                         "4cycle-c2", "4cycle-parity", "5cycle-ab", "octa-c2",
                         "rp2-parity", "poincare-parity"});

    std::map<std::string, std::pair<long, long>> expected{
        {"point-ab", {2, 1}},      {"edge-trivial", {1, 1}},
        {"edge-ab", {4, 1}},       {"2pts-ab", {4, 2}},
        {"4cycle-c2", {16, 2}},    {"4cycle-parity", {2, 2}},
        {"5cycle-ab", {32, 5}},    {"octa-c2", {64, 2}},
        {"rp2-parity", {2, 2}},    {"poincare-parity", {2, 60}}};
    for (const auto& g : all) {
      CAPTURE(g.name);
      REQUIRE(g.quotient.order() == expected.at(g.name).first);
      REQUIRE(g.action.group().order() == expected.at(g.name).second);
    }
  }

  SECTION("every instance is a flag complex with an admissible action") {
    for (const auto& g : all) {
      CAPTURE(g.name);
      REQUIRE(is_flag(g.complex));
      REQUIRE(is_admissible(g.action));
      REQUIRE(g.action.complex() == g.complex);
      REQUIRE(g.quotient.system().nerve() == g.complex);
    }
  }

  SECTION("the sign character exists on all but the one-element quotient") {
    for (const auto& g : all) {
      CAPTURE(g.name);
      FiniteQuotient q = g.quotient;
      if (g.name == "edge-trivial")
        REQUIRE_THROWS_MATCHES(parity_character(q), error,
                               dftest::has_code(errc::parity_undefined));
      else
        REQUIRE(static_cast<long>(parity_character(q).size()) == q.order());
    }
  }

  SECTION("chamber counts follow the coset formula") {
    for (const auto& g : all) {
      CAPTURE(g.name);
      DavisQuotientComplex d = davis_quotient(g.quotient, kDavisSimplexCap);
      long expected = 0;
      for (const std::vector<VertexIx>& t : spherical_subsets(g.quotient.system()))
        expected += g.quotient.order() /
                    parabolic_image(g.quotient, t).subgroup_order();
      REQUIRE(d.complex().vertex_count() == expected);
    }
  }

  SECTION("selected singular sets") {
    GalleryInstance octa = gallery_instance("octa-c2");
    SimplicialComplex equator = singular_subcomplex(octa.action);
    REQUIRE(fvec(equator) == std::vector<long long>{4, 4});
    HomologySummary h = reduced_homology(equator, Coefficients::integers());
    REQUIRE(h.at(1) == GroupSummary{1, {}});

    GalleryInstance rp2 = gallery_instance("rp2-parity");
    SimplicialComplex fixed = singular_subcomplex(rp2.action);
    REQUIRE(fvec(fixed) == std::vector<long long>{7, 6});
    HomologySummary hf = reduced_homology(fixed, Coefficients::integers());
    REQUIRE(hf.at(0) == GroupSummary{1, {}});  // a circle plus a point
    REQUIRE(hf.at(1) == GroupSummary{1, {}});

    REQUIRE(singular_subcomplex(gallery_instance("2pts-ab").action)
                .vertex_count() == 0);
    REQUIRE(singular_subcomplex(gallery_instance("5cycle-ab").action)
                .vertex_count() == 0);
  }

  SECTION("known chamber complexes come out of the gallery wiring") {
    GalleryInstance two = gallery_instance("2pts-ab");
    DavisQuotientComplex d = davis_quotient(two.quotient, kDavisSimplexCap);
    REQUIRE(fvec(d.complex()) == std::vector<long long>{8, 8});
    HomologySummary h = reduced_homology(d.complex(), Coefficients::integers());
    REQUIRE(h.at(1) == GroupSummary{1, {}});
  }

  SECTION("lookup by name") {
    REQUIRE(gallery_instance("4cycle-c2").name == "4cycle-c2");
    REQUIRE_THROWS_MATCHES(gallery_instance("nonesuch"), error,
                           dftest::has_code(errc::unknown_example));
  }
}
