#include <catch2/catch_amalgamated.hpp>

#include "davisforge/simplicial_complex.hpp"
#include "test_support.hpp"

using namespace davisforge;

namespace {

SimplicialComplex cycle(int n, const std::string& prefix = "v") {
  std::vector<std::string> verts;
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < n; ++i) verts.push_back(prefix + std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.push_back({verts[static_cast<std::size_t>(i)],
                     verts[static_cast<std::size_t>((i + 1) % n)]});
  return SimplicialComplex::from_maximal(verts, edges);
}

SimplicialComplex full_simplex(std::vector<std::string> verts) {
  return SimplicialComplex::from_maximal(verts, {verts});
}

}  // namespace

TEST_CASE("from_maximal basics") {
  SECTION("full 2-simplex has 7 simplices") {
    auto x = full_simplex({"a", "b", "c"});
    REQUIRE(x.simplex_count() == 7);
    REQUIRE(x.dimension() == 2);
    REQUIRE(x.contains({"a", "c"}));
    REQUIRE(x.contains({"c", "b", "a"}));
  }
  SECTION("single point") {
    auto x = SimplicialComplex::from_maximal({"a"}, {{"a"}});
    REQUIRE(x.simplex_count() == 1);
    REQUIRE(x.dimension() == 0);
  }
  SECTION("tetrahedron boundary has 14 simplices") {
    auto x = SimplicialComplex::from_maximal(
        {"1", "2", "3", "4"},
        {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
    REQUIRE(x.simplex_count() == 14);
    REQUIRE(x.face_vector() == std::vector<long long>{4, 6, 4});
    REQUIRE(x.euler_characteristic() == 2);
  }
  SECTION("isolated listed vertex becomes a 0-simplex") {
    auto x = SimplicialComplex::from_maximal({"a", "b"}, {{"a"}});
    REQUIRE(x.contains({"b"}));
    REQUIRE(x.simplex_count() == 2);
  }
  SECTION("unknown vertex rejected") {
    REQUIRE_THROWS_MATCHES(
        SimplicialComplex::from_maximal({"a"}, {{"a", "z"}}), error,
        Catch::Matchers::Predicate<error>(
            [](const error& e) { return e.code() == errc::unknown_vertex; }));
  }
  SECTION("closure is idempotent") {
    dftest::Rng rng(12);
    for (int t = 0; t < 30; ++t) {
      auto x = dftest::random_complex(rng);
      auto again = SimplicialComplex::from_maximal(x.vertex_names(), x.maximal_simplices());
      REQUIRE(x == again);
    }
  }
}

TEST_CASE("flag detection") {
  REQUIRE_FALSE(is_flag(cycle(3)));  // empty triangle
  REQUIRE(is_flag(cycle(4)));
  REQUIRE(is_flag(full_simplex({"a", "b", "c"})));
  SECTION("flag_from_graph examples") {
    auto path = flag_from_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    REQUIRE(path.simplex_count() == 5);
    REQUIRE(path.dimension() == 1);
    auto tri = flag_from_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    REQUIRE(tri == full_simplex({"a", "b", "c"}));
    std::vector<std::string> k5 = {"1", "2", "3", "4", "5"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) edges.push_back({k5[i], k5[j]});
    auto x = flag_from_graph(k5, edges);
    REQUIRE(x.simplex_count() == 31);
    REQUIRE(x.dimension() == 4);
    REQUIRE(is_flag(x));
  }
  SECTION("flag_from_graph of the 1-skeleton recovers flag complexes") {
    dftest::Rng rng(77);
    for (int t = 0; t < 40; ++t) {
      auto x = dftest::random_complex(rng);
      std::vector<std::pair<std::string, std::string>> edges;
      for (const auto& e : x.simplices_of_dimension(1))
        edges.push_back({x.vertex_name(e[0]), x.vertex_name(e[1])});
      auto clique = flag_from_graph(x.vertex_names(), edges);
      if (is_flag(x)) {
        REQUIRE(clique == x);
      } else {
        REQUIRE(!(clique == x));
      }
      REQUIRE(is_flag(clique));
    }
  }
}

TEST_CASE("flag-no-square") {
  REQUIRE_FALSE(is_flag_no_square(cycle(4)));
  REQUIRE(is_flag_no_square(cycle(5)));
  REQUIRE(is_flag_no_square(full_simplex({"a", "b", "c"})));
  REQUIRE_THROWS_MATCHES(is_flag_no_square(cycle(3)), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::not_flag;
                         }));
}

TEST_CASE("barycentric subdivision") {
  SECTION("edge becomes a 3-vertex path") {
    auto x = full_simplex({"a", "b"});
    auto sub = barycentric_subdivision(x);
    REQUIRE(sub.complex.vertex_count() == 3);
    REQUIRE(sub.complex.simplices_of_dimension(1).size() == 2);
    REQUIRE(sub.complex.dimension() == 1);
    REQUIRE(sub.simplex_for("{a|b}") == std::vector<std::string>{"a", "b"});
    REQUIRE(sub.vertex_for({"b", "a"}) == "{a|b}");
  }
  SECTION("2-simplex: 7 vertices, 12 edges, 6 triangles") {
    auto sub = barycentric_subdivision(full_simplex({"a", "b", "c"}));
    REQUIRE(sub.complex.face_vector() == std::vector<long long>{7, 12, 6});
  }
  SECTION("subdivision is flag and preserves Euler characteristic") {
    dftest::Rng rng(2024);
    for (int t = 0; t < 50; ++t) {
      auto x = dftest::random_complex(rng);
      auto sub = barycentric_subdivision(x);
      REQUIRE(is_flag(sub.complex));
      REQUIRE(sub.complex.euler_characteristic() == x.euler_characteristic());
      REQUIRE(sub.complex.vertex_count() == x.simplex_count());
    }
  }
}

TEST_CASE("full subcomplexes and vertex deletion") {
  auto tri = full_simplex({"a", "b", "c"});
  SECTION("(full 2-simplex, {a,b}) is the edge ab") {
    auto y = full_subcomplex(tri, {"a", "b"});
    REQUIRE(y.simplex_count() == 3);
    REQUIRE(y.contains({"a", "b"}));
  }
  SECTION("1-skeleton inside the 2-simplex is not full") {
    auto skel = SimplicialComplex::from_maximal(
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    REQUIRE(is_subcomplex(skel, tri));
    REQUIRE_FALSE(is_full_subcomplex(tri, skel));
    REQUIRE(is_full_subcomplex(tri, full_subcomplex(tri, {"a", "b"})));
  }
  SECTION("not a subcomplex is an error") {
    auto other = full_simplex({"a", "z"});
    REQUIRE_THROWS_MATCHES(is_full_subcomplex(tri, other), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_subcomplex;
                           }));
  }
  SECTION("full_subcomplex on all vertices is the identity") {
    dftest::Rng rng(5);
    for (int t = 0; t < 25; ++t) {
      auto x = dftest::random_complex(rng);
      REQUIRE(full_subcomplex(x, x.vertex_names()) == x);
    }
  }
  SECTION("vertex deletion") {
    auto y = vertex_deletion(full_simplex({"a", "b"}), "a");
    REQUIRE(y.vertex_count() == 1);
    REQUIRE(y.contains({"b"}));
    REQUIRE_THROWS_AS(vertex_deletion(y, "a"), error);
    dftest::Rng rng(6);
    for (int t = 0; t < 25; ++t) {
      auto x = dftest::random_complex(rng);
      auto z = vertex_deletion(x, x.vertex_name(0));
      REQUIRE(z.index_of(x.vertex_name(0)) == -1);
    }
  }
  SECTION("subdivision of a subcomplex is full in the subdivision") {
    dftest::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
      auto x = dftest::random_complex(rng);
      auto m = dftest::random_subcomplex(rng, x);
      if (m.vertex_count() == 0) continue;
      auto xs = barycentric_subdivision(x);
      auto ms = barycentric_subdivision(m);
      REQUIRE(is_subcomplex(ms.complex, xs.complex));
      REQUIRE(is_full_subcomplex(xs.complex, ms.complex));
    }
  }
}

TEST_CASE("cone") {
  SECTION("cone on 2 points is a path") {
    auto two = SimplicialComplex::from_maximal({"a", "b"}, {});
    auto c = cone(two, "apex");
    REQUIRE(c.face_vector() == std::vector<long long>{3, 2});
  }
  SECTION("cone on a 4-cycle: pyramid shell without base interior") {
    auto c = cone(cycle(4), "apex");
    REQUIRE(c.face_vector() == std::vector<long long>{5, 8, 4});
    REQUIRE(c.euler_characteristic() == 1);
  }
  SECTION("apex collision") {
    REQUIRE_THROWS_MATCHES(cone(cycle(4), "v0"), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::name_collision;
                           }));
  }
}

TEST_CASE("union and intersection") {
  auto tri = cycle(3);
  SECTION("union of the three edges of a triangle boundary") {
    std::vector<SimplicialComplex> edges;
    for (const auto& e : tri.simplices_of_dimension(1))
      edges.push_back(SimplicialComplex::from_maximal(tri.names_of(e), {tri.names_of(e)}));
    REQUIRE(complex_union(tri, edges) == tri);
  }
  SECTION("intersection of two faces sharing an edge") {
    auto square = SimplicialComplex::from_maximal(
        {"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "c", "d"}});
    auto f1 = full_simplex({"a", "b", "c"});
    auto f2 = full_simplex({"a", "c", "d"});
    auto e = complex_intersection(square, {f1, f2});
    REQUIRE(e == full_simplex({"a", "c"}));
  }
  SECTION("ambient mismatch") {
    REQUIRE_THROWS_MATCHES(
        complex_union(tri, {full_simplex({"a", "b", "c"})}), error,
        Catch::Matchers::Predicate<error>(
            [](const error& e) { return e.code() == errc::ambient_mismatch; }));
  }
  SECTION("idempotence and distributivity on random triples") {
    dftest::Rng rng(31);
    for (int t = 0; t < 25; ++t) {
      auto x = dftest::random_complex(rng);
      auto a = dftest::random_subcomplex(rng, x);
      auto b = dftest::random_subcomplex(rng, x);
      auto c = dftest::random_subcomplex(rng, x);
      REQUIRE(complex_union(x, {a, a}) == complex_union(x, {a}));
      REQUIRE(complex_intersection(x, {a, a}) == complex_intersection(x, {a}));
      auto lhs = complex_intersection(x, {a, complex_union(x, {b, c})});
      auto rhs = complex_union(
          x, {complex_intersection(x, {a, b}), complex_intersection(x, {a, c})});
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("nerve of a cover") {
  SECTION("two parts meeting in a point give an edge") {
    auto ambient = SimplicialComplex::from_maximal({"a", "b", "c"},
                                                   {{"a", "b"}, {"b", "c"}});
    auto cover = Cover::checked(
        ambient, {{"P", full_simplex({"a", "b"})}, {"Q", full_simplex({"b", "c"})}});
    auto nerve = nerve_of_cover(cover);
    REQUIRE(nerve.face_vector() == std::vector<long long>{2, 1});
  }
  SECTION("three pairwise-meeting parts with empty triple intersection") {
    // Subdivided triangle covered by its three corners' closed arcs.
    auto hex = cycle(6);
    auto arc = [&](int i) {
      std::vector<std::string> span = {"v" + std::to_string(i % 6),
                                       "v" + std::to_string((i + 1) % 6),
                                       "v" + std::to_string((i + 2) % 6)};
      return full_subcomplex(hex, span);
    };
    auto cover = Cover::checked(hex, {{"A", arc(0)}, {"B", arc(2)}, {"C", arc(4)}});
    auto nerve = nerve_of_cover(cover);
    REQUIRE(nerve.face_vector() == std::vector<long long>{3, 3});
    REQUIRE_FALSE(nerve.contains({"A", "B", "C"}));
  }
  SECTION("empty part rejected") {
    auto pt = full_simplex({"a"});
    auto cover = Cover{pt, {{"P", SimplicialComplex()}}};
    REQUIRE_THROWS_MATCHES(nerve_of_cover(cover), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::empty_part;
                           }));
  }
  SECTION("nerve membership agrees with brute-force intersection") {
    dftest::Rng rng(404);
    for (int t = 0; t < 20; ++t) {
      auto x = dftest::random_complex(rng);
      std::vector<std::pair<std::string, SimplicialComplex>> parts;
      int m = static_cast<int>(dftest::pick(rng, 1, 4));
      for (int i = 0; i < m; ++i) {
        auto part = dftest::random_subcomplex(rng, x);
        if (part.vertex_count() == 0) part = full_subcomplex(x, {x.vertex_name(0)});
        parts.push_back({"P" + std::to_string(i), part});
      }
      auto cover = Cover::checked(x, parts);
      auto nerve = nerve_of_cover(cover);
      REQUIRE(nerve.vertex_count() == m);
      for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<SimplicialComplex> chosen;
        std::vector<std::string> names;
        for (int i = 0; i < m; ++i)
          if (mask & (std::size_t(1) << i)) {
            chosen.push_back(parts[static_cast<std::size_t>(i)].second);
            names.push_back(parts[static_cast<std::size_t>(i)].first);
          }
        bool nonempty = complex_intersection(x, chosen).vertex_count() > 0;
        REQUIRE(nerve.contains(names) == nonempty);
      }
    }
  }
}

TEST_CASE("connectivity") {
  REQUIRE(is_connected(cycle(5)));
  REQUIRE(is_connected(SimplicialComplex()));
  auto two = SimplicialComplex::from_maximal({"a", "b"}, {});
  REQUIRE_FALSE(is_connected(two));
}
