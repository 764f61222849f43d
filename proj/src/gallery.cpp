#include "davisforge/gallery.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "davisforge/pi1.hpp"

namespace davisforge {

namespace {

// ---------------------------------------------------------------------------
// Polygonal complexes.

// Lexicographically least among all rotations of the cycle and its reversal,
// so equal polygons get equal names however their boundaries were written.
std::vector<std::string> canonical_cycle(const std::vector<std::string>& cycle) {
  const std::size_t k = cycle.size();
  std::vector<std::string> best;
  auto consider = [&](const std::vector<std::string>& c) {
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<std::string> rotated;
      rotated.reserve(k);
      for (std::size_t i = 0; i < k; ++i) rotated.push_back(c[(r + i) % k]);
      if (best.empty() || rotated < best) best = std::move(rotated);
    }
  };
  consider(cycle);
  consider(std::vector<std::string>(cycle.rbegin(), cycle.rend()));
  return best;
}

std::string edge_center(const std::string& u, const std::string& v) {
  return subdivision_vertex_name({std::min(u, v), std::max(u, v)});
}

std::string polygon_center(const std::vector<std::string>& cycle) {
  return subdivision_vertex_name(canonical_cycle(cycle));
}

// ---------------------------------------------------------------------------
// Permutations of five points, for the pentagon model.

using Perm5 = std::array<int, 5>;

Perm5 compose5(const Perm5& a, const Perm5& b) {  // apply b, then a
  Perm5 r{};
  for (int i = 0; i < 5; ++i) r[i] = a[b[i]];
  return r;
}

Perm5 invert5(const Perm5& a) {
  Perm5 r{};
  for (int i = 0; i < 5; ++i) r[a[i]] = i;
  return r;
}

bool even5(const Perm5& p) {
  int inversions = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::vector<Perm5> alternating_group() {
  Perm5 p{0, 1, 2, 3, 4};
  std::vector<Perm5> out;
  do {
    if (even5(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;  // 60 elements, lexicographically sorted
}

// One five-cycle per inverse-pair in the conjugacy class of 0->1->2->3->4,
// each the lexicographically smaller of its pair; six in all.
std::vector<Perm5> pentagon_representatives() {
  const Perm5 cycle{1, 2, 3, 4, 0};
  std::set<Perm5> conjugates;
  for (const Perm5& g : alternating_group())
    conjugates.insert(compose5(compose5(g, cycle), invert5(g)));
  std::vector<Perm5> reps;
  for (const Perm5& s : conjugates)
    if (s <= invert5(s)) reps.push_back(s);
  return reps;
}

std::string point_name(int i) { return std::to_string(i); }

PolygonalComplex pentagon_cells() {
  PolygonalComplex cells;
  for (int i = 0; i < 5; ++i) cells.vertices.push_back(point_name(i));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      cells.edges.emplace_back(point_name(i), point_name(j));
  for (const Perm5& s : pentagon_representatives()) {
    std::vector<std::string> boundary;
    int at = 0;
    for (int step = 0; step < 5; ++step) {
      boundary.push_back(point_name(at));
      at = s[at];
    }
    cells.polygons.push_back(std::move(boundary));
  }
  return cells;
}

// Vertex map of the subdivision induced by a symmetry of the polygonal
// complex: originals move as given, centers follow their cells.
std::map<std::string, std::string> induced_vertex_map(const PolygonalComplex& pc,
                                                      const Perm5& g) {
  auto image = [&](const std::string& name) {
    return point_name(g[name[0] - '0']);
  };
  std::map<std::string, std::string> m;
  for (const std::string& v : pc.vertices)
    m[subdivision_vertex_name({v})] = subdivision_vertex_name({image(v)});
  for (const auto& [u, v] : pc.edges)
    m[edge_center(u, v)] = edge_center(image(u), image(v));
  for (const auto& poly : pc.polygons) {
    std::vector<std::string> moved;
    moved.reserve(poly.size());
    for (const std::string& v : poly) moved.push_back(image(v));
    m[polygon_center(poly)] = polygon_center(moved);
  }
  return m;
}

// Vertices of a subdivided polygonal complex that are polygon centers: the
// ones whose names list a boundary cycle of length five or more.
std::vector<std::string> polygon_center_names(const SimplicialComplex& l) {
  std::vector<std::string> out;
  for (const std::string& name : l.vertex_names()) {
    if (name.size() < 2 || name.front() != '{' || name.back() != '}') continue;
    long parts = 1 + std::count(name.begin(), name.end(), '|');
    if (parts >= 5) out.push_back(name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared fixtures.

SimplicialComplex single_point() {
  return SimplicialComplex::from_maximal({"a"}, {});
}

SimplicialComplex two_points() {
  return SimplicialComplex::from_maximal({"a", "b"}, {});
}

SimplicialComplex one_edge() {
  return SimplicialComplex::from_maximal({"a", "b"}, {{"a", "b"}});
}

SimplicialComplex cycle_complex(const std::vector<std::string>& stops) {
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < stops.size(); ++i)
    edges.push_back({stops[i], stops[(i + 1) % stops.size()]});
  return SimplicialComplex::from_maximal(stops, edges);
}

SimplicialComplex octahedron() {
  std::vector<std::string> v{"x1", "x2", "y1", "y2", "z1", "z2"};
  std::vector<std::vector<std::string>> faces;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        faces.push_back({v[static_cast<std::size_t>(i)],
                         v[static_cast<std::size_t>(2 + j)],
                         v[static_cast<std::size_t>(4 + k)]});
  return SimplicialComplex::from_maximal(v, faces);
}

SimplicialComplex projective_plane() {
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

SparseMat sparse_identity(long n) {
  SparseMat m(n, n);
  for (long i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

[[noreturn]] void claim_failed(const std::string& claim) {
  fail(errc::verification_failed, claim);
}

}  // namespace

SimplicialComplex subdivide_polygonal(const PolygonalComplex& pc) {
  std::set<std::string> vset(pc.vertices.begin(), pc.vertices.end());
  if (vset.size() != pc.vertices.size())
    fail(errc::name_collision, "repeated vertex name");

  // Original vertices are renamed "{a}" like every other barycenter, so the
  // result uses the same naming scheme as barycentric_subdivision and the
  // two agree verbatim on simplicial input.
  auto copy_of = [](const std::string& v) { return subdivision_vertex_name({v}); };

  std::set<std::pair<std::string, std::string>> eset;
  std::vector<std::string> table;
  for (const std::string& v : pc.vertices) table.push_back(copy_of(v));
  std::vector<std::vector<std::string>> maximal;
  for (const auto& [u, v] : pc.edges) {
    if (!vset.count(u)) fail(errc::unknown_vertex, "edge endpoint '" + u + "'");
    if (!vset.count(v)) fail(errc::unknown_vertex, "edge endpoint '" + v + "'");
    if (u == v) fail(errc::invalid_input, "edge from '" + u + "' to itself");
    if (!eset.insert({std::min(u, v), std::max(u, v)}).second)
      fail(errc::invalid_input, "repeated edge " + edge_center(u, v));
    table.push_back(edge_center(u, v));
    maximal.push_back({copy_of(u), edge_center(u, v)});
    maximal.push_back({copy_of(v), edge_center(u, v)});
  }

  std::set<std::string> polygon_names;
  for (const auto& poly : pc.polygons) {
    if (poly.size() < 3)
      fail(errc::invalid_input, "a polygon needs at least three sides");
    for (const std::string& v : poly)
      if (!vset.count(v)) fail(errc::unknown_vertex, "polygon vertex '" + v + "'");
    if (std::set<std::string>(poly.begin(), poly.end()).size() != poly.size())
      fail(errc::invalid_input, "polygon boundary revisits a vertex");
    const std::string center = polygon_center(poly);
    if (!polygon_names.insert(center).second)
      fail(errc::invalid_input, "repeated polygon " + center);
    table.push_back(center);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const std::string& u = poly[i];
      const std::string& v = poly[(i + 1) % poly.size()];
      if (!eset.count({std::min(u, v), std::max(u, v)}))
        fail(errc::invalid_input,
             "polygon side " + edge_center(u, v) + " is not a listed edge");
      maximal.push_back({copy_of(u), edge_center(u, v), center});
      maximal.push_back({copy_of(v), edge_center(u, v), center});
    }
  }
  return SimplicialComplex::from_maximal(std::move(table), maximal);
}

PoincareSkeleton poincare_two_skeleton() {
  PolygonalComplex cells = pentagon_cells();
  SimplicialComplex complex = subdivide_polygonal(cells);

  const Perm5 five_cycle{1, 2, 3, 4, 0};
  const Perm5 three_cycle{1, 2, 0, 3, 4};
  SimplicialAction action = SimplicialAction::from_generators(
      complex, {{"a", induced_vertex_map(cells, five_cycle)},
                {"b", induced_vertex_map(cells, three_cycle)}});

  std::vector<std::string> centers;
  for (const auto& poly : cells.polygons) centers.push_back(polygon_center(poly));
  std::sort(centers.begin(), centers.end());

  return PoincareSkeleton{std::move(cells), std::move(complex), std::move(action),
                          std::move(centers)};
}

PoincareReport verify_poincare(const SimplicialComplex& l,
                               const SimplicialAction& act) {
  if (!(act.complex() == l))
    fail(errc::invalid_input, "the action lives on a different complex");

  PoincareReport report{HomologySummary(),
                        false,
                        SimplicialComplex(),
                        false,
                        false,
                        GroupSummary{},
                        0,
                        GroupSummary{}};

  report.reduced = reduced_homology(l, Coefficients::integers());
  if (!report.reduced.is_trivial())
    claim_failed("the skeleton is not acyclic");

  std::vector<long> everyone(static_cast<std::size_t>(act.group().order()));
  std::iota(everyone.begin(), everyone.end(), 0L);
  report.no_global_fixed_point =
      fixed_subcomplex(act, everyone).vertex_count() == 0;
  if (!report.no_global_fixed_point)
    claim_failed("the group fixes a vertex globally");

  report.singular = singular_subcomplex(act);
  std::vector<std::vector<std::string>> edges;
  for (const SimplexKey& e : l.simplices_of_dimension(1))
    edges.push_back(l.names_of(e));
  SimplicialComplex one_skeleton =
      SimplicialComplex::from_maximal(l.vertex_names(), edges);
  report.singular_is_one_skeleton = report.singular == one_skeleton;
  if (!report.singular_is_one_skeleton)
    claim_failed("the singular set is not the full 1-skeleton");

  report.singular_full = is_full_subcomplex(l, report.singular);
  if (report.singular_full)
    claim_failed("the singular set should not be a full subcomplex");

  report.pair_h2 =
      cohomology(relative_chain_complex(l, report.singular),
                 Coefficients::integers())
          .at(2);
  if (!(report.pair_h2 == GroupSummary{60, {}}))
    claim_failed("H^2 of the pair (skeleton, singular set) is not free of rank 60");

  report.pi1_order = todd_coxeter(presentation_from_two_complex(l));
  if (report.pi1_order != 120)
    claim_failed("the fundamental group does not have order 120");

  std::vector<std::string> centers = polygon_center_names(l);
  if (centers.empty())
    fail(errc::invalid_input, "no pentagon barycenter among the vertices");
  report.deleted_vertex_h1 =
      cohomology(chain_complex_of(vertex_deletion(l, centers.front()), false),
                 Coefficients::integers())
          .at(1);
  if (!(report.deleted_vertex_h1 == GroupSummary{1, {}}))
    claim_failed("deleting a pentagon barycenter does not leave H^1 = Z");

  return report;
}

EquivariantCWChainModel moore_chain_model(long p, long q) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    fail(errc::bad_primes, "need distinct primes, got p = " + std::to_string(p) +
                               ", q = " + std::to_string(q));

  std::vector<std::string> deg2{"f"}, deg3;
  for (long j = 0; j < q; ++j) {
    deg2.push_back("f" + std::to_string(j));
    deg3.push_back("b" + std::to_string(j));
  }

  SparseMat d1(1, 1);  // the loop c is a cycle
  SparseMat d2(1, q + 1);
  d2.set(0, 0, p);
  for (long j = 0; j < q; ++j) d2.set(0, 1 + j, 1);
  SparseMat d3(q + 1, q);
  for (long j = 0; j < q; ++j) {
    d3.set(0, j, 1);
    for (long i = 0; i < p; ++i) d3.add(1 + (j + i) % q, j, -1);
  }
  ChainComplex complex(0, {{"v"}, {"c"}, deg2, deg3},
                       {SparseMat(0, 1), d1, d2, d3});

  std::map<int, SparseMat> action;
  action.emplace(0, sparse_identity(1));
  action.emplace(1, sparse_identity(1));
  SparseMat a2(q + 1, q + 1);
  a2.set(0, 0, 1);
  for (long j = 0; j < q; ++j) a2.set(1 + (j + 1) % q, 1 + j, 1);
  action.emplace(2, std::move(a2));
  SparseMat a3(q, q);
  for (long j = 0; j < q; ++j) a3.set((j + 1) % q, j, 1);
  action.emplace(3, std::move(a3));

  SparseMat fixed_d2(1, 1);
  fixed_d2.set(0, 0, p);
  ChainComplex fixed(0, {{"v"}, {"c"}, {"f"}},
                     {SparseMat(0, 1), SparseMat(1, 1), fixed_d2});

  std::vector<std::string> rel2(deg2.begin() + 1, deg2.end());
  SparseMat rel_d3(q, q);
  for (long j = 0; j < q; ++j)
    for (long i = 0; i < p; ++i) rel_d3.add((j + i) % q, j, -1);
  ChainComplex relative(2, {rel2, deg3}, {SparseMat(0, q), rel_d3});

  return EquivariantCWChainModel{p,
                                 q,
                                 std::move(complex),
                                 std::move(action),
                                 {"v", "c", "f"},
                                 std::move(fixed),
                                 std::move(relative)};
}

MooreReport verify_moore(const EquivariantCWChainModel& model) {
  const long p = model.p, q = model.q;
  const ChainComplex& c = model.complex;

  for (int d = c.lowest() + 1; d < c.highest(); ++d)
    if (!(c.boundary(d) * c.boundary(d + 1)).is_zero())
      claim_failed("boundaries do not square to zero at degree " +
                   std::to_string(d + 1));

  if (!is_chain_map(model.generator_action, c, c))
    claim_failed("the generator's action does not commute with the boundary");

  for (const auto& [degree, m] : model.generator_action) {
    SparseMat power = sparse_identity(m.rows());
    for (long t = 0; t < q; ++t) power = m * power;
    if (!(power == sparse_identity(m.rows())))
      claim_failed("the action does not have order q in degree " +
                   std::to_string(degree));
  }

  MooreReport report;
  report.total = homology(c, Coefficients::integers());
  bool acyclic = report.total.at(0) == GroupSummary{1, {}};
  for (int d = 1; d <= c.highest(); ++d)
    acyclic = acyclic && report.total.at(d).trivial();
  if (!acyclic) claim_failed("the total complex is not acyclic");

  report.fixed_h1 = homology(model.fixed, Coefficients::integers()).at(1);
  if (!(report.fixed_h1 == GroupSummary{0, {bigint(p)}}))
    claim_failed("the fixed subcomplex does not have H_1 of order p");

  report.relative_h3 = cohomology(model.relative, Coefficients::integers()).at(3);
  if (!(report.relative_h3 == GroupSummary{0, {bigint(p)}}))
    claim_failed("the relative complex does not have H^3 of order p");

  report.circulant_det = determinant(model.relative.boundary(3).to_dense());
  if (abs(report.circulant_det) != p)
    claim_failed("the circulant determinant is not +-p");

  // Degree-2 kernel of the full complex: rank q, spanned by the e_j.
  if (invariant_factors(c.boundary(2)).size() != 1)
    claim_failed("the degree-2 boundary does not have rank one");
  SparseMat e(q + 1, q), shifted(q + 1, q);
  for (long j = 0; j < q; ++j) {
    e.set(0, j, 1);
    shifted.set(0, j, 1);
    for (long i = 0; i < p; ++i) {
      e.add(1 + (j + i) % q, j, -1);
      shifted.add(1 + (j + 1 + i) % q, j, -1);
    }
  }
  if (!(c.boundary(2) * e).is_zero())
    claim_failed("the e_j are not cycles");
  std::vector<bigint> factors = invariant_factors(e);
  if (static_cast<long>(factors.size()) != q ||
      !std::all_of(factors.begin(), factors.end(),
                   [](const bigint& f) { return f == 1; }))
    claim_failed("the e_j do not form a basis of the degree-2 kernel");
  if (!(model.generator_action.at(2) * e == shifted))
    claim_failed("the action does not shift the e_j cyclically");

  return report;
}

std::vector<GalleryInstance> gallery() {
  std::vector<GalleryInstance> out;
  auto add = [&](std::string name, const SimplicialComplex& c,
                 SimplicialAction act, FiniteQuotient quo) {
    out.push_back(
        GalleryInstance{std::move(name), c, std::move(act), std::move(quo)});
  };

  {
    SimplicialComplex c = single_point();
    add("point-ab", c, SimplicialAction::trivial(c),
        abelianization_quotient(coxeter_from_flag(c)));
  }
  {
    SimplicialComplex c = one_edge();
    add("edge-trivial", c, SimplicialAction::trivial(c),
        trivial_quotient(coxeter_from_flag(c)));
    add("edge-ab", c, SimplicialAction::trivial(c),
        abelianization_quotient(coxeter_from_flag(c)));
  }
  {
    SimplicialComplex c = two_points();
    SimplicialAction swap = SimplicialAction::from_generators(
        c, {{"t", {{"a", "b"}, {"b", "a"}}}});
    add("2pts-ab", c, std::move(swap),
        abelianization_quotient(coxeter_from_flag(c)));
  }
  {
    SimplicialComplex c = cycle_complex({"a", "b", "c", "d"});
    CoxeterSystem sys = coxeter_from_flag(c);
    SimplicialAction swap = SimplicialAction::from_generators(
        c, {{"t", {{"b", "d"}, {"d", "b"}}}});
    add("4cycle-c2", c, swap, abelianization_quotient(sys));
    add("4cycle-parity", c, std::move(swap), parity_quotient(sys));
  }
  {
    SimplicialComplex c = cycle_complex({"a", "b", "c", "d", "e"});
    SimplicialAction turn = SimplicialAction::from_generators(
        c, {{"r", {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}}}});
    add("5cycle-ab", c, std::move(turn),
        abelianization_quotient(coxeter_from_flag(c)));
  }
  {
    SimplicialComplex c = octahedron();
    SimplicialAction flip = SimplicialAction::from_generators(
        c, {{"t", {{"x1", "x2"}, {"x2", "x1"}}}});
    add("octa-c2", c, std::move(flip),
        abelianization_quotient(coxeter_from_flag(c)));
  }
  {
    Subdivision sub = barycentric_subdivision(projective_plane());
    SimplicialAction base = SimplicialAction::from_generators(
        projective_plane(),
        {{"t", {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}}}});
    add("rp2-parity", sub.complex, transport_to_subdivision(base, sub),
        parity_quotient(coxeter_from_flag(sub.complex)));
  }
  {
    PoincareSkeleton pk = poincare_two_skeleton();
    add("poincare-parity", pk.complex, std::move(pk.action),
        parity_quotient(coxeter_from_flag(pk.complex)));
  }
  return out;
}

GalleryInstance gallery_instance(const std::string& name) {
  for (GalleryInstance& g : gallery())
    if (g.name == name) return std::move(g);
  fail(errc::unknown_example, "no gallery instance named '" + name + "'");
}

}  // namespace davisforge
