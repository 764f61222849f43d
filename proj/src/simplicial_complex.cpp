#include "davisforge/simplicial_complex.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace davisforge {

namespace {

// Number of subsets enumerated during face closure of one maximal simplex.
constexpr std::size_t kMaxClosureVertices = 24;

std::vector<std::string> sorted_unique(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  for (std::size_t i = 1; i < names.size(); ++i)
    if (names[i] == names[i - 1])
      fail(errc::name_collision, "duplicate vertex '" + names[i] + "'");
  return names;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& maximal) {
  SimplicialComplex x;
  x.vertices_ = sorted_unique(std::move(vertices));
  for (std::size_t i = 0; i < x.vertices_.size(); ++i) {
    if (x.vertices_[i].empty()) fail(errc::invalid_input, "empty vertex name");
    x.index_.emplace(x.vertices_[i], static_cast<VertexIx>(i));
  }
  for (VertexIx v = 0; v < static_cast<VertexIx>(x.vertices_.size()); ++v)
    x.simplices_.insert({v});
  for (const auto& names : maximal) {
    SimplexKey key = x.key_of(names);
    if (key.empty()) continue;
    if (key.size() > kMaxClosureVertices)
      fail(errc::invalid_input, "simplex too large for face closure");
    const std::size_t n = key.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      SimplexKey face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) face.push_back(key[b]);
      x.simplices_.insert(std::move(face));
    }
  }
  return x;
}

SimplicialComplex SimplicialComplex::from_sorted_parts(
    std::vector<std::string> vertices, SimplexSet simplices) {
  SimplicialComplex x;
  x.vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < x.vertices_.size(); ++i)
    x.index_.emplace(x.vertices_[i], static_cast<VertexIx>(i));
  x.simplices_ = std::move(simplices);
  return x;
}

VertexIx SimplicialComplex::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::vector<SimplexKey> SimplicialComplex::simplices_of_dimension(int k) const {
  std::vector<SimplexKey> out;
  if (k < 0) return out;
  SimplexKey lo(static_cast<std::size_t>(k) + 1, 0);
  for (auto it = simplices_.lower_bound(lo);
       it != simplices_.end() && static_cast<int>(it->size()) == k + 1; ++it)
    out.push_back(*it);
  return out;
}

std::vector<long long> SimplicialComplex::face_vector() const {
  std::vector<long long> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices_) ++f[s.size() - 1];
  return f;
}

bool SimplicialComplex::contains(const std::vector<std::string>& simplex) const {
  SimplexKey key;
  key.reserve(simplex.size());
  for (const auto& name : simplex) {
    VertexIx v = index_of(name);
    if (v < 0) return false;
    key.push_back(v);
  }
  std::sort(key.begin(), key.end());
  return contains_key(key);
}

std::vector<std::string> SimplicialComplex::names_of(const SimplexKey& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexIx v : s) out.push_back(vertices_[v]);
  return out;
}

SimplexKey SimplicialComplex::key_of(const std::vector<std::string>& names) const {
  SimplexKey key;
  key.reserve(names.size());
  for (const auto& name : names) {
    VertexIx v = index_of(name);
    if (v < 0) fail(errc::unknown_vertex, "'" + name + "'");
    key.push_back(v);
  }
  std::sort(key.begin(), key.end());
  for (std::size_t i = 1; i < key.size(); ++i)
    if (key[i] == key[i - 1])
      fail(errc::invalid_input, "repeated vertex in simplex");
  return key;
}

std::vector<std::vector<std::string>> SimplicialComplex::maximal_simplices() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    // s is maximal iff no coface s + {v} is present.
    for (VertexIx v = 0; v < static_cast<VertexIx>(vertices_.size()) && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      SimplexKey up = s;
      up.insert(std::upper_bound(up.begin(), up.end(), v), v);
      if (contains_key(up)) maximal = false;
    }
    if (maximal) out.push_back(names_of(s));
  }
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  for (const auto& name : sub.vertex_names())
    if (ambient.index_of(name) < 0) return false;
  for (const auto& s : sub.simplices())
    if (!ambient.contains(sub.names_of(s))) return false;
  return true;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& x,
                                  const std::vector<std::string>& verts) {
  std::vector<std::string> names = verts;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<char> keep(static_cast<std::size_t>(x.vertex_count()), 0);
  for (const auto& name : names) {
    VertexIx v = x.index_of(name);
    if (v < 0) fail(errc::unknown_vertex, "'" + name + "'");
    keep[static_cast<std::size_t>(v)] = 1;
  }
  // Reindex into the new (smaller) vertex table.
  std::vector<VertexIx> remap(keep.size(), -1);
  {
    VertexIx next = 0;
    for (std::size_t v = 0; v < keep.size(); ++v)
      if (keep[v]) remap[v] = next++;
  }
  SimplexSet picked;
  for (const auto& s : x.simplices()) {
    bool inside = true;
    for (VertexIx v : s)
      if (!keep[static_cast<std::size_t>(v)]) {
        inside = false;
        break;
      }
    if (!inside) continue;
    SimplexKey key;
    key.reserve(s.size());
    for (VertexIx v : s) key.push_back(remap[static_cast<std::size_t>(v)]);
    picked.insert(std::move(key));
  }
  return SimplicialComplex::from_sorted_parts(std::move(names), std::move(picked));
}

bool is_full_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (!is_subcomplex(y, x)) fail(errc::not_subcomplex, "is_full_subcomplex");
  return full_subcomplex(x, y.vertex_names()) == y;
}

SimplicialComplex vertex_deletion(const SimplicialComplex& x, const std::string& v) {
  if (x.index_of(v) < 0) fail(errc::unknown_vertex, "'" + v + "'");
  std::vector<std::string> rest;
  for (const auto& name : x.vertex_names())
    if (name != v) rest.push_back(name);
  return full_subcomplex(x, rest);
}

SimplicialComplex cone(const SimplicialComplex& x, const std::string& apex) {
  if (x.index_of(apex) >= 0)
    fail(errc::name_collision, "cone apex '" + apex + "' is already a vertex");
  if (apex.empty()) fail(errc::invalid_input, "empty apex name");
  std::vector<std::string> vertices = x.vertex_names();
  vertices.push_back(apex);
  std::sort(vertices.begin(), vertices.end());
  std::vector<VertexIx> remap(static_cast<std::size_t>(x.vertex_count()));
  for (std::size_t v = 0; v < remap.size(); ++v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x.vertex_name(static_cast<VertexIx>(v)));
    remap[v] = static_cast<VertexIx>(it - vertices.begin());
  }
  VertexIx apex_ix;
  {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), apex);
    apex_ix = static_cast<VertexIx>(it - vertices.begin());
  }
  SimplexSet out;
  out.insert({apex_ix});
  for (const auto& s : x.simplices()) {
    SimplexKey base;
    base.reserve(s.size());
    for (VertexIx v : s) base.push_back(remap[static_cast<std::size_t>(v)]);
    std::sort(base.begin(), base.end());
    SimplexKey joined = base;
    joined.insert(std::upper_bound(joined.begin(), joined.end(), apex_ix), apex_ix);
    out.insert(std::move(base));
    out.insert(std::move(joined));
  }
  return SimplicialComplex::from_sorted_parts(std::move(vertices), std::move(out));
}

bool is_connected(const SimplicialComplex& x) {
  const long n = x.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<VertexIx>> adj(static_cast<std::size_t>(n));
  for (const auto& s : x.simplices_of_dimension(1)) {
    adj[static_cast<std::size_t>(s[0])].push_back(s[1]);
    adj[static_cast<std::size_t>(s[1])].push_back(s[0]);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<VertexIx> bfs;
  bfs.push(0);
  seen[0] = 1;
  long reached = 1;
  while (!bfs.empty()) {
    VertexIx v = bfs.front();
    bfs.pop();
    for (VertexIx w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        bfs.push(w);
      }
  }
  return reached == n;
}

namespace {

std::vector<std::vector<char>> adjacency(const SimplicialComplex& x) {
  const std::size_t n = static_cast<std::size_t>(x.vertex_count());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& s : x.simplices_of_dimension(1)) {
    adj[static_cast<std::size_t>(s[0])][static_cast<std::size_t>(s[1])] = 1;
    adj[static_cast<std::size_t>(s[1])][static_cast<std::size_t>(s[0])] = 1;
  }
  return adj;
}

}  // namespace

bool is_flag(const SimplicialComplex& x) {
  const auto adj = adjacency(x);
  const VertexIx n = static_cast<VertexIx>(x.vertex_count());
  // A minimal non-spanning clique C shows up as a simplex C - {max C}
  // together with the vertex max C adjacent to all of it, so checking
  // extensions by a vertex beyond the max is enough.
  for (const auto& s : x.simplices()) {
    if (s.size() < 2) continue;
    for (VertexIx v = s.back() + 1; v < n; ++v) {
      bool adjacent_to_all = true;
      for (VertexIx w : s)
        if (!adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]) {
          adjacent_to_all = false;
          break;
        }
      if (!adjacent_to_all) continue;
      SimplexKey up = s;
      up.push_back(v);
      if (!x.contains_key(up)) return false;
    }
  }
  return true;
}

bool is_flag_no_square(const SimplicialComplex& x) {
  if (!is_flag(x)) fail(errc::not_flag, "is_flag_no_square requires a flag complex");
  const auto adj = adjacency(x);
  const VertexIx n = static_cast<VertexIx>(x.vertex_count());
  for (VertexIx u = 0; u < n; ++u)
    for (VertexIx v = u + 1; v < n; ++v) {
      if (adj[u][v]) continue;
      // u, v is one diagonal of a potential empty square; look for a
      // non-adjacent pair of common neighbours as the other diagonal.
      std::vector<VertexIx> common;
      for (VertexIx w = 0; w < n; ++w)
        if (adj[u][w] && adj[v][w]) common.push_back(w);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!adj[common[i]][common[j]]) return false;
    }
  return true;
}

SimplicialComplex flag_from_graph(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  SimplicialComplex skeleton;
  {
    std::vector<std::vector<std::string>> edge_list;
    edge_list.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      if (a == b) fail(errc::invalid_input, "loop edge '" + a + "'");
      edge_list.push_back({a, b});
    }
    skeleton = SimplicialComplex::from_maximal(vertices, edge_list);
  }
  const auto adj = adjacency(skeleton);
  const VertexIx n = static_cast<VertexIx>(skeleton.vertex_count());
  SimplexSet cliques = skeleton.simplices();
  // Grow cliques a vertex at a time past their current maximum, so each
  // clique is produced exactly once.
  std::vector<SimplexKey> frontier(cliques.begin(), cliques.end());
  while (!frontier.empty()) {
    std::vector<SimplexKey> next;
    for (const auto& s : frontier) {
      for (VertexIx v = s.back() + 1; v < n; ++v) {
        bool adjacent_to_all = true;
        for (VertexIx w : s)
          if (!adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]) {
            adjacent_to_all = false;
            break;
          }
        if (!adjacent_to_all) continue;
        SimplexKey up = s;
        up.push_back(v);
        if (cliques.insert(up).second) next.push_back(std::move(up));
      }
    }
    frontier = std::move(next);
  }
  return SimplicialComplex::from_sorted_parts(skeleton.vertex_names(), std::move(cliques));
}

namespace {

SimplicialComplex rebuild_from_names(
    const std::set<std::vector<std::string>>& simplex_names) {
  std::set<std::string> vertex_set;
  for (const auto& s : simplex_names)
    for (const auto& v : s) vertex_set.insert(v);
  std::vector<std::string> vertices(vertex_set.begin(), vertex_set.end());
  std::map<std::string, VertexIx> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index.emplace(vertices[i], static_cast<VertexIx>(i));
  SimplexSet simplices;
  for (const auto& s : simplex_names) {
    SimplexKey key;
    key.reserve(s.size());
    for (const auto& v : s) key.push_back(index.at(v));
    std::sort(key.begin(), key.end());
    simplices.insert(std::move(key));
  }
  return SimplicialComplex::from_sorted_parts(std::move(vertices), std::move(simplices));
}

std::set<std::vector<std::string>> simplex_names_of(const SimplicialComplex& x) {
  std::set<std::vector<std::string>> out;
  for (const auto& s : x.simplices()) out.insert(x.names_of(s));
  return out;
}

void require_parts_inside(const SimplicialComplex& ambient,
                          const std::vector<SimplicialComplex>& parts) {
  for (const auto& part : parts)
    if (!is_subcomplex(part, ambient))
      fail(errc::ambient_mismatch, "part is not a subcomplex of the ambient complex");
}

}  // namespace

SimplicialComplex complex_union(const SimplicialComplex& ambient,
                                const std::vector<SimplicialComplex>& parts) {
  require_parts_inside(ambient, parts);
  std::set<std::vector<std::string>> acc;
  for (const auto& part : parts) {
    auto names = simplex_names_of(part);
    acc.insert(names.begin(), names.end());
  }
  return rebuild_from_names(acc);
}

SimplicialComplex complex_intersection(const SimplicialComplex& ambient,
                                       const std::vector<SimplicialComplex>& parts) {
  require_parts_inside(ambient, parts);
  if (parts.empty()) return ambient;
  std::set<std::vector<std::string>> acc = simplex_names_of(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto names = simplex_names_of(parts[i]);
    std::set<std::vector<std::string>> kept;
    for (const auto& s : acc)
      if (names.count(s)) kept.insert(s);
    acc = std::move(kept);
  }
  return rebuild_from_names(acc);
}

std::string subdivision_vertex_name(const std::vector<std::string>& simplex_names) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < simplex_names.size(); ++i) {
    if (i) os << '|';
    os << simplex_names[i];
  }
  os << '}';
  return os.str();
}

const std::vector<std::string>& Subdivision::simplex_for(const std::string& vertex) const {
  auto it = provenance.find(vertex);
  if (it == provenance.end()) fail(errc::unknown_vertex, "'" + vertex + "'");
  return it->second;
}

std::string Subdivision::vertex_for(const std::vector<std::string>& simplex_names) const {
  std::vector<std::string> sorted = simplex_names;
  std::sort(sorted.begin(), sorted.end());
  std::string name = subdivision_vertex_name(sorted);
  if (!provenance.count(name)) fail(errc::unknown_vertex, "no subdivision vertex for given simplex");
  return name;
}

Subdivision barycentric_subdivision(const SimplicialComplex& x) {
  // One new vertex per simplex of x; simplices of the output are the chains
  // of the face poset of x.
  std::vector<SimplexKey> cells(x.simplices().begin(), x.simplices().end());
  const std::size_t m = cells.size();

  Subdivision out;
  std::vector<std::string> new_names(m);
  for (std::size_t i = 0; i < m; ++i) {
    new_names[i] = subdivision_vertex_name(x.names_of(cells[i]));
    out.provenance.emplace(new_names[i], x.names_of(cells[i]));
  }
  std::vector<std::string> table = new_names;
  std::sort(table.begin(), table.end());
  std::map<std::string, VertexIx> index;
  for (std::size_t i = 0; i < table.size(); ++i)
    index.emplace(table[i], static_cast<VertexIx>(i));

  // cells are listed in canonical order, so faces precede cofaces; a chain
  // can only extend to strictly later cells of strictly larger dimension.
  auto is_face = [](const SimplexKey& a, const SimplexKey& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::vector<std::size_t>> cofaces(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (is_face(cells[i], cells[j])) cofaces[i].push_back(j);

  SimplexSet chains;
  std::vector<std::size_t> stack;
  auto record = [&]() {
    SimplexKey key;
    key.reserve(stack.size());
    for (std::size_t c : stack) key.push_back(index.at(new_names[c]));
    std::sort(key.begin(), key.end());
    chains.insert(std::move(key));
  };
  // Depth-first over chains; every nonempty prefix is itself a chain.
  auto dfs = [&](auto&& self, std::size_t top) -> void {
    stack.push_back(top);
    record();
    for (std::size_t next : cofaces[top]) self(self, next);
    stack.pop_back();
  };
  for (std::size_t i = 0; i < m; ++i) dfs(dfs, i);

  out.complex = SimplicialComplex::from_sorted_parts(std::move(table), std::move(chains));
  return out;
}

Cover Cover::checked(SimplicialComplex ambient,
                     std::vector<std::pair<std::string, SimplicialComplex>> parts) {
  std::set<std::string> names;
  for (const auto& [name, part] : parts) {
    if (!names.insert(name).second)
      fail(errc::name_collision, "duplicate part name '" + name + "'");
    if (!is_subcomplex(part, ambient))
      fail(errc::ambient_mismatch, "cover part '" + name + "' not inside ambient");
  }
  return Cover{std::move(ambient), std::move(parts)};
}

SimplicialComplex nerve_of_cover(const Cover& cover) {
  const std::size_t n = cover.parts.size();
  std::vector<std::string> names(n);
  std::vector<std::set<std::string>> verts(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = cover.parts[i].first;
    const auto& part = cover.parts[i].second;
    if (part.vertex_count() == 0)
      fail(errc::empty_part, "cover part '" + names[i] + "' is empty");
    verts[i].insert(part.vertex_names().begin(), part.vertex_names().end());
  }
  std::vector<std::string> table = names;
  std::sort(table.begin(), table.end());
  for (std::size_t i = 1; i < table.size(); ++i)
    if (table[i] == table[i - 1]) fail(errc::name_collision, "duplicate part name");
  std::map<std::string, VertexIx> index;
  for (std::size_t i = 0; i < table.size(); ++i)
    index.emplace(table[i], static_cast<VertexIx>(i));

  SimplexSet simplices;
  // Depth-first over part subsets carrying the running vertex intersection;
  // empty intersections prune the whole branch.
  std::vector<std::size_t> stack;
  auto record = [&]() {
    SimplexKey key;
    for (std::size_t p : stack) key.push_back(index.at(names[p]));
    std::sort(key.begin(), key.end());
    simplices.insert(std::move(key));
  };
  auto dfs = [&](auto&& self, std::size_t top, std::set<std::string> common) -> void {
    stack.push_back(top);
    record();
    for (std::size_t next = top + 1; next < n; ++next) {
      std::set<std::string> met;
      for (const auto& v : common)
        if (verts[next].count(v)) met.insert(v);
      if (!met.empty()) self(self, next, std::move(met));
    }
    stack.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i) dfs(dfs, i, verts[i]);

  return SimplicialComplex::from_sorted_parts(std::move(table), std::move(simplices));
}

}  // namespace davisforge
