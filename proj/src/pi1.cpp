#include "davisforge/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace davisforge {

namespace {

// ---------------------------------------------------------------------------
// Coset enumeration.
//
// The table has one row per coset and one column per generator letter
// (columns 2k and 2k+1 hold the images under generator k and its inverse).
// Coincidences are handled with a union-find whose representative is always
// the smallest equivalent coset index, so coset 0 — the subgroup itself —
// is never renamed and the outcome is deterministic.

class CosetTable {
 public:
  CosetTable(int columns, long) : columns_(columns) { define(); }

  static int inverse_column(int c) { return c ^ 1; }

  long live() const { return live_; }
  long defined() const { return static_cast<long>(table_.size()); }

  long find(long a) {
    while (rep_[a] != a) {
      rep_[a] = rep_[rep_[a]];
      a = rep_[a];
    }
    return a;
  }

  bool is_live(long a) { return find(a) == a; }

  // Traces word w (a column sequence) from coset a.  When the trace meets
  // in the middle the two ends are identified; a single gap becomes a table
  // entry.  With fill set, interior gaps are closed by defining new cosets,
  // so the trace always completes; without it the scan is a cheap
  // deduction-only pass (used during lookahead).
  void scan(long a, const std::vector<int>& w, bool fill) {
    long f = find(a);
    long b = f;
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && table_[f][w[i]] >= 0) f = find(table_[f][w[i]]), ++i;
      if (i == j) {
        merge(f, b);
        settle();
        return;
      }
      while (j > i && table_[b][inverse_column(w[j - 1])] >= 0)
        b = find(table_[b][inverse_column(w[j - 1])]), --j;
      if (i == j) {
        merge(f, b);
        settle();
        return;
      }
      if (i + 1 == j) {
        table_[f][w[i]] = b;
        table_[b][inverse_column(w[i])] = f;
        return;
      }
      if (!fill) return;
      long c = define();
      table_[f][w[i]] = c;
      table_[c][inverse_column(w[i])] = f;
    }
  }

  // Completes the row of a live coset, defining a new coset per gap.
  void fill_row(long a) {
    for (int x = 0; x < columns_; ++x)
      if (table_[a][x] < 0) {
        long c = define();
        table_[a][x] = c;
        table_[c][inverse_column(x)] = a;
      }
  }

  // Drops dead rows and renumbers the live ones in order; returns the new
  // index of the given live coset.
  long compact(long follow) {
    std::vector<long> to_new(table_.size(), -1);
    long next = 0;
    for (long i = 0; i < defined(); ++i)
      if (is_live(i)) to_new[i] = next++;
    std::vector<std::vector<long>> packed(next, std::vector<long>(columns_, -1));
    for (long i = 0; i < defined(); ++i) {
      if (to_new[i] < 0) continue;
      for (int x = 0; x < columns_; ++x)
        if (table_[i][x] >= 0) packed[to_new[i]][x] = to_new[find(table_[i][x])];
    }
    table_.swap(packed);
    rep_.resize(next);
    std::iota(rep_.begin(), rep_.end(), 0L);
    return to_new[find(follow)];
  }

 private:
  long define() {
    table_.emplace_back(columns_, -1L);
    rep_.push_back(static_cast<long>(rep_.size()));
    ++live_;
    return static_cast<long>(table_.size()) - 1;
  }

  void merge(long a, long b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --live_;
    pending_.push_back(b);
  }

  // Transfers the rows of merged-away cosets onto their representatives,
  // recording any fresh identifications this forces.
  void settle() {
    while (!pending_.empty()) {
      long dead = pending_.front();
      pending_.pop_front();
      for (int x = 0; x < columns_; ++x) {
        long target = table_[dead][x];
        if (target < 0) continue;
        table_[dead][x] = -1;
        if (table_[target][inverse_column(x)] == dead)
          table_[target][inverse_column(x)] = -1;
        long mu = find(dead), nu = find(target);
        if (table_[mu][x] >= 0)
          merge(nu, find(table_[mu][x]));
        else if (table_[nu][inverse_column(x)] >= 0)
          merge(mu, find(table_[nu][inverse_column(x)]));
        else {
          table_[mu][x] = nu;
          table_[nu][inverse_column(x)] = mu;
        }
      }
    }
  }

  int columns_;
  long live_ = 0;
  std::vector<std::vector<long>> table_;
  std::vector<long> rep_;
  std::deque<long> pending_;
};

std::vector<int> word_to_columns(const std::vector<int>& word, int generators) {
  std::vector<int> cols;
  cols.reserve(word.size());
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > generators)
      fail(errc::invalid_input,
           "word letter " + std::to_string(letter) + " names no generator");
    cols.push_back(2 * (std::abs(letter) - 1) + (letter > 0 ? 0 : 1));
  }
  return cols;
}

}  // namespace

long todd_coxeter(const Presentation& pres,
                  const std::vector<std::vector<int>>& subgroup_generators,
                  long max_cosets) {
  if (max_cosets < 1) fail(errc::invalid_input, "max_cosets must be positive");
  const int n = static_cast<int>(pres.generators.size());

  std::vector<std::vector<int>> relators, subgroup;
  for (const auto& w : pres.relators) relators.push_back(word_to_columns(w, n));
  for (const auto& w : subgroup_generators)
    subgroup.push_back(word_to_columns(w, n));

  CosetTable table(2 * n, max_cosets);
  for (const auto& w : subgroup) table.scan(0, w, true);

  long alpha = 0;
  while (alpha < table.defined()) {
    if (!table.is_live(alpha)) {
      ++alpha;
      continue;
    }
    for (const auto& w : relators) {
      table.scan(alpha, w, true);
      if (!table.is_live(alpha)) break;
    }
    if (table.is_live(alpha)) table.fill_row(alpha);
    ++alpha;
    if (table.live() > max_cosets) {
      // Lookahead: a deduction-only pass over the whole table often
      // collapses an overgrown enumeration without defining anything new.
      for (long a = 0; a < table.defined(); ++a) {
        if (!table.is_live(a)) continue;
        for (const auto& w : relators) {
          table.scan(a, w, false);
          if (!table.is_live(a)) break;
        }
      }
      if (table.live() > max_cosets)
        fail(errc::coset_limit_exceeded,
             "enumeration still holds " + std::to_string(table.live()) +
                 " cosets after lookahead (limit " + std::to_string(max_cosets) +
                 "); the index may be finite but larger, or infinite");
      alpha = table.compact(alpha);
    }
  }
  return table.live();
}

Presentation presentation_from_two_complex(const SimplicialComplex& x,
                                           const std::string& base_vertex) {
  const long n = x.vertex_count();
  if (n == 0) fail(errc::not_connected, "the empty complex has no base point");
  VertexIx base = 0;
  if (!base_vertex.empty()) {
    base = x.index_of(base_vertex);
    if (base < 0) fail(errc::unknown_vertex, "base vertex '" + base_vertex + "'");
  }

  std::vector<std::vector<VertexIx>> adjacent(n);
  for (const SimplexKey& e : x.simplices_of_dimension(1)) {
    adjacent[e[0]].push_back(e[1]);
    adjacent[e[1]].push_back(e[0]);
  }
  for (auto& row : adjacent) std::sort(row.begin(), row.end());

  std::vector<VertexIx> parent(n, -1);
  std::vector<char> reached(n, 0);
  std::deque<VertexIx> queue{base};
  reached[base] = 1;
  long found = 1;
  while (!queue.empty()) {
    VertexIx v = queue.front();
    queue.pop_front();
    for (VertexIx w : adjacent[v])
      if (!reached[w]) {
        reached[w] = 1;
        parent[w] = v;
        ++found;
        queue.push_back(w);
      }
  }
  if (found < n)
    fail(errc::not_connected, "only " + std::to_string(found) + " of " +
                                  std::to_string(n) +
                                  " vertices reachable from the base vertex");

  std::set<SimplexKey> tree;
  for (VertexIx v = 0; v < n; ++v)
    if (parent[v] >= 0)
      tree.insert({std::min(v, parent[v]), std::max(v, parent[v])});

  Presentation pres;
  std::map<SimplexKey, int> generator_of;
  for (const SimplexKey& e : x.simplices_of_dimension(1)) {
    if (tree.count(e)) continue;
    generator_of.emplace(e, static_cast<int>(pres.generators.size()));
    pres.generators.push_back("x" + std::to_string(pres.generators.size()));
  }

  // Signed letter of the oriented edge u -> v; 0 when the edge lies in the
  // tree and contributes nothing to an edge path's word.
  auto letter = [&](VertexIx u, VertexIx v) -> int {
    SimplexKey e{std::min(u, v), std::max(u, v)};
    auto it = generator_of.find(e);
    if (it == generator_of.end()) return 0;
    return u < v ? it->second + 1 : -(it->second + 1);
  };

  for (const SimplexKey& t : x.simplices_of_dimension(2)) {
    std::vector<int> word;
    for (int l : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (l != 0) word.push_back(l);
    pres.relators.push_back(std::move(word));
  }
  return pres;
}

ExponentMatrix exponent_matrix(const Presentation& pres) {
  const long n = static_cast<long>(pres.generators.size());
  if (static_cast<long>(pres.relators.size()) != n)
    fail(errc::shape_mismatch,
         std::to_string(pres.relators.size()) + " relators on " +
             std::to_string(n) + " generators; a square exponent matrix needs "
                                 "equally many of each");
  ExponentMatrix result{IntMat(n, n), 0};
  for (long i = 0; i < n; ++i)
    for (int letter : pres.relators[i]) {
      if (letter == 0 || std::abs(letter) > n)
        fail(errc::invalid_input,
             "word letter " + std::to_string(letter) + " names no generator");
      result.exponents.at(i, std::abs(letter) - 1) += (letter > 0 ? 1 : -1);
    }
  result.det = determinant(result.exponents);
  return result;
}

NerveComparison nerve_homology_comparison(const Cover& cover) {
  Cover checked = Cover::checked(cover.ambient, cover.parts);
  NerveComparison result;
  result.nerve = nerve_of_cover(checked);

  std::map<std::string, const SimplicialComplex*> part_of;
  for (const auto& [name, part] : checked.parts) part_of.emplace(name, &part);

  // A set of parts intersects nontrivially exactly when it shares a vertex
  // (parts are face-closed), so the nerve's simplices enumerate every
  // nonempty intersection.
  for (const SimplexKey& s : result.nerve.simplices()) {
    std::vector<SimplicialComplex> members;
    for (VertexIx v : s) members.push_back(*part_of.at(result.nerve.vertex_name(v)));
    SimplicialComplex meet = complex_intersection(checked.ambient, members);
    if (!reduced_homology(meet, Coefficients::integers()).is_trivial()) {
      std::string names;
      for (VertexIx v : s) {
        if (!names.empty()) names += ", ";
        names += result.nerve.vertex_name(v);
      }
      fail(errc::inapplicable_cover,
           "the intersection of {" + names + "} is not acyclic");
    }
  }

  std::vector<SimplicialComplex> all;
  for (const auto& [name, part] : checked.parts) all.push_back(part);
  SimplicialComplex joined = complex_union(checked.ambient, all);
  result.cover_homology = reduced_homology(joined, Coefficients::integers());
  result.nerve_homology = reduced_homology(result.nerve, Coefficients::integers());
  if (!(result.cover_homology == result.nerve_homology))
    fail(errc::verification_failed,
         "the union of the cover and its nerve disagree in reduced homology");
  return result;
}

}  // namespace davisforge
