#include "davisforge/chain_complex.hpp"

#include <algorithm>
#include <sstream>

namespace davisforge {

ChainComplex::ChainComplex(int lowest, std::vector<std::vector<std::string>> labels,
                           std::vector<SparseMat> boundaries)
    : lowest_(lowest), labels_(std::move(labels)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != labels_.size())
    fail(errc::shape_mismatch, "one boundary per degree expected");
  index_.resize(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < labels_[i].size(); ++j)
      index_[i].emplace(labels_[i][j], static_cast<long>(j));
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    const SparseMat& b = boundaries_[i];
    if (b.rows() != static_cast<long>(labels_[i - 1].size()) ||
        b.cols() != static_cast<long>(labels_[i].size()))
      fail(errc::shape_mismatch, "boundary shape at degree " +
                                     std::to_string(lowest_ + static_cast<int>(i)));
    if (i >= 2 && !(boundaries_[i - 1] * b).is_zero())
      fail(errc::invalid_input, "boundary composite nonzero at degree " +
                                    std::to_string(lowest_ + static_cast<int>(i)));
  }
}

ChainComplex ChainComplex::zero() { return ChainComplex(0, {}, {}); }

long ChainComplex::dim(int degree) const {
  int i = degree - lowest_;
  if (i < 0 || i >= static_cast<int>(labels_.size())) return 0;
  return static_cast<long>(labels_[i].size());
}

const std::vector<std::string>& ChainComplex::labels(int degree) const {
  static const std::vector<std::string> none;
  int i = degree - lowest_;
  if (i < 0 || i >= static_cast<int>(labels_.size())) return none;
  return labels_[i];
}

long ChainComplex::index_of(int degree, const std::string& label) const {
  int i = degree - lowest_;
  if (i < 0 || i >= static_cast<int>(labels_.size())) return -1;
  auto it = index_[i].find(label);
  return it == index_[i].end() ? -1 : it->second;
}

SparseMat ChainComplex::boundary(int degree) const {
  int i = degree - lowest_;
  if (i < 1 || i >= static_cast<int>(labels_.size()))
    return SparseMat(dim(degree - 1), dim(degree));
  return boundaries_[i];
}

long long ChainComplex::total_dim() const {
  long long n = 0;
  for (const auto& l : labels_) n += static_cast<long long>(l.size());
  return n;
}

std::string group_to_string(const GroupSummary& g) {
  std::ostringstream os;
  bool first = true;
  if (g.betti > 0) {
    os << "Z";
    if (g.betti > 1) os << "^" << g.betti;
    first = false;
  }
  for (const bigint& d : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupSummary HomologySummary::at(int degree) const {
  int i = degree - lowest_;
  if (i < 0 || i >= static_cast<int>(groups_.size())) return GroupSummary{};
  return groups_[i];
}

bool HomologySummary::operator==(const HomologySummary& rhs) const {
  int lo = std::min(lowest_, rhs.lowest_);
  int hi = std::max(highest(), rhs.highest());
  for (int k = lo; k <= hi; ++k)
    if (!(at(k) == rhs.at(k))) return false;
  return true;
}

bool HomologySummary::is_trivial() const {
  for (const auto& g : groups_)
    if (!g.trivial()) return false;
  return true;
}

namespace {

std::string simplex_label(const SimplicialComplex& x, const SimplexKey& s) {
  return subdivision_vertex_name(x.names_of(s));
}

}  // namespace

ChainComplex chain_complex_of(const SimplicialComplex& x, bool reduced) {
  const int top = x.dimension();
  if (top < 0) {
    if (!reduced) return ChainComplex::zero();
    // Augmentation only: a single generator in degree -1.
    return ChainComplex(-1, {{"{}"}}, {SparseMat(0, 1)});
  }
  const int lowest = reduced ? -1 : 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<SparseMat> boundaries;
  std::vector<std::vector<SimplexKey>> cells;
  if (reduced) {
    labels.push_back({"{}"});
    boundaries.emplace_back(0, 1);
    cells.push_back({});
  }
  std::vector<std::map<SimplexKey, long>> pos(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    auto list = x.simplices_of_dimension(k);
    std::vector<std::string> l;
    l.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      pos[k].emplace(list[i], static_cast<long>(i));
      l.push_back(simplex_label(x, list[i]));
    }
    labels.push_back(std::move(l));
    cells.push_back(std::move(list));
  }
  // boundaries: index i in [1, size) maps degree lowest+i.
  for (int k = 0; k <= top; ++k) {
    const auto& here = cells[static_cast<std::size_t>(k - lowest)];
    if (k == 0) {
      if (reduced) {
        SparseMat aug(1, static_cast<long>(here.size()));
        for (long j = 0; j < static_cast<long>(here.size()); ++j) aug.set(0, j, 1);
        boundaries.push_back(std::move(aug));
      } else {
        boundaries.emplace_back(0, static_cast<long>(here.size()));
      }
      continue;
    }
    const auto& below = pos[k - 1];
    SparseMat b(static_cast<long>(below.size()), static_cast<long>(here.size()));
    for (long j = 0; j < static_cast<long>(here.size()); ++j) {
      const SimplexKey& s = here[static_cast<std::size_t>(j)];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        SimplexKey face;
        face.reserve(s.size() - 1);
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        b.set(below.at(face), j, (drop % 2 == 0) ? 1 : -1);
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(lowest, std::move(labels), std::move(boundaries));
}

ChainComplex relative_chain_complex(const SimplicialComplex& x,
                                    const SimplicialComplex& a) {
  if (!is_subcomplex(a, x)) fail(errc::not_subcomplex, "relative_chain_complex");
  const int top = x.dimension();
  if (top < 0) return ChainComplex::zero();
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<SimplexKey>> cells(static_cast<std::size_t>(top) + 1);
  std::vector<std::map<SimplexKey, long>> pos(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    for (const auto& s : x.simplices_of_dimension(k)) {
      if (a.contains(x.names_of(s))) continue;
      pos[k].emplace(s, static_cast<long>(cells[k].size()));
      cells[k].push_back(s);
      labels[k].push_back(simplex_label(x, s));
    }
  }
  std::vector<SparseMat> boundaries;
  boundaries.emplace_back(0, static_cast<long>(cells[0].size()));
  for (int k = 1; k <= top; ++k) {
    SparseMat b(static_cast<long>(cells[k - 1].size()), static_cast<long>(cells[k].size()));
    for (long j = 0; j < static_cast<long>(cells[k].size()); ++j) {
      const SimplexKey& s = cells[k][static_cast<std::size_t>(j)];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        SimplexKey face;
        face.reserve(s.size() - 1);
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        auto it = pos[k - 1].find(face);
        if (it == pos[k - 1].end()) continue;  // the face lies in a
        b.set(it->second, j, (drop % 2 == 0) ? 1 : -1);
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(0, std::move(labels), std::move(boundaries));
}

namespace {

// Shared engine for homology/cohomology.  maps[i] is the map out of degree
// lowest+i in the direction that decreases homological degree, i.e. for
// homology it is the boundary and for cohomology the transposed coboundary
// indexed so that the formulas below coincide.
HomologySummary summarize(int lowest, const std::vector<long>& dims,
                          const std::vector<IntMat>& out_of,  // out_of[i]: deg i -> i-1
                          Coefficients k) {
  const int n = static_cast<int>(dims.size());
  std::vector<long> rank(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<bigint>> tors(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i < n; ++i) {
    if (k.is_field()) {
      rank[i] = rank_mod_p(out_of[i], k.p());
    } else {
      auto f = invariant_factors(out_of[i]);
      rank[i] = static_cast<long>(f.size());
      for (const bigint& d : f)
        if (d > 1) tors[i].push_back(d);
    }
  }
  std::vector<GroupSummary> groups(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    groups[i].betti = dims[i] - rank[i] - rank[i + 1];
    groups[i].torsion = tors[i + 1];
  }
  return HomologySummary(lowest, std::move(groups));
}

}  // namespace

HomologySummary homology(const ChainComplex& c, Coefficients k) {
  const int lo = c.lowest(), hi = c.highest();
  if (hi < lo) return HomologySummary(0, {});
  std::vector<long> dims;
  std::vector<IntMat> out_of;
  out_of.emplace_back(0, 0);  // the boundary out of the lowest degree is zero
  for (int d = lo; d <= hi; ++d) {
    dims.push_back(c.dim(d));
    if (d > lo) out_of.push_back(c.boundary(d).to_dense());
  }
  return summarize(lo, dims, out_of, k);
}

HomologySummary cohomology(const ChainComplex& c, Coefficients k) {
  // H^d = ker(delta^d)/im(delta^{d-1}) with delta^d the transpose of the
  // boundary into degree d.  Reindexing by j = hi - d turns the cochain
  // complex into a chain complex whose degree-j group is C^{hi-j} and whose
  // outgoing map is delta^{hi-j-1} transposed = boundary(hi-j)^T.
  const int lo = c.lowest(), hi = c.highest();
  if (hi < lo) return HomologySummary(0, {});
  const int n = hi - lo + 1;
  std::vector<long> dims(static_cast<std::size_t>(n));
  std::vector<IntMat> out_of(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int d = hi - j;
    dims[j] = c.dim(d);
    if (j >= 1) out_of[j] = c.boundary(d + 1).transpose().to_dense();
  }
  HomologySummary rev = summarize(0, dims, out_of, k);
  std::vector<GroupSummary> groups(static_cast<std::size_t>(n));
  for (int d = lo; d <= hi; ++d) groups[d - lo] = rev.at(hi - d);
  return HomologySummary(lo, std::move(groups));
}

HomologySummary reduced_homology(const SimplicialComplex& x, Coefficients k) {
  return homology(chain_complex_of(x, true), k);
}

ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d) {
  if (c.highest() < c.lowest() || d.highest() < d.lowest())
    return ChainComplex::zero();
  const int lo = c.lowest() + d.lowest();
  const int hi = c.highest() + d.highest();
  struct Block {
    int i;         // degree in c
    long offset;   // start of this block in the degree's basis
  };
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<Block>> blocks;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> l;
    std::vector<Block> bl;
    for (int i = std::max(c.lowest(), n - d.highest());
         i <= std::min(c.highest(), n - d.lowest()); ++i) {
      const int j = n - i;
      if (c.dim(i) == 0 || d.dim(j) == 0) continue;
      bl.push_back({i, static_cast<long>(l.size())});
      for (const auto& a : c.labels(i))
        for (const auto& b : d.labels(j)) l.push_back(a + "⊗" + b);
    }
    labels.push_back(std::move(l));
    blocks.push_back(std::move(bl));
  }
  auto position = [&](int n, int i, long a_ix, long b_ix) -> long {
    for (const Block& bl : blocks[static_cast<std::size_t>(n - lo)])
      if (bl.i == i) return bl.offset + a_ix * d.dim(n - i) + b_ix;
    return -1;
  };
  std::vector<SparseMat> boundaries;
  boundaries.emplace_back(0, static_cast<long>(labels[0].size()));
  for (int n = lo + 1; n <= hi; ++n) {
    SparseMat bnd(static_cast<long>(labels[static_cast<std::size_t>(n - 1 - lo)].size()),
                  static_cast<long>(labels[static_cast<std::size_t>(n - lo)].size()));
    for (const Block& bl : blocks[static_cast<std::size_t>(n - lo)]) {
      const int i = bl.i, j = n - i;
      const SparseMat dc = c.boundary(i);
      const SparseMat dd = d.boundary(j);
      const int sign = (i % 2 == 0) ? 1 : -1;
      for (long a_ix = 0; a_ix < c.dim(i); ++a_ix)
        for (long b_ix = 0; b_ix < d.dim(j); ++b_ix) {
          const long col = bl.offset + a_ix * d.dim(j) + b_ix;
          for (const auto& [a2, coef] : dc.column(a_ix)) {
            long row = position(n - 1, i - 1, a2, b_ix);
            if (row >= 0) bnd.add(row, col, coef);
          }
          for (const auto& [b2, coef] : dd.column(b_ix)) {
            long row = position(n - 1, i, a_ix, b2);
            if (row >= 0) bnd.add(row, col, sign * coef);
          }
        }
    }
    boundaries.push_back(std::move(bnd));
  }
  return ChainComplex(lo, std::move(labels), std::move(boundaries));
}

bool is_chain_map(const std::map<int, SparseMat>& f, const ChainComplex& c,
                  const ChainComplex& d) {
  auto component = [&](int k) -> SparseMat {
    auto it = f.find(k);
    if (it == f.end()) return SparseMat(d.dim(k), c.dim(k));
    if (it->second.rows() != d.dim(k) || it->second.cols() != c.dim(k))
      fail(errc::shape_mismatch,
           "chain map component at degree " + std::to_string(k));
    return it->second;
  };
  const int lo = std::min(c.lowest(), d.lowest());
  const int hi = std::max(c.highest(), d.highest());
  for (int k = lo; k <= hi; ++k) {
    SparseMat lhs = d.boundary(k) * component(k);
    SparseMat rhs = component(k - 1) * c.boundary(k);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

HomologySummary subcomplex_acyclic_constraints(const SimplicialComplex& ambient,
                                               const SimplicialComplex& y) {
  if (ambient.dimension() > 2)
    fail(errc::hypothesis_failed, "ambient complex must have dimension <= 2");
  if (!reduced_homology(ambient, Coefficients::integers()).is_trivial())
    fail(errc::hypothesis_failed, "ambient complex must be acyclic");
  if (!is_subcomplex(y, ambient)) fail(errc::not_subcomplex, "subcomplex_acyclic_constraints");
  HomologySummary h = homology(chain_complex_of(y, false), Coefficients::integers());
  if (!h.at(2).trivial())
    fail(errc::constraint_violated, "H_2 of subcomplex nonzero");
  for (int k = h.lowest(); k <= h.highest(); ++k)
    if (!h.at(k).torsion.empty())
      fail(errc::constraint_violated, "torsion in H_" + std::to_string(k));
  return h;
}

}  // namespace davisforge
