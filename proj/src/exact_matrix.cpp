#include "davisforge/exact_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace davisforge {

IntMat IntMat::identity(long n) {
  IntMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::shape_mismatch, "matrix product");
  IntMat out(rows_, rhs.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const bigint& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < rhs.cols_; ++j) {
        const bigint& b = rhs.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

bool IntMat::is_zero() const {
  for (const bigint& x : a_)
    if (x != 0) return false;
  return true;
}

void SparseMat::add(long r, long c, const bigint& v) {
  if (v == 0) return;
  auto& col = col_[c];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
  } else {
    it->second += v;
    if (it->second == 0) col.erase(it);
  }
}

void SparseMat::set(long r, long c, const bigint& v) {
  auto& col = col_[c];
  if (v == 0)
    col.erase(r);
  else
    col[r] = v;
}

bigint SparseMat::get(long r, long c) const {
  auto it = col_[c].find(r);
  return it == col_[c].end() ? bigint(0) : it->second;
}

SparseMat SparseMat::operator*(const SparseMat& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::shape_mismatch, "sparse product");
  SparseMat out(rows_, rhs.cols_);
  for (long j = 0; j < rhs.cols_; ++j) {
    std::map<long, bigint> acc;
    for (const auto& [k, b] : rhs.col_[j])
      for (const auto& [r, a] : col_[k]) acc[r] += a * b;
    for (auto& [r, v] : acc)
      if (v != 0) out.col_[j].emplace(r, std::move(v));
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(errc::shape_mismatch, "sparse sum");
  SparseMat out = *this;
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : rhs.col_[c]) out.add(r, c, v);
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(errc::shape_mismatch, "sparse difference");
  SparseMat out = *this;
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : rhs.col_[c]) out.add(r, c, -v);
  return out;
}

bool SparseMat::operator==(const SparseMat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && col_ == rhs.col_;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols_, rows_);
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c]) t.col_[r].emplace(c, v);
  return t;
}

IntMat SparseMat::to_dense() const {
  IntMat m(rows_, cols_);
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c]) m.at(r, c) = v;
  return m;
}

SparseMat SparseMat::from_dense(const IntMat& m) {
  SparseMat s(m.rows(), m.cols());
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) s.col_[c].emplace(r, m.at(r, c));
  return s;
}

bool SparseMat::is_zero() const {
  for (const auto& col : col_)
    if (!col.empty()) return false;
  return true;
}

long long SparseMat::nonzero_count() const {
  long long n = 0;
  for (const auto& col : col_) n += static_cast<long long>(col.size());
  return n;
}

namespace {

struct overflow_signal {};

// 64-bit integer with trapping arithmetic; elimination runs on these first
// and falls back to bigint when a trap fires.
class checked64 {
 public:
  checked64(std::int64_t v = 0) : v_(v) {}

  std::int64_t raw() const { return v_; }

  friend checked64 operator+(checked64 a, checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw overflow_signal{};
    return r;
  }
  friend checked64 operator-(checked64 a, checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw overflow_signal{};
    return r;
  }
  friend checked64 operator*(checked64 a, checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw overflow_signal{};
    return r;
  }
  friend checked64 operator/(checked64 a, checked64 b) {
    if (a.v_ == INT64_MIN && b.v_ == -1) throw overflow_signal{};
    return a.v_ / b.v_;
  }
  checked64 operator-() const {
    if (v_ == INT64_MIN) throw overflow_signal{};
    return -v_;
  }
  friend bool operator==(checked64 a, checked64 b) { return a.v_ == b.v_; }
  friend bool operator!=(checked64 a, checked64 b) { return a.v_ != b.v_; }
  friend bool operator<(checked64 a, std::int64_t b) { return a.v_ < b; }

 private:
  std::int64_t v_;
};

std::uint64_t magnitude(checked64 x) {
  std::int64_t v = x.raw();
  return v < 0 ? 0ull - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}
bigint magnitude(const bigint& x) { return abs(x); }

bool zero(checked64 x) { return x.raw() == 0; }
bool zero(const bigint& x) { return x == 0; }
bool negative(checked64 x) { return x.raw() < 0; }
bool negative(const bigint& x) { return x < 0; }

// Quotient rounded to the nearest integer, so remainders are at most half
// the divisor.  This is what keeps entry growth tame during elimination.
template <class T>
T rounded_quotient(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (!zero(r) && magnitude(r) * 2 > magnitude(b))
    q = q + ((negative(r) == negative(b)) ? T(1) : T(-1));
  return q;
}

template <class T>
void bezout(const T& a, const T& b, T& g, T& x, T& y) {
  T old_r = a, r = b;
  T old_x = T(1), cur_x = T(0);
  T old_y = T(0), cur_y = T(1);
  while (!zero(r)) {
    T q = old_r / r;
    T t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = t;
    t = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = t;
  }
  g = old_r;
  x = old_x;
  y = old_y;
}

unsigned bit_length(checked64 x) {
  return static_cast<unsigned>(std::bit_width(magnitude(x)));
}
unsigned bit_length(const bigint& x) {
  return x == 0 ? 0u : static_cast<unsigned>(msb(abs(x))) + 1;
}

// In-place Smith reduction.  Pivots are chosen with minimal absolute value
// to keep entry growth down; the transforms, when requested, are maintained
// as products of elementary operations so their determinants are +-1.
template <class T>
class SmithEngine {
 public:
  SmithEngine(long m, long n, bool transforms)
      : m_(m), n_(n), a_(static_cast<std::size_t>(m) * n), want_(transforms) {
    if (want_) {
      u_.assign(static_cast<std::size_t>(m) * m, T(0));
      v_.assign(static_cast<std::size_t>(n) * n, T(0));
      for (long i = 0; i < m; ++i) u_[i * m + i] = T(1);
      for (long j = 0; j < n; ++j) v_[j * n + j] = T(1);
    }
  }

  T& a(long i, long j) { return a_[i * n_ + j]; }
  T& u(long i, long j) { return u_[i * m_ + j]; }
  T& v(long i, long j) { return v_[i * n_ + j]; }

  void run() {
    const long steps = std::min(m_, n_);
    long rank = 0;
    for (long k = 0; k < steps; ++k) {
      if (!select_pivot(k)) break;
      reduce_at(k);
      if (negative(a(k, k))) negate_row(k);
      if (block_bits(k + 1) > 96) size_reduce(k + 1);
      ++rank;
    }
    // The diagonal entries need not divide each other yet; fix them up
    // pairwise.  gcd/lcm of multiples of an earlier entry are multiples of
    // it, so one sweep suffices.
    for (long i = 0; i + 1 < rank; ++i)
      for (long j = i + 1; j < rank; ++j) {
        T rem = a(j, j) - (a(j, j) / a(i, i)) * a(i, i);
        if (zero(rem)) continue;
        T g, x, y;
        bezout(a(i, i), a(j, j), g, x, y);
        T alpha = a(i, i) / g, beta = a(j, j) / g;
        // [x y; -beta alpha] * diag(d_i, d_j) * [1 -y*beta; 1 x*alpha]
        //   = diag(gcd, lcm); both factors have determinant one.
        two_row_op(i, j, x, y, -beta, alpha);
        two_col_op(i, j, T(1), T(1), -y * beta, x * alpha);
      }
  }

  std::vector<T> diagonal() const {
    std::vector<T> d;
    for (long k = 0; k < std::min(m_, n_); ++k) {
      const T& x = a_[k * n_ + k];
      if (zero(x)) break;
      d.push_back(x);
    }
    return d;
  }

  long m_, n_;
  std::vector<T> a_, u_, v_;
  bool want_;

 private:
  bool select_pivot(long k) {
    long bi = -1, bj = -1;
    for (long i = k; i < m_; ++i)
      for (long j = k; j < n_; ++j) {
        if (zero(a(i, j))) continue;
        if (bi < 0 || magnitude(a(i, j)) < magnitude(a(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }

  // Clears row k and column k.  Column entries are reduced pairwise,
  // smallest against next smallest (Euclid down the column), which keeps the
  // multipliers minimal; once the column is clear, reducing the row tail
  // modulo the pivot touches row k only.  Clearing a nonzero tail shrinks
  // the pivot to a proper divisor, so the alternation terminates.
  void reduce_at(long k) {
    for (;;) {
      clear_column(k);
      reduce_row_tail(k);
      if (row_tail_clear(k)) return;
      clear_row(k);
      if (column_tail_clear(k)) {
        reduce_row_tail(k);
        if (row_tail_clear(k)) return;
      }
    }
  }

  void clear_column(long k) {
    for (;;) {
      long s = -1, t = -1;  // two smallest nonzero entries of column k
      for (long i = k; i < m_; ++i) {
        if (zero(a(i, k))) continue;
        if (s < 0 || magnitude(a(i, k)) < magnitude(a(s, k))) {
          t = s;
          s = i;
        } else if (t < 0 || magnitude(a(i, k)) < magnitude(a(t, k))) {
          t = i;
        }
      }
      if (t < 0) {
        if (s >= 0) swap_rows(s, k);
        return;
      }
      row_axpy(t, s, -rounded_quotient(a(t, k), a(s, k)));
    }
  }

  void clear_row(long k) {
    for (;;) {
      long s = -1, t = -1;
      for (long j = k; j < n_; ++j) {
        if (zero(a(k, j))) continue;
        if (s < 0 || magnitude(a(k, j)) < magnitude(a(k, s))) {
          t = s;
          s = j;
        } else if (t < 0 || magnitude(a(k, j)) < magnitude(a(k, t))) {
          t = j;
        }
      }
      if (t < 0) {
        if (s >= 0) swap_cols(s, k);
        return;
      }
      col_axpy(t, s, -rounded_quotient(a(k, t), a(k, s)));
    }
  }

  void reduce_row_tail(long k) {
    for (long j = k + 1; j < n_; ++j) {
      if (zero(a(k, j))) continue;
      T q = rounded_quotient(a(k, j), a(k, k));
      if (!zero(q)) col_axpy(j, k, -q);
    }
  }

  bool row_tail_clear(long k) const {
    for (long j = k + 1; j < n_; ++j)
      if (!zero(a_[k * n_ + j])) return false;
    return true;
  }

  bool column_tail_clear(long k) const {
    for (long i = k + 1; i < m_; ++i)
      if (!zero(a_[i * n_ + k])) return false;
    return true;
  }

  unsigned block_bits(long k) const {
    unsigned bits = 0;
    for (long i = k; i < m_; ++i)
      for (long j = k; j < n_; ++j)
        bits = std::max(bits, bit_length(a_[i * n_ + j]));
    return bits;
  }

  // Pairwise Lagrange size reduction of the trailing block's rows and
  // columns.  Any integer row/column operation is legal here, and keeping
  // the block short is what stops the entries from snowballing.
  void size_reduce(long k) {
    for (int sweep = 0; sweep < 4; ++sweep) {
      bool changed = false;
      for (long i = k; i < m_; ++i)
        for (long j = k; j < m_; ++j) {
          if (i == j) continue;
          T self(0), cross(0);
          for (long c = k; c < n_; ++c) {
            self = self + a_[i * n_ + c] * a_[i * n_ + c];
            cross = cross + a_[i * n_ + c] * a_[j * n_ + c];
          }
          if (zero(self)) continue;
          T q = rounded_quotient(cross, self);
          if (zero(q)) continue;
          row_axpy(j, i, -q);
          changed = true;
        }
      for (long i = k; i < n_; ++i)
        for (long j = k; j < n_; ++j) {
          if (i == j) continue;
          T self(0), cross(0);
          for (long r = k; r < m_; ++r) {
            self = self + a_[r * n_ + i] * a_[r * n_ + i];
            cross = cross + a_[r * n_ + i] * a_[r * n_ + j];
          }
          if (zero(self)) continue;
          T q = rounded_quotient(cross, self);
          if (zero(q)) continue;
          col_axpy(j, i, -q);
          changed = true;
        }
      if (!changed) break;
    }
  }

  void swap_rows(long i, long j) {
    if (i == j) return;
    for (long c = 0; c < n_; ++c) std::swap(a(i, c), a(j, c));
    if (want_)
      for (long c = 0; c < m_; ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(long i, long j) {
    if (i == j) return;
    for (long r = 0; r < m_; ++r) std::swap(a(r, i), a(r, j));
    if (want_)
      for (long r = 0; r < n_; ++r) std::swap(v(r, i), v(r, j));
  }
  void row_axpy(long dst, long src, T q) {  // row_dst += q * row_src
    for (long c = 0; c < n_; ++c)
      if (!zero(a(src, c))) a(dst, c) = a(dst, c) + q * a(src, c);
    if (want_)
      for (long c = 0; c < m_; ++c)
        if (!zero(u(src, c))) u(dst, c) = u(dst, c) + q * u(src, c);
  }
  void col_axpy(long dst, long src, T q) {  // col_dst += q * col_src
    for (long r = 0; r < m_; ++r)
      if (!zero(a(r, src))) a(r, dst) = a(r, dst) + q * a(r, src);
    if (want_)
      for (long r = 0; r < n_; ++r)
        if (!zero(v(r, src))) v(r, dst) = v(r, dst) + q * v(r, src);
  }
  void negate_row(long k) {
    for (long c = 0; c < n_; ++c)
      if (!zero(a(k, c))) a(k, c) = -a(k, c);
    if (want_)
      for (long c = 0; c < m_; ++c)
        if (!zero(u(k, c))) u(k, c) = -u(k, c);
  }
  // rows i,j <- (aa*row_i + bb*row_j, cc*row_i + dd*row_j)
  void two_row_op(long i, long j, T aa, T bb, T cc, T dd) {
    for (long c = 0; c < n_; ++c) {
      T ri = a(i, c), rj = a(j, c);
      a(i, c) = aa * ri + bb * rj;
      a(j, c) = cc * ri + dd * rj;
    }
    if (want_)
      for (long c = 0; c < m_; ++c) {
        T ri = u(i, c), rj = u(j, c);
        u(i, c) = aa * ri + bb * rj;
        u(j, c) = cc * ri + dd * rj;
      }
  }
  // cols i,j <- (aa*col_i + bb*col_j, cc*col_i + dd*col_j)
  void two_col_op(long i, long j, T aa, T bb, T cc, T dd) {
    for (long r = 0; r < m_; ++r) {
      T ci = a(r, i), cj = a(r, j);
      a(r, i) = aa * ci + bb * cj;
      a(r, j) = cc * ci + dd * cj;
    }
    if (want_)
      for (long r = 0; r < n_; ++r) {
        T ci = v(r, i), cj = v(r, j);
        v(r, i) = aa * ci + bb * cj;
        v(r, j) = cc * ci + dd * cj;
      }
  }
};

bool fits_i64(const bigint& x) {
  static const bigint lo(INT64_MIN), hi(INT64_MAX);
  return x >= lo && x <= hi;
}

bool load_checked(const IntMat& m, SmithEngine<checked64>& eng) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      if (!fits_i64(m.at(i, j))) return false;
      eng.a(i, j) = checked64(static_cast<std::int64_t>(m.at(i, j)));
    }
  return true;
}

void load_big(const IntMat& m, SmithEngine<bigint>& eng) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) eng.a(i, j) = m.at(i, j);
}

}  // namespace

std::vector<bigint> SmithResult::diagonal() const {
  std::vector<bigint> out;
  for (long k = 0; k < std::min(d.rows(), d.cols()); ++k) {
    if (d.at(k, k) == 0) break;
    out.push_back(d.at(k, k));
  }
  return out;
}

SmithResult smith_normal_form(const IntMat& m) {
  SmithEngine<checked64> fast(m.rows(), m.cols(), true);
  if (load_checked(m, fast)) {
    try {
      fast.run();
      SmithResult res;
      res.u = IntMat(m.rows(), m.rows());
      res.d = IntMat(m.rows(), m.cols());
      res.v = IntMat(m.cols(), m.cols());
      for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.rows(); ++j) res.u.at(i, j) = fast.u(i, j).raw();
      for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) res.d.at(i, j) = fast.a(i, j).raw();
      for (long i = 0; i < m.cols(); ++i)
        for (long j = 0; j < m.cols(); ++j) res.v.at(i, j) = fast.v(i, j).raw();
      return res;
    } catch (overflow_signal&) {
      // fall through to exact arithmetic
    }
  }
  SmithEngine<bigint> eng(m.rows(), m.cols(), true);
  load_big(m, eng);
  eng.run();
  SmithResult res;
  res.u = IntMat(m.rows(), m.rows());
  res.d = IntMat(m.rows(), m.cols());
  res.v = IntMat(m.cols(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.rows(); ++j) res.u.at(i, j) = eng.u(i, j);
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) res.d.at(i, j) = eng.a(i, j);
  for (long i = 0; i < m.cols(); ++i)
    for (long j = 0; j < m.cols(); ++j) res.v.at(i, j) = eng.v(i, j);
  return res;
}

std::vector<bigint> invariant_factors(const IntMat& m) {
  SmithEngine<checked64> fast(m.rows(), m.cols(), false);
  if (load_checked(m, fast)) {
    try {
      fast.run();
      std::vector<bigint> out;
      for (checked64 x : fast.diagonal()) out.emplace_back(x.raw());
      return out;
    } catch (overflow_signal&) {
    }
  }
  SmithEngine<bigint> eng(m.rows(), m.cols(), false);
  load_big(m, eng);
  eng.run();
  return eng.diagonal();
}

// Boundary matrices are sparse with unit entries almost everywhere.  Pivot
// on +-1 entries (cheapest fill first): each such pivot contributes an
// invariant factor 1 exactly, and the leftover core is usually tiny, so the
// dense engine only ever sees that core.
std::vector<bigint> invariant_factors(const SparseMat& m) {
  std::vector<std::map<long, std::int64_t>> rows(m.rows());
  std::vector<std::map<long, std::int64_t>> cols(m.cols());
  for (long c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      if (!fits_i64(v)) return invariant_factors(m.to_dense());
      auto x = static_cast<std::int64_t>(v);
      rows[r].emplace(c, x);
      cols[c].emplace(r, x);
    }
  long ones = 0;
  try {
    for (;;) {
      long pr = -1, pc = -1;
      long long best = -1;
      for (long r = 0; r < m.rows() && best != 0; ++r)
        for (const auto& [c, v] : rows[r]) {
          if (v != 1 && v != -1) continue;
          long long cost = static_cast<long long>(rows[r].size() - 1) *
                           static_cast<long long>(cols[c].size() - 1);
          if (best < 0 || cost < best) {
            best = cost;
            pr = r;
            pc = c;
            if (best == 0) break;
          }
        }
      if (pr < 0) break;
      const std::int64_t s = rows[pr].at(pc);  // +-1
      const auto piv_row = rows[pr];           // copy: rows[pr] mutates below
      std::vector<long> hit;
      for (const auto& [r, v] : cols[pc])
        if (r != pr) hit.push_back(r);
      for (long r : hit) {
        checked64 f = checked64(rows[r].at(pc)) * checked64(s);
        for (const auto& [c, v] : piv_row) {
          auto it = rows[r].find(c);
          checked64 nv = (it == rows[r].end() ? checked64(0) : checked64(it->second)) -
                         f * checked64(v);
          if (zero(nv)) {
            if (it != rows[r].end()) {
              rows[r].erase(it);
              cols[c].erase(r);
            }
          } else {
            rows[r][c] = nv.raw();
            cols[c][r] = nv.raw();
          }
        }
      }
      for (const auto& [c, v] : piv_row) cols[c].erase(pr);
      rows[pr].clear();
      ++ones;
    }
  } catch (overflow_signal&) {
    return invariant_factors(m.to_dense());
  }
  // densify the +-1-free core
  std::vector<long> live_rows, live_cols;
  for (long r = 0; r < m.rows(); ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  {
    std::set<long> cs;
    for (long r : live_rows)
      for (const auto& [c, v] : rows[r]) cs.insert(c);
    live_cols.assign(cs.begin(), cs.end());
  }
  IntMat core(static_cast<long>(live_rows.size()),
              static_cast<long>(live_cols.size()));
  for (long i = 0; i < core.rows(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) {
      long j = static_cast<long>(
          std::lower_bound(live_cols.begin(), live_cols.end(), c) -
          live_cols.begin());
      core.at(i, j) = v;
    }
  std::vector<bigint> out(ones, bigint(1));
  for (bigint& f : invariant_factors(core)) out.push_back(std::move(f));
  return out;
}

long rank_mod_p(const IntMat& m, long p) {
  if (p < 2 || !is_prime(p)) fail(errc::invalid_input, "modulus must be prime");
  const long rows = m.rows(), cols = m.cols();
  std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      bigint r = m.at(i, j) % p;
      if (r < 0) r += p;
      a[i][j] = static_cast<long>(r);
    }
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    // scale pivot row to 1
    long inv = 1, base = a[rank][col], e = p - 2;
    {
      long long acc = 1, b = base;
      while (e) {
        if (e & 1) acc = (acc * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
      inv = static_cast<long>(acc);
    }
    for (long j = col; j < cols; ++j)
      a[rank][j] = static_cast<long>((static_cast<long long>(a[rank][j]) * inv) % p);
    for (long i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      long f = a[i][col];
      for (long j = col; j < cols; ++j) {
        long long t = a[i][j] - static_cast<long long>(f) * a[rank][j] % p;
        a[i][j] = static_cast<long>(((t % p) + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

long rank_mod_p(const SparseMat& m, long p) { return rank_mod_p(m.to_dense(), p); }

namespace {

// Fraction-free elimination; entries stay minor-sized.  Throws
// overflow_signal on the checked64 instantiation when minors outgrow 64 bits.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>>& a) {
  const long n = static_cast<long>(a.size());
  T prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (zero(a[k][k])) {
      long swap_row = -1;
      for (long i = k + 1; i < n; ++i)
        if (!zero(a[i][k])) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return T(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

long long determinant_mod(const IntMat& m, long p) {
  const long n = m.rows();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      bigint r = m.at(i, j) % p;
      if (r < 0) r += p;
      a[i][j] = static_cast<long long>(r);
    }
  long long det = 1;
  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    for (long i = k; i < n; ++i)
      if (a[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      det = p - det;
    }
    det = (det * a[k][k]) % p;
    // inverse of the pivot via Fermat
    long long inv = 1, base = a[k][k], e = p - 2;
    while (e) {
      if (e & 1) inv = (inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    for (long i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      long long f = (a[i][k] * inv) % p;
      for (long j = k; j < n; ++j)
        a[i][j] = ((a[i][j] - f * a[k][j]) % p + p) % p;
    }
  }
  return det % p;
}

long long inverse_mod(long long a, long long p) {
  long long g = p, x = 0, x1 = 1, r = a % p;
  if (r < 0) r += p;
  long long g1 = r;
  while (g1) {
    long long q = g / g1;
    long long t = g - q * g1;
    g = g1;
    g1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  return ((x % p) + p) % p;
}

const std::vector<long>& primes_below_31_bits(std::size_t count) {
  static std::vector<long> primes;
  long candidate = primes.empty() ? 2147483647 : primes.back() - 2;
  while (primes.size() < count) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

}  // namespace

bigint determinant(const IntMat& m) {
  if (m.rows() != m.cols())
    fail(errc::shape_mismatch, "determinant of non-square matrix");
  const long n = m.rows();
  if (n == 0) return 1;
  {
    std::vector<std::vector<checked64>> a(n, std::vector<checked64>(n));
    bool ok = true;
    for (long i = 0; i < n && ok; ++i)
      for (long j = 0; j < n && ok; ++j) {
        ok = fits_i64(m.at(i, j));
        if (ok) a[i][j] = checked64(static_cast<std::int64_t>(m.at(i, j)));
      }
    if (ok) {
      try {
        return bareiss_determinant(a).raw();
      } catch (overflow_signal&) {
      }
    }
  }
  // Chinese remaindering: |det| is at most the product of the row norms, so
  // enough 31-bit primes pin it down exactly.
  bigint bound = 1;
  for (long i = 0; i < n; ++i) {
    bigint norm2 = 0;
    for (long j = 0; j < n; ++j) norm2 += m.at(i, j) * m.at(i, j);
    if (norm2 == 0) return 0;
    bound *= sqrt(norm2) + 1;
  }
  bigint value = 0, modulus = 1;
  for (std::size_t k = 0; modulus <= bound * 2; ++k) {
    long p = primes_below_31_bits(k + 1)[k];
    long long residue = determinant_mod(m, p);
    long long have = static_cast<long long>(((value % p) + p) % p);
    long long delta = ((residue - have) % p + p) % p;
    long long step =
        (delta * inverse_mod(static_cast<long long>(modulus % p), p)) % p;
    value += modulus * step;
    modulus *= p;
  }
  if (value * 2 > modulus) value -= modulus;
  return value;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace davisforge
