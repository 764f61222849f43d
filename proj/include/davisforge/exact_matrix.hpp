#ifndef DAVISFORGE_EXACT_MATRIX_HPP_
#define DAVISFORGE_EXACT_MATRIX_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "davisforge/errors.hpp"

namespace davisforge {

using bigint = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row-major.
// Sizes stay modest here (a few thousand on a side at most); the boundary
// operators that feed Smith reduction are converted to dense form first.
class IntMat {
 public:
  IntMat() = default;
  IntMat(long rows, long cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static IntMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  bigint& at(long r, long c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const bigint& at(long r, long c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  IntMat transpose() const;
  IntMat operator*(const IntMat& rhs) const;
  bool operator==(const IntMat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }
  bool is_zero() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<bigint> a_;
};

// Sparse integer matrix stored by columns; this is the working format for
// boundary operators and chain maps, where products and differences are
// needed but elimination is not.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(long rows, long cols) : rows_(rows), cols_(cols), col_(cols) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  // Accumulates v into entry (r, c); entries that cancel to zero vanish.
  void add(long r, long c, const bigint& v);
  void set(long r, long c, const bigint& v);
  bigint get(long r, long c) const;

  const std::map<long, bigint>& column(long c) const { return col_[c]; }

  SparseMat operator*(const SparseMat& rhs) const;
  SparseMat operator+(const SparseMat& rhs) const;
  SparseMat operator-(const SparseMat& rhs) const;
  bool operator==(const SparseMat& rhs) const;

  SparseMat transpose() const;
  IntMat to_dense() const;
  static SparseMat from_dense(const IntMat& m);

  bool is_zero() const;
  long long nonzero_count() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<std::map<long, bigint>> col_;
};

// Smith normal form u * m * v = d with u, v unimodular (products of
// elementary row/column operations, so det = +-1 by construction) and d
// diagonal with d_1 | d_2 | ... | d_r, all nonnegative.
struct SmithResult {
  IntMat u, d, v;
  std::vector<bigint> diagonal() const;  // nonzero diagonal entries, in order
};

SmithResult smith_normal_form(const IntMat& m);

// Nonzero diagonal of the Smith form, computed without carrying transforms.
// Elimination runs in checked 64-bit arithmetic first and restarts with
// arbitrary precision on overflow.
std::vector<bigint> invariant_factors(const IntMat& m);
std::vector<bigint> invariant_factors(const SparseMat& m);

long rank_mod_p(const IntMat& m, long p);
long rank_mod_p(const SparseMat& m, long p);

// Exact determinant by fraction-free (Bareiss) elimination.
bigint determinant(const IntMat& m);

bool is_prime(long p);

}  // namespace davisforge

#endif
