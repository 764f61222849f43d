#ifndef DAVISFORGE_PERMUTATION_HPP
#define DAVISFORGE_PERMUTATION_HPP

#include <cstddef>
#include <vector>

namespace davisforge {

// A permutation of {0, ..., n-1} stored as its value table.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<int>(x);
  return p;
}

// (a ∘ b)(x) = a(b(x)), so table lookup follows function application order.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

inline bool valid_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace davisforge

#endif
