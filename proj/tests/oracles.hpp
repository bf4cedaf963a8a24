#pragma once

// Brute-force reference routines used only by tests. They share no code path
// with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

/// phi(m) from the prime factorization.
inline std::int64_t totient_by_factoring(std::int64_t m) {
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Leibniz determinant over the integers (entries row-major), reduced mod m.
inline std::int64_t leibniz_det(const std::vector<std::int64_t>& a, int r, std::int64_t m) {
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) inversions += perm[i] > perm[j];
    }
    std::int64_t term = 1;
    for (int i = 0; i < r; ++i) term = term * a[i * r + perm[i]] % m;
    total = (total + (inversions % 2 ? -term : term)) % m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (total % m + m) % m;
}

/// All r x r matrices mod m with unit Leibniz determinant.
inline std::vector<std::vector<std::int64_t>> brute_gl(int r, std::int64_t m) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> a(r * r, 0);
  while (true) {
    if (std::gcd(leibniz_det(a, r, m), m) == 1) out.push_back(a);
    int t = 0;
    while (t < r * r && ++a[t] == m) a[t++] = 0;
    if (t == r * r) break;
  }
  return out;
}

/// Double cosets of H \ G / K with every h and k applied, using std::set.
template <typename T, typename Mul>
std::size_t naive_double_cosets(const std::vector<T>& group, const std::vector<T>& left,
                                const std::vector<T>& right, Mul mul) {
  std::set<T> seen;
  std::size_t count = 0;
  for (const T& g : group) {
    if (seen.count(g)) continue;
    ++count;
    for (const T& h : left) {
      for (const T& k : right) seen.insert(mul(mul(h, g), k));
    }
  }
  return count;
}

}  // namespace oracle
