#pragma once

// Independent oracles shared by the unit tests and the acceptance binary.
// Nothing here reuses the library's enumeration or elimination code.

#include "fwsa/fwsa.hpp"

#include <random>
#include <string>
#include <vector>

namespace fwsa::testing {

/// Counts label-sum-compatible surjections by running over all |Y|^|X| maps.
inline std::size_t brute_hom_count(const FiniteAbelianGroup& a, const LabeledSet& x, const LabeledSet& y) {
  const std::size_t n = x.size(), m = y.size();
  if (m == 0) return n == 0 ? 1 : 0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Element> sums(m, a.zero());
    std::vector<bool> hit(m, false);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = c % m;
      c /= m;
      hit[j] = true;
      sums[j] = a.add(sums[j], x.label(i));
    }
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) ok = hit[j] && sums[j] == y.label(j);
    count += ok;
  }
  return count;
}

/// Plain dense Gauss-Jordan rank.
inline std::size_t dense_rank(std::vector<std::vector<Cyclotomic>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Cyclotomic inv = rows[rank][c].inverse();
    for (auto& v : rows[rank]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Cyclotomic f = rows[r][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t dense_rank(const Matrix& m) { return dense_rank(m.to_dense()); }

/// A random morphism out of x onto a random quotient of size <= x.size();
/// the target labels are the fiber sums.
inline TwsMorphism random_morphism(const FiniteAbelianGroup& a, const LabeledSet& x, std::mt19937_64& rng,
                                   bool pointed = true) {
  const std::size_t n = x.size();
  if (n == 0) return identity_tws(x);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::vector<std::uint32_t> map(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k < n; ++k) {
    map[perm[k]] = k < m ? static_cast<std::uint32_t>(k)
                         : std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(m - 1))(rng);
  }
  std::vector<Element> labels(m, a.zero());
  for (std::size_t i = 0; i < n; ++i) labels[map[i]] = a.add(labels[map[i]], x.label(i));
  std::vector<Element> pointing(n, a.zero());
  if (pointed) {
    std::uniform_int_distribution<std::uint32_t> el(0, a.order() - 1);
    for (auto& g : pointing) g = Element{el(rng)};
  }
  return TwsMorphism{FwsMorphism{x, LabeledSet(std::move(labels)), std::move(map)}, std::move(pointing)};
}

inline LabeledSet random_object(const FiniteAbelianGroup& a, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> el(0, a.order() - 1);
  std::vector<Element> l(n);
  for (auto& g : l) g = Element{el(rng)};
  return LabeledSet(std::move(l));
}

/// Checks act(m2 o m1) == act(m1) * act(m2) on `trials` random composable
/// pairs out of objects of size <= n; returns the number of failures.
inline std::size_t functoriality_failures(const Module& mod, std::size_t n, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& a = mod.group();
  const bool pointed = is_pointed(mod.category());
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    LabeledSet x = random_object(a, size, rng);
    if (is_unlabeled(mod.category())) x = LabeledSet(std::vector<Element>(size, a.zero()));
    const TwsMorphism m1 = random_morphism(a, x, rng, pointed);
    const TwsMorphism m2 = random_morphism(a, m1.target(), rng, pointed);
    const TwsMorphism c = compose_tws(a, m2, m1);
    if (!(mod.act(c) == mod.act(m1) * mod.act(m2))) ++failures;
    if (!(mod.act(identity_tws(x)) == Matrix::identity(mod.dim(x)))) ++failures;
  }
  return failures;
}

}  // namespace fwsa::testing
