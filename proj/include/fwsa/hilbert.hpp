#pragma once

// Truncated Hilbert series in variables t_a (a in A) and greedy fitting to
// rational functions  p(t) / ∏ (1 - c t_a).

#include "fwsa/modules.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fwsa {

using Multidegree = std::vector<std::uint32_t>;

inline std::string format_multidegree(const Multidegree& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s;
}

inline std::size_t total_degree(const Multidegree& f) {
  std::size_t n = 0;
  for (auto v : f) n += v;
  return n;
}

/// All f: A -> N with |f| <= n, by total degree and then lexicographically
/// on the canonical objects.
inline std::vector<Multidegree> multidegrees_upto(const FiniteAbelianGroup& group, std::size_t n) {
  std::vector<Multidegree> out;
  for (const auto& x : enumerate_objects_upto(group, n)) out.push_back(x.multidegree(group));
  return out;
}

/// |f|! / ∏ f(a)!
inline mpz_class multinomial(const Multidegree& f) {
  mpz_class r = 1;
  unsigned long n = 0;
  for (auto v : f) {
    for (unsigned long k = 1; k <= v; ++k) {
      ++n;
      r *= n;
      r /= k;
    }
  }
  return r;
}

struct RationalSeries {
  FiniteAbelianGroup group;
  std::size_t truncation = 0;
  bool weighted = false;
  std::map<Multidegree, Cyclotomic> coeffs;  // nonzero coefficients only

  Cyclotomic coeff(const Multidegree& f) const {
    auto it = coeffs.find(f);
    return it == coeffs.end() ? Cyclotomic(0) : it->second;
  }

  void set(const Multidegree& f, Cyclotomic c) {
    if (c.is_zero()) {
      coeffs.erase(f);
    } else {
      coeffs[f] = std::move(c);
    }
  }

  /// Largest total degree of a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> degree() const {
    std::optional<std::size_t> d;
    for (const auto& [f, c] : coeffs) d = std::max(d.value_or(0), total_degree(f));
    return d;
  }

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.truncation == b.truncation && a.coeffs == b.coeffs;
  }
};

/// Coefficient at f is dim M(X_f), times C_f when weighted.  Unlabeled
/// categories only have the multidegrees concentrated at the identity.
inline RationalSeries truncated_series(const Module& m, std::size_t truncation, bool weighted) {
  RationalSeries s{m.group(), truncation, weighted, {}};
  for (std::size_t n = 0; n <= truncation; ++n) {
    for (const auto& x : m.objects(n)) {
      const auto f = x.multidegree(m.group());
      const std::size_t d = m.dim(x);
      if (d == 0) continue;
      Rational c(static_cast<unsigned long>(d));
      if (weighted) c *= Rational(multinomial(f));
      s.set(f, Cyclotomic(c));
    }
  }
  return s;
}

inline RationalSeries reweighted(const RationalSeries& s, bool weighted) {
  RationalSeries r{s.group, s.truncation, weighted, {}};
  for (const auto& [f, c] : s.coeffs) {
    const Cyclotomic w(Rational(multinomial(f)));
    if (weighted == s.weighted) {
      r.set(f, c);
    } else if (weighted) {
      r.set(f, c * w);
    } else {
      r.set(f, c / w);
    }
  }
  return r;
}

/// The factor (1 - c t_a).
struct LinearFactor {
  Element variable;
  Cyclotomic c;

  friend bool operator==(const LinearFactor& x, const LinearFactor& y) {
    return x.variable == y.variable && x.c == y.c;
  }
};

inline std::string format_factor(const FiniteAbelianGroup& group, const LinearFactor& f) {
  return "(1 - (" + f.c.to_string() + ")*t_" + group.format(f.variable) + ")";
}

/// S * (1 - c t_a), truncated.
inline RationalSeries multiply_by_factor(const RationalSeries& s, const LinearFactor& fac) {
  RationalSeries r = s;
  for (const auto& [f, v] : s.coeffs) {
    if (total_degree(f) >= s.truncation) continue;
    Multidegree g = f;
    ++g[fac.variable.id];
    r.set(g, r.coeff(g) - fac.c * v);
  }
  return r;
}

/// S / (1 - c t_a), truncated: s[f] = p[f] + c s[f - e_a].
inline RationalSeries divide_by_factor(const RationalSeries& p, const LinearFactor& fac) {
  RationalSeries r{p.group, p.truncation, p.weighted, {}};
  for (const auto& f : multidegrees_upto(p.group, p.truncation)) {
    Cyclotomic v = p.coeff(f);
    if (f[fac.variable.id] > 0) {
      Multidegree g = f;
      --g[fac.variable.id];
      v += fac.c * r.coeff(g);
    }
    r.set(f, std::move(v));
  }
  return r;
}

/// {(1 ± (j/|A|) ζ t_a) : a in A, ζ^{ord(a)} = 1, 1 <= j <= jmax}; jmax = 0
/// means |A|^2.  Duplicates are removed, order is (a, j, ζ, sign).
inline std::vector<LinearFactor> candidate_factors(const FiniteAbelianGroup& group, std::uint32_t jmax = 0) {
  if (jmax == 0) jmax = group.order() * group.order();
  std::vector<LinearFactor> out;
  const std::uint32_t e = group.exponent();
  for (auto a : group.elements()) {
    const std::uint32_t ord = group.element_order(a);
    for (std::uint32_t j = 1; j <= jmax; ++j) {
      for (std::uint32_t k = 0; k < ord; ++k) {
        const Cyclotomic zeta = Cyclotomic::root_of_unity(e, static_cast<long>(k * (e / ord)));
        for (int sign : {1, -1}) {
          LinearFactor f{a, zeta * Cyclotomic(Rational(sign * static_cast<long>(j), group.order()))};
          if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
        }
      }
    }
  }
  return out;
}

/// Berlekamp–Massey: the shortest connection polynomial C (C[0] = 1) with
/// sum_i C[i] s[n - i] = 0 for L <= n < len.
inline std::pair<std::vector<Cyclotomic>, std::size_t> berlekamp_massey(const std::vector<Cyclotomic>& s) {
  std::vector<Cyclotomic> c{Cyclotomic(1)}, b{Cyclotomic(1)};
  std::size_t l = 0, m = 1;
  Cyclotomic bd(1);
  for (std::size_t n = 0; n < s.size(); ++n) {
    Cyclotomic d = s[n];
    for (std::size_t i = 1; i <= l && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d.is_zero()) {
      ++m;
      continue;
    }
    const Cyclotomic coef = d / bd;
    std::vector<Cyclotomic> t = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, Cyclotomic(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
    if (2 * l <= n) {
      l = n + 1 - l;
      b = std::move(t);
      bd = d;
      m = 1;
    } else {
      ++m;
    }
  }
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  return {c, l};
}

/// Sum, over the univariate slices along t_a that are at least half the
/// truncation long, of the degree of their minimal connection polynomial,
/// i.e. of the denominator a rational fit of the slice needs.  A factor
/// (1 - c t_a) acts on each such slice separately, so it lowers this
/// measure exactly when it divides slice denominators.
inline std::size_t denominator_measure(const RationalSeries& s, std::size_t a) {
  std::size_t total = 0;
  const std::size_t n = s.truncation;
  for (const auto& base : multidegrees_upto(s.group, n)) {
    if (base[a] != 0) continue;
    const std::size_t len = n - total_degree(base) + 1;
    if (2 * len < n + 1) continue;
    std::vector<Cyclotomic> seq;
    Multidegree f = base;
    for (std::size_t k = 0; k < len; ++k) {
      f[a] = static_cast<std::uint32_t>(k);
      seq.push_back(s.coeff(f));
    }
    total += berlekamp_massey(seq).first.size() - 1;
  }
  return total;
}

inline std::size_t denominator_measure(const RationalSeries& s) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < s.group.order(); ++a) total += denominator_measure(s, a);
  return total;
}

struct FitOptions {
  std::size_t guard = 3;
  std::size_t max_multiplicity = 3;
  std::size_t max_factors = 12;
  bool backtrack = false;
  std::uint32_t jmax = 0;  // 0: |A|^2
};

struct FittedRational {
  RationalSeries numerator;
  std::vector<LinearFactor> factors;
  std::size_t numerator_degree = 0;
  std::size_t guard_verified = 0;  // zero coefficients above the numerator
};

struct FitResult {
  std::optional<FittedRational> fit;
  RationalSeries residual;  // series times the factors found, for diagnosis
  std::vector<LinearFactor> factors;
};

inline RationalSeries expand(const FittedRational& r) {
  RationalSeries s = r.numerator;
  for (const auto& f : r.factors) s = divide_by_factor(s, f);
  return s;
}

namespace detail {

inline bool is_guarded_polynomial(const RationalSeries& s, std::size_t guard) {
  const std::size_t d = s.degree().value_or(0);
  return s.truncation >= d + guard;
}

struct FitState {
  RationalSeries series;
  std::vector<LinearFactor> factors;
  std::vector<std::size_t> uses;
};

inline bool fit_search(FitState& st, const std::vector<LinearFactor>& cands, const FitOptions& opt, bool backtrack) {
  if (is_guarded_polynomial(st.series, opt.guard)) return true;
  if (st.factors.size() >= opt.max_factors) return false;
  const std::size_t nvars = st.series.group.order();
  std::vector<std::size_t> before(nvars);
  for (std::size_t a = 0; a < nvars; ++a) before[a] = denominator_measure(st.series, a);
  // (drop in the own-variable measure, descending), then nonzero count, then candidate order
  std::vector<std::tuple<long, std::size_t, std::size_t>> improving;
  std::vector<RationalSeries> products(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (st.uses[i] >= opt.max_multiplicity) continue;
    const std::size_t a = cands[i].variable.id;
    if (before[a] == 0) continue;
    products[i] = multiply_by_factor(st.series, cands[i]);
    const std::size_t after = denominator_measure(products[i], a);
    if (after < before[a]) {
      improving.emplace_back(-static_cast<long>(before[a] - after), products[i].coeffs.size(), i);
    }
  }
  std::sort(improving.begin(), improving.end());
  for (const auto& [drop, count, i] : improving) {
    RationalSeries saved = backtrack ? st.series : RationalSeries{};
    st.series = std::move(products[i]);
    st.factors.push_back(cands[i]);
    ++st.uses[i];
    if (fit_search(st, cands, opt, backtrack)) return true;
    if (!backtrack) return false;
    --st.uses[i];
    st.factors.pop_back();
    st.series = std::move(saved);
  }
  return false;
}

}  // namespace detail

/// Greedy factor elimination: repeatedly multiply by the candidate that most
/// reduces the denominator measure of its own variable (ties: fewer nonzero
/// coefficients), until what is left is a polynomial followed by at least
/// `guard` zero coefficients.
inline FitResult fit_rational(const RationalSeries& s, const std::vector<LinearFactor>& candidates,
                              const FitOptions& opt = {}) {
  if (opt.guard < 2) throw ValidationError("guard must be at least 2");
  detail::FitState st{s, {}, std::vector<std::size_t>(candidates.size(), 0)};
  const bool ok = detail::fit_search(st, candidates, opt, opt.backtrack);
  FitResult res{std::nullopt, st.series, st.factors};
  if (!ok) return res;
  FittedRational fr{st.series, st.factors, st.series.degree().value_or(0), 0};
  fr.guard_verified = s.truncation - fr.numerator_degree;
  if (!(expand(fr) == s)) throw ConsistencyError("fitted rational function does not re-expand to the series");
  res.fit = std::move(fr);
  return res;
}

inline FitResult fit_rational(const RationalSeries& s, const FitOptions& opt = {}) {
  return fit_rational(s, candidate_factors(s.group, opt.jmax), opt);
}

struct UnivariateRational {
  std::vector<Cyclotomic> numerator;  // coefficient of t^k
  std::vector<Cyclotomic> poles;      // factors (1 - c t)

  std::vector<Cyclotomic> expand(std::size_t n) const {
    std::vector<Cyclotomic> s(n + 1, Cyclotomic(0));
    for (std::size_t k = 0; k < numerator.size() && k <= n; ++k) s[k] = numerator[k];
    for (const auto& c : poles) {
      for (std::size_t k = 1; k <= n; ++k) s[k] += c * s[k - 1];
    }
    return s;
  }
};

/// t_a := t for all a.
inline std::vector<Cyclotomic> specialize_univariate(const RationalSeries& s) {
  std::vector<Cyclotomic> u(s.truncation + 1, Cyclotomic(0));
  for (const auto& [f, c] : s.coeffs) u[total_degree(f)] += c;
  return u;
}

inline UnivariateRational specialize_univariate(const FittedRational& r) {
  UnivariateRational u;
  u.numerator = specialize_univariate(r.numerator);
  while (!u.numerator.empty() && u.numerator.back().is_zero()) u.numerator.pop_back();
  for (const auto& f : r.factors) u.poles.push_back(f.c);
  return u;
}

}  // namespace fwsa
