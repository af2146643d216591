#pragma once

// Generation-degree certificates.
//
// M is generated in degree <= d iff for every X with |X| > d, M(X) is
// spanned by pullbacks along morphisms to smaller objects.  Every such
// morphism factors through a collapse (f_S, g_b) of a subset S with
// |S| >= 2 onto a single point, so the span is the image of
//   η̃: ⊕_{S, b} M((*, Σ ℓ_S) ⊔ X \ S) -> M(X).
// Unpointed categories only need b = 0.

#include "fwsa/modules.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

namespace fwsa {

/// Calls fn(collapse morphism) for every S ⊆ X with |S| >= 2 (bitmask order)
/// and, in pointed categories, every b: S -> A (lexicographic).
template <class F>
void for_each_collapse(const Module& m, const LabeledSet& x, F&& fn) {
  const auto& a = m.group();
  const std::uint64_t full = (std::uint64_t{1} << x.size()) - 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const int k = std::popcount(s);
    if (k < 2) continue;
    if (is_pointed(m.category())) {
      for (const auto& b : all_pointings(a, static_cast<std::size_t>(k))) fn(collapse_morphism(a, x, s, b));
    } else {
      fn(collapse_morphism(a, x, s, std::vector<Element>(static_cast<std::size_t>(k), a.zero())));
    }
  }
}

/// Columns spanning the image of η̃ at x; blocks whose source value is zero
/// are skipped.
inline Matrix eta_matrix(const Module& m, const LabeledSet& x) {
  Matrix e(m.dim(x), 0);
  for_each_collapse(m, x, [&](const TwsMorphism& c) {
    if (m.dim(c.target()) == 0) return;
    const Matrix a = m.act(c);
    for (const auto& col : a.columns()) e.append_column(col);
  });
  return e;
}

/// rank of η̃ at x, stopping as soon as the image is everything.
inline std::size_t eta_rank(const Module& m, const LabeledSet& x) {
  const std::size_t d = m.dim(x);
  if (d == 0 || x.size() < 2) return 0;
  EchelonBasis<Cyclotomic> eb(d);
  for_each_collapse(m, x, [&](const TwsMorphism& c) {
    if (eb.full() || m.dim(c.target()) == 0) return;
    const Matrix a = m.act(c);
    for (const auto& col : a.columns()) {
      if (eb.add(col) && eb.full()) return;
    }
  });
  return eb.rank();
}

/// Rank of the span of all pullbacks along morphisms x -> y with |y| < |x|,
/// enumerated directly.  Independent of the collapse factorization.
inline std::size_t smaller_target_span_rank(const Module& m, const LabeledSet& x) {
  const std::size_t d = m.dim(x);
  EchelonBasis<Cyclotomic> eb(d);
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (const auto& y : m.objects(n)) {
      if (m.dim(y) == 0) continue;
      std::vector<TwsMorphism> homs;
      if (is_pointed(m.category())) {
        homs = hom_tws(m.group(), x, y);
      } else {
        for (auto& f : hom_fws(m.group(), x, y)) homs.push_back(with_zero_pointing(std::move(f)));
      }
      for (const auto& h : homs) {
        const Matrix a = m.act(h);
        for (const auto& col : a.columns()) eb.add(col);
      }
    }
  }
  return eb.rank();
}

struct ObjectRecord {
  LabeledSet object;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t coker = 0;
  bool pass = true;
};

struct GenerationReport {
  std::string module;
  std::size_t claim = 0;
  std::size_t truncation = 0;
  bool pass = true;
  std::vector<ObjectRecord> records;
};

/// PASS iff η̃ is onto at every canonical object with claim < |X| <= truncation.
inline GenerationReport certify_generation(const Module& m, std::size_t claim, std::size_t truncation) {
  if (truncation < claim) throw ValidationError("truncation must be at least the claimed degree");
  GenerationReport r{m.name(), claim, truncation, true, {}};
  for (std::size_t n = claim + 1; n <= truncation; ++n) {
    for (const auto& x : m.objects(n)) {
      ObjectRecord rec{x, m.dim(x), 0, 0, true};
      rec.rank = eta_rank(m, x);
      rec.coker = rec.dim - rec.rank;
      rec.pass = rec.coker == 0;
      r.pass = r.pass && rec.pass;
      r.records.push_back(std::move(rec));
    }
  }
  return r;
}

struct GenerationProfile {
  std::string module;
  std::size_t truncation = 0;
  std::vector<ObjectRecord> records;  // coker = number of new generators

  /// Largest size carrying new generators; nullopt when there are none.
  std::optional<std::size_t> max_degree() const {
    std::optional<std::size_t> d;
    for (const auto& r : records) {
      if (r.coker > 0) d = std::max(d.value_or(0), r.object.size());
    }
    return d;
  }
};

inline GenerationProfile generation_profile(const Module& m, std::size_t truncation) {
  GenerationProfile p{m.name(), truncation, {}};
  for (std::size_t n = 0; n <= truncation; ++n) {
    for (const auto& x : m.objects(n)) {
      ObjectRecord rec{x, m.dim(x), 0, 0, true};
      rec.rank = eta_rank(m, x);
      rec.coker = rec.dim - rec.rank;
      p.records.push_back(std::move(rec));
    }
  }
  return p;
}

struct FactorCheckRecord {
  LabeledSet object;
  std::size_t domain_dim = 0;
  std::size_t rank_q = 0;
  std::size_t rank_stacked = 0;
  bool pass = true;
};

struct FactorCheckReport {
  std::size_t truncation = 0;
  bool pass = true;
  std::vector<FactorCheckRecord> records;
};

/// Checks that η̃ for V̄₀ kills the kernel of
///   q ⊛ id: ⊕_a Σ_a Ṽ₀ ⊛ Σ_{-a} V̄₀ -> ⊕_a Σ_a V̄₀ ⊛ Σ_{-a} V̄₀
/// at every object of size <= truncation, via rank [Q; E] = rank Q.
/// Domain blocks are indexed (a, S, i, j) in that order.
inline FactorCheckReport factor_check_v00(const FiniteAbelianGroup& group, std::size_t truncation) {
  V0Tilde vt(group);
  V0Bar vb(group);
  FactorCheckReport rep{truncation, true, {}};
  for (std::size_t n = 0; n <= truncation; ++n) {
    for (const auto& x : enumerate_objects(group, n)) {
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      std::vector<Vector> qcols, ecols;
      std::size_t target_off = 0;
      for (auto a : group.elements()) {
        for (std::uint64_t s = 0; s <= full; ++s) {
          const LabeledSet xs = x.restrict(s).with_prefix(a);
          const LabeledSet xt = x.restrict(full & ~s).with_prefix(group.neg(a));
          const std::size_t dt = vt.dim(xs), dbs = vb.dim(xs), dbt = vb.dim(xt);
          if (dt == 0 || dbt == 0) {
            target_off += dbs * dbt;
            continue;
          }
          const Matrix q = v0_quotient_map(group, xs);
          for (std::size_t i = 0; i < dt; ++i) {
            const std::uint32_t qi = q.column(i).front().first;
            std::vector<Element> b;
            const auto h = detail::tail_decode(i, xs.size(), group.order());
            for (std::size_t k = 1; k < h.size(); ++k) b.push_back(Element{h[k]});
            const Matrix glue = vb.act(collapse_morphism(group, x, s, b));
            for (std::size_t j = 0; j < dbt; ++j) {
              qcols.push_back(unit_vector<Cyclotomic>(static_cast<std::uint32_t>(target_off + qi * dbt + j)));
              ecols.push_back(glue.column(j));
            }
          }
          target_off += dbs * dbt;
        }
      }
      const auto qm = Matrix::from_columns(target_off, std::move(qcols));
      const auto em = Matrix::from_columns(vb.dim(x), std::move(ecols));
      FactorCheckRecord rec{x, qm.cols(), 0, 0, true};
      rec.rank_q = rank(qm);
      rec.rank_stacked = rank(vstack(qm, em));
      rec.pass = rec.rank_q == rec.rank_stacked;
      rep.pass = rep.pass && rec.pass;
      rep.records.push_back(std::move(rec));
    }
  }
  return rep;
}

enum class WitnessMode { tws_to_fws, fws_to_fs, composite };

inline std::string to_string(WitnessMode m) {
  switch (m) {
    case WitnessMode::tws_to_fws: return "tws-to-fws";
    case WitnessMode::fws_to_fs: return "fws-to-fs";
    case WitnessMode::composite: return "composite";
  }
  return "?";
}

inline WitnessMode parse_witness_mode(std::string_view s) {
  if (s == "tws-to-fws") return WitnessMode::tws_to_fws;
  if (s == "fws-to-fs") return WitnessMode::fws_to_fs;
  if (s == "composite") return WitnessMode::composite;
  throw ParseError("unknown witness mode '" + std::string(s) + "' (expected tws-to-fws, fws-to-fs or composite)");
}

struct CoveringRecord {
  LabeledSet object;
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool pass = true;
};

struct CoveringCheck {
  LabeledSet generator;          // X
  Category category = Category::tws;
  std::size_t family_size = 0;   // number of covering sets (S, λ)
  std::size_t max_cover = 0;     // max |S|
  bool pass = true;
  std::vector<CoveringRecord> records;
};

/// The covering family of P_X restricted to unpointed morphisms: every
/// S ⊆ A × X surjecting onto X, with every labeling λ of S whose fiber sums
/// recover ℓ_X (only λ = 0 over FS_A), each mapping to X by (π_X, π_A).
/// Checks by rank that the induced map ⊕ P_(S,λ) -> P_X is onto at every
/// object of size <= truncation.  Positions of A × X are x * |A| + a.
inline CoveringCheck covering_check(const FiniteAbelianGroup& group, const LabeledSet& x, Category category,
                                    std::size_t truncation) {
  if (category != Category::tws && category != Category::fsA) throw CategoryError("covering needs tws or fsA");
  const std::size_t na = group.order(), nx = x.size();
  if (na * nx > 24) throw ValidationError("A x X is too large for the covering witness");
  Projective p(group, x, category);
  CoveringCheck out;
  out.generator = x;
  out.category = category;

  std::vector<std::pair<LabeledSet, TwsMorphism>> family;
  const std::uint64_t all = (std::uint64_t{1} << (na * nx)) - 1;
  for (std::uint64_t s = 0; s <= all; ++s) {
    std::vector<std::uint32_t> px, pa;
    std::vector<char> covered(nx, 0);
    for (std::size_t pos = 0; pos < na * nx; ++pos) {
      if (s >> pos & 1u) {
        px.push_back(static_cast<std::uint32_t>(pos / na));
        pa.push_back(static_cast<std::uint32_t>(pos % na));
        covered[pos / na] = 1;
      }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) continue;
    const std::size_t k = px.size();
    std::vector<std::vector<Element>> labelings;
    if (category == Category::fsA) {
      labelings.emplace_back(k, group.zero());
    } else {
      for (const auto& l : all_labelings(group, k)) {
        std::vector<Element> sums(nx, group.zero());
        for (std::size_t i = 0; i < k; ++i) sums[px[i]] = group.add(sums[px[i]], l.label(i));
        if (sums == x.labels()) labelings.push_back(l.labels());
      }
    }
    for (auto& lab : labelings) {
      TwsMorphism g;
      g.base.source = LabeledSet(lab);
      g.base.target = x;
      g.base.map = px;
      for (auto e : pa) g.pointing.push_back(Element{e});
      validate_morphism(group, g);
      family.emplace_back(LabeledSet(std::move(lab)), std::move(g));
      out.max_cover = std::max(out.max_cover, k);
    }
  }
  out.family_size = family.size();

  for (std::size_t n = 0; n <= truncation; ++n) {
    for (const auto& y : p.objects(n)) {
      CoveringRecord rec{y, p.dim(y), 0, true};
      EchelonBasis<Cyclotomic> eb(rec.dim);
      for (const auto& [sobj, g] : family) {
        if (eb.full()) break;
        for (const auto& phi : hom_fws(group, y, sobj)) {
          eb.add(unit_vector<Cyclotomic>(p.index_of(compose_tws(group, g, with_zero_pointing(phi)))));
          if (eb.full()) break;
        }
      }
      rec.rank = eb.rank();
      rec.pass = rec.rank == rec.dim;
      out.pass = out.pass && rec.pass;
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

struct WitnessReport {
  WitnessMode mode = WitnessMode::tws_to_fws;
  LabeledSet generator;
  std::size_t truncation = 0;
  std::size_t claimed_bound = 0;     // |X||A| or |X||A|^2
  std::size_t certified_degree = 0;  // largest generator used by the covering
  std::optional<std::size_t> profile_max_degree;
  std::string profiled_module;
  std::vector<CoveringCheck> coverings;
  bool pass = true;
};

/// Restriction-bound witness for the generator X of a principal projective.
///   tws-to-fws: covering of Res P_X by P_(S,λ), and the generation profile of Res P_X.
///   fws-to-fs:  covering of i^* P_X over FS_A (zero-labeled X), and the
///               profile of u_* P_X for the fws projective.
///   composite:  the first covering, the FS_A covering of every |S| it uses,
///               and the profile of u_* Res P_X.
inline WitnessReport restriction_witness(const FiniteAbelianGroup& group, const LabeledSet& x, WitnessMode mode,
                                         std::size_t truncation) {
  validate_object(group, x);
  WitnessReport r;
  r.mode = mode;
  r.generator = x;
  r.truncation = truncation;
  const std::size_t na = group.order();
  const LabeledSet x0(std::vector<Element>(x.size(), group.zero()));
  ModulePtr profiled;
  switch (mode) {
    case WitnessMode::tws_to_fws: {
      r.claimed_bound = x.size() * na;
      r.coverings.push_back(covering_check(group, x, Category::tws, truncation));
      r.certified_degree = r.coverings.back().max_cover;
      profiled = restrict_to_fws(principal_projective(group, x, Category::tws));
      break;
    }
    case WitnessMode::fws_to_fs: {
      r.claimed_bound = x.size() * na;
      r.coverings.push_back(covering_check(group, x0, Category::fsA, truncation));
      r.certified_degree = r.coverings.back().max_cover;
      profiled = pushforward_u(principal_projective(group, x, Category::fws));
      break;
    }
    case WitnessMode::composite: {
      r.claimed_bound = x.size() * na * na;
      r.coverings.push_back(covering_check(group, x, Category::tws, truncation));
      const std::size_t first = r.coverings.back().max_cover;
      std::size_t second = 0;
      for (std::size_t k = x.size(); k <= first; ++k) {
        r.coverings.push_back(
            covering_check(group, LabeledSet(std::vector<Element>(k, group.zero())), Category::fsA, truncation));
        second = std::max(second, r.coverings.back().max_cover);
      }
      r.certified_degree = second;
      profiled = pushforward_u(restrict_to_fws(principal_projective(group, x, Category::tws)));
      break;
    }
  }
  r.profiled_module = profiled->name();
  r.profile_max_degree = generation_profile(*profiled, truncation).max_degree();
  r.pass = r.certified_degree <= r.claimed_bound && r.profile_max_degree.value_or(0) <= r.claimed_bound;
  for (const auto& c : r.coverings) r.pass = r.pass && c.pass;
  return r;
}

struct BoundTable {
  std::size_t imax = 0, gmax = 0;
  std::vector<std::vector<long>> f;  // f[i][g]
  bool pass = true;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// The largest f allowed by the two recursive inequalities, with the stated
/// base values, checked against f(i, g) <= g + 5i away from (0, 0).
inline BoundTable bound_recursion_check(std::size_t imax, std::size_t gmax) {
  BoundTable t{imax, gmax, std::vector<std::vector<long>>(imax + 1, std::vector<long>(gmax + 1, 0)), true, {}};
  auto& f = t.f;
  for (std::size_t i = 0; i <= imax; ++i) {
    for (std::size_t g = 0; g <= gmax; ++g) {
      if (i == 0) {
        f[i][g] = g == 0 ? 3 : (g == 1 ? 1 : 0);
        continue;
      }
      long splits = 0;
      for (std::size_t i1 = 0; i1 <= i; ++i1) {
        for (std::size_t g1 = 0; g1 <= g; ++g1) {
          const std::size_t i2 = i - i1, g2 = g - g1;
          if ((i1 == 0 && g1 == 0) || (i2 == 0 && g2 == 0)) continue;
          splits = std::max(splits, f[i1][g1] + f[i2][g2]);
        }
      }
      const long il = static_cast<long>(i), gl = static_cast<long>(g);
      if (g == 0) {
        f[i][g] = std::max(il + 4, splits);
      } else {
        f[i][g] = std::max({std::max(il - 2 * gl + 3, 1L), f[i][g - 1], splits});
      }
    }
  }
  for (std::size_t i = 0; i <= imax; ++i) {
    for (std::size_t g = 0; g <= gmax; ++g) {
      if (i == 0 && g == 0) continue;
      if (f[i][g] > static_cast<long>(g + 5 * i)) {
        t.pass = false;
        t.violations.emplace_back(i, g);
      }
    }
  }
  return t;
}

}  // namespace fwsa
