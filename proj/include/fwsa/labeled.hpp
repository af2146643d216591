#pragma once

// Objects and morphisms of FWS_A and its pointed variant tilde-FWS_A.
//
// An object is an A-labeled finite set X = {0, ..., n-1}.  A FWS_A morphism
// X -> Y is a surjection whose fibers have label sums equal to the target
// labels; a tilde-FWS_A morphism additionally carries a pointing g: X -> A,
// and composes as (f2, g2) o (f1, g1) = (f2 f1, g1 + g2 f1).

#include "fwsa/group.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fwsa {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LabeledSet {
 public:
  LabeledSet() = default;
  explicit LabeledSet(std::vector<Element> labels) : labels_(std::move(labels)) {}

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Element>& labels() const { return labels_; }
  Element label(std::size_t i) const { return labels_[i]; }

  Element total(const FiniteAbelianGroup& group) const { return group.sum(labels_); }

  /// f: A -> N counting labels.
  std::vector<std::uint32_t> multidegree(const FiniteAbelianGroup& group) const {
    std::vector<std::uint32_t> f(group.order(), 0);
    for (auto a : labels_) ++f[a.id];
    return f;
  }

  bool all_zero() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Element a) { return a.id == 0; });
  }

  /// Labels sorted ascending: the representative of the iso class.
  LabeledSet canonical() const {
    auto l = labels_;
    std::sort(l.begin(), l.end());
    return LabeledSet(std::move(l));
  }
  bool is_canonical() const { return std::is_sorted(labels_.begin(), labels_.end()); }

  LabeledSet with_prefix(Element a) const {
    std::vector<Element> l;
    l.reserve(labels_.size() + 1);
    l.push_back(a);
    l.insert(l.end(), labels_.begin(), labels_.end());
    return LabeledSet(std::move(l));
  }

  /// Restriction to the positions set in `mask`, in increasing order.
  LabeledSet restrict(std::uint64_t mask) const {
    std::vector<Element> l;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (mask >> i & 1u) l.push_back(labels_[i]);
    }
    return LabeledSet(std::move(l));
  }

  friend auto operator<=>(const LabeledSet&, const LabeledSet&) = default;
  friend bool operator==(const LabeledSet&, const LabeledSet&) = default;

 private:
  std::vector<Element> labels_;
};

inline void validate_object(const FiniteAbelianGroup& group, const LabeledSet& x) {
  if (x.size() > 62) throw ValidationError("labeled sets are limited to 62 points");
  for (auto a : x.labels()) {
    if (!group.contains(a)) throw ValidationError("label outside the ambient group " + group.to_string());
  }
}

/// Comma-separated element literals, e.g. `1,1,0` or `1.0,0.3`; `-` or the
/// empty string is the empty set.
inline LabeledSet parse_labels(const FiniteAbelianGroup& group, std::string_view s) {
  if (s.empty() || s == "-") return LabeledSet();
  std::vector<Element> l;
  for (auto tok : detail::split(s, ',')) {
    if (tok.empty()) throw ParseError("label list '" + std::string(s) + "' has an empty entry");
    l.push_back(group.parse_element(tok));
  }
  return LabeledSet(std::move(l));
}

inline std::string format_labels(const FiniteAbelianGroup& group, const LabeledSet& x) {
  if (x.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += group.format(x.label(i));
  }
  return out;
}

/// The canonical object X_f: each a in A repeated f(a) times, in element order.
inline LabeledSet canonical_object(const std::vector<std::uint32_t>& f) {
  std::vector<Element> l;
  for (std::uint32_t a = 0; a < f.size(); ++a) l.insert(l.end(), f[a], Element{a});
  return LabeledSet(std::move(l));
}

/// One representative per isomorphism class of size-n A-labeled sets, i.e.
/// the nondecreasing label sequences in lexicographic order.
inline std::vector<LabeledSet> enumerate_objects(const FiniteAbelianGroup& group, std::size_t n) {
  std::vector<LabeledSet> out;
  std::vector<Element> cur(n);
  const std::uint32_t order = group.order();
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t lo) {
    if (pos == n) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t a = lo; a < order; ++a) {
      cur[pos] = Element{a};
      rec(pos + 1, a);
    }
  };
  rec(0, 0);
  return out;
}

/// All objects of size <= n, ordered by size then lexicographically.
inline std::vector<LabeledSet> enumerate_objects_upto(const FiniteAbelianGroup& group, std::size_t n) {
  std::vector<LabeledSet> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_objects(group, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Every labeling of an n-point set (not just canonical ones), lexicographic.
inline std::vector<LabeledSet> all_labelings(const FiniteAbelianGroup& group, std::size_t n) {
  std::vector<LabeledSet> out;
  std::vector<Element> cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t a = 0; a < group.order(); ++a) {
      cur[pos] = Element{a};
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

struct FwsMorphism {
  LabeledSet source;
  LabeledSet target;
  std::vector<std::uint32_t> map;  // source position -> target position

  friend auto operator<=>(const FwsMorphism&, const FwsMorphism&) = default;
  friend bool operator==(const FwsMorphism&, const FwsMorphism&) = default;
};

struct TwsMorphism {
  FwsMorphism base;
  std::vector<Element> pointing;  // one entry per source position

  const LabeledSet& source() const { return base.source; }
  const LabeledSet& target() const { return base.target; }
  const std::vector<std::uint32_t>& map() const { return base.map; }

  bool zero_pointing() const {
    return std::all_of(pointing.begin(), pointing.end(), [](Element a) { return a.id == 0; });
  }

  friend auto operator<=>(const TwsMorphism&, const TwsMorphism&) = default;
  friend bool operator==(const TwsMorphism&, const TwsMorphism&) = default;
};

inline TwsMorphism with_zero_pointing(FwsMorphism f) {
  const std::size_t n = f.source.size();
  return TwsMorphism{std::move(f), std::vector<Element>(n, Element{0})};
}

inline FwsMorphism identity_fws(const LabeledSet& x) {
  std::vector<std::uint32_t> id(x.size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  return FwsMorphism{x, x, std::move(id)};
}

inline TwsMorphism identity_tws(const LabeledSet& x) { return with_zero_pointing(identity_fws(x)); }

/// Throws ValidationError unless m is a morphism of tilde-FWS_A.
inline void validate_morphism(const FiniteAbelianGroup& group, const TwsMorphism& m) {
  validate_object(group, m.source());
  validate_object(group, m.target());
  const auto& f = m.map();
  if (f.size() != m.source().size()) throw ValidationError("morphism map length differs from source size");
  if (m.pointing.size() != m.source().size()) throw ValidationError("pointing length differs from source size");
  std::vector<Element> sums(m.target().size(), group.zero());
  std::vector<char> hit(m.target().size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= m.target().size()) throw ValidationError("morphism map points outside the target");
    if (!group.contains(m.pointing[x])) throw ValidationError("pointing value outside the group");
    hit[f[x]] = 1;
    sums[f[x]] = group.add(sums[f[x]], m.source().label(x));
  }
  for (std::size_t y = 0; y < hit.size(); ++y) {
    if (!hit[y]) throw ValidationError("morphism map is not surjective");
    if (sums[y] != m.target().label(y)) {
      throw ValidationError("fiber over target point " + std::to_string(y) + " has label sum " +
                            group.format(sums[y]) + ", expected " + group.format(m.target().label(y)));
    }
  }
}

inline bool is_valid_morphism(const FiniteAbelianGroup& group, const TwsMorphism& m) {
  try {
    validate_morphism(group, m);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

/// (f2, g2) o (f1, g1) = (f2 f1, g1 + g2 f1).
inline TwsMorphism compose_tws(const FiniteAbelianGroup& group, const TwsMorphism& m2, const TwsMorphism& m1) {
  if (m1.target() != m2.source()) {
    throw CompositionError("cannot compose: target of the first morphism differs from source of the second");
  }
  const std::size_t n = m1.source().size();
  TwsMorphism r;
  r.base.source = m1.source();
  r.base.target = m2.target();
  r.base.map.resize(n);
  r.pointing.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t y = m1.map()[x];
    r.base.map[x] = m2.map()[y];
    r.pointing[x] = group.add(m1.pointing[x], m2.pointing[y]);
  }
  return r;
}

/// Surjections X -> Y with matching fiber label sums, in lexicographic order
/// of the map.  Points are assigned one at a time and branches that can no
/// longer cover every target point are cut.
inline std::vector<FwsMorphism> hom_fws(const FiniteAbelianGroup& group, const LabeledSet& x, const LabeledSet& y) {
  std::vector<FwsMorphism> out;
  const std::size_t n = x.size(), m = y.size();
  if (n < m) return out;
  if (m == 0) {
    if (n == 0) out.push_back(identity_fws(x));
    return out;
  }
  if (x.total(group) != y.total(group)) return out;
  std::vector<std::uint32_t> map(n);
  std::vector<std::uint32_t> count(m, 0);
  std::vector<Element> sums(m, group.zero());
  std::size_t empty = m;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      for (std::size_t j = 0; j < m; ++j) {
        if (sums[j] != y.label(j)) return;
      }
      out.push_back(FwsMorphism{x, y, map});
      return;
    }
    for (std::uint32_t j = 0; j < m; ++j) {
      const bool fills = count[j] == 0;
      if (n - pos - 1 < empty - (fills ? 1 : 0)) continue;
      map[pos] = j;
      const Element saved = sums[j];
      sums[j] = group.add(saved, x.label(pos));
      ++count[j];
      if (fills) --empty;
      rec(pos + 1);
      if (fills) ++empty;
      --count[j];
      sums[j] = saved;
    }
  };
  rec(0);
  return out;
}

/// Every pointing X -> A, lexicographic.
inline std::vector<std::vector<Element>> all_pointings(const FiniteAbelianGroup& group, std::size_t n) {
  std::vector<std::vector<Element>> out;
  for (const auto& l : all_labelings(group, n)) out.push_back(l.labels());
  return out;
}

inline std::vector<TwsMorphism> hom_tws(const FiniteAbelianGroup& group, const LabeledSet& x, const LabeledSet& y) {
  std::vector<TwsMorphism> out;
  const auto bases = hom_fws(group, x, y);
  if (bases.empty()) return out;
  const auto pointings = all_pointings(group, x.size());
  out.reserve(bases.size() * pointings.size());
  for (const auto& b : bases) {
    for (const auto& g : pointings) out.push_back(TwsMorphism{b, g});
  }
  return out;
}

/// The restriction of m to f^{-1}(S) -> S for a subset S of the target
/// (given as a bitmask); both sides keep their increasing position order.
inline TwsMorphism restrict_to_target_subset(const TwsMorphism& m, std::uint64_t target_mask) {
  const std::size_t nt = m.target().size();
  std::vector<std::uint32_t> new_index(nt, 0);
  std::uint32_t k = 0;
  for (std::size_t y = 0; y < nt; ++y) {
    if (target_mask >> y & 1u) new_index[y] = k++;
  }
  std::uint64_t source_mask = 0;
  TwsMorphism r;
  for (std::size_t x = 0; x < m.source().size(); ++x) {
    const std::uint32_t y = m.map()[x];
    if (target_mask >> y & 1u) {
      source_mask |= std::uint64_t{1} << x;
      r.base.map.push_back(new_index[y]);
      r.pointing.push_back(m.pointing[x]);
    }
  }
  r.base.source = m.source().restrict(source_mask);
  r.base.target = m.target().restrict(target_mask);
  return r;
}

inline std::uint64_t preimage_mask(const TwsMorphism& m, std::uint64_t target_mask) {
  std::uint64_t mask = 0;
  for (std::size_t x = 0; x < m.source().size(); ++x) {
    if (target_mask >> m.map()[x] & 1u) mask |= std::uint64_t{1} << x;
  }
  return mask;
}

/// The morphism (f_S, g_b): X -> (*, sum of S-labels) ⊔ (X \ S) collapsing S
/// onto the new point * (placed first) with pointing b on S and 0 elsewhere.
inline TwsMorphism collapse_morphism(const FiniteAbelianGroup& group, const LabeledSet& x, std::uint64_t s_mask,
                                     const std::vector<Element>& b) {
  const std::size_t n = x.size();
  TwsMorphism m;
  m.base.source = x;
  m.base.map.resize(n);
  m.pointing.assign(n, group.zero());
  std::vector<Element> target_labels{group.zero()};
  Element star = group.zero();
  std::size_t bi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s_mask >> i & 1u) {
      m.base.map[i] = 0;
      m.pointing[i] = b[bi++];
      star = group.add(star, x.label(i));
    } else {
      m.base.map[i] = static_cast<std::uint32_t>(target_labels.size());
      target_labels.push_back(x.label(i));
    }
  }
  target_labels[0] = star;
  m.base.target = LabeledSet(std::move(target_labels));
  return m;
}

}  // namespace fwsa
