#pragma once

// Finite abelian groups presented as explicit products Z/n_1 x ... x Z/n_k,
// their subgroups, quotients and characters.

#include "fwsa/cyclotomic.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fwsa {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of a FiniteAbelianGroup, encoded as its mixed-radix index with
/// the first cyclic factor most significant.  Index order is therefore the
/// lexicographic order on coordinate vectors, and the identity is index 0.
struct Element {
  std::uint32_t id = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty() || s.size() > 9) return false;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::uint32_t>{}) {}

  explicit FiniteAbelianGroup(std::vector<std::uint32_t> cyclic_orders)
      : orders_(std::move(cyclic_orders)) {
    std::uint64_t order = 1;
    std::uint64_t exponent = 1;
    for (auto n : orders_) {
      if (n < 2) throw ValidationError("cyclic factor Z" + std::to_string(n) + " must have order >= 2");
      order *= n;
      exponent = std::lcm(exponent, static_cast<std::uint64_t>(n));
      if (order > (1u << 16)) throw ValidationError("group order exceeds 65536");
    }
    order_ = static_cast<std::uint32_t>(order);
    exponent_ = static_cast<std::uint32_t>(exponent);
    radix_.assign(orders_.size(), 1);
    for (std::size_t k = orders_.size(); k-- > 1;) radix_[k - 1] = radix_[k] * orders_[k];
  }

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }

  const std::vector<std::uint32_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint32_t order() const { return order_; }
  std::uint32_t exponent() const { return exponent_; }
  bool is_trivial() const { return order_ == 1; }

  Element zero() const { return Element{0}; }

  std::vector<std::uint32_t> coords(Element a) const {
    std::vector<std::uint32_t> c(orders_.size());
    for (std::size_t k = 0; k < orders_.size(); ++k) c[k] = (a.id / radix_[k]) % orders_[k];
    return c;
  }

  Element from_coords(const std::vector<std::uint32_t>& c) const {
    if (c.size() != orders_.size()) throw ValidationError("element has wrong number of coordinates");
    std::uint32_t id = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) id += (c[k] % orders_[k]) * radix_[k];
    return Element{id};
  }

  Element add(Element a, Element b) const {
    std::uint32_t id = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      const std::uint32_t x = (a.id / radix_[k]) % orders_[k];
      const std::uint32_t y = (b.id / radix_[k]) % orders_[k];
      id += ((x + y) % orders_[k]) * radix_[k];
    }
    return Element{id};
  }

  Element neg(Element a) const {
    std::uint32_t id = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      const std::uint32_t x = (a.id / radix_[k]) % orders_[k];
      id += ((orders_[k] - x) % orders_[k]) * radix_[k];
    }
    return Element{id};
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element sum(const std::vector<Element>& xs) const {
    Element s = zero();
    for (auto x : xs) s = add(s, x);
    return s;
  }

  std::uint32_t element_order(Element a) const {
    std::uint64_t ord = 1;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      const std::uint32_t x = (a.id / radix_[k]) % orders_[k];
      ord = std::lcm(ord, static_cast<std::uint64_t>(orders_[k] / std::gcd(orders_[k], x)));
    }
    return static_cast<std::uint32_t>(ord);
  }

  bool contains(Element a) const { return a.id < order_; }

  std::vector<Element> elements() const {
    std::vector<Element> out(order_);
    for (std::uint32_t i = 0; i < order_; ++i) out[i] = Element{i};
    return out;
  }

  /// Element literal `c1.c2.....ck`; the trivial group's only element is `0`.
  std::string format(Element a) const {
    if (orders_.empty()) return "0";
    std::string out;
    const auto c = coords(a);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += '.';
      out += std::to_string(c[k]);
    }
    return out;
  }

  Element parse_element(std::string_view s) const {
    if (orders_.empty()) {
      if (s == "0") return zero();
      throw ParseError("element literal '" + std::string(s) + "' is not an element of the trivial group");
    }
    const auto parts = detail::split(s, '.');
    if (parts.size() != orders_.size()) {
      throw ParseError("element literal '" + std::string(s) + "' needs " + std::to_string(orders_.size()) +
                       " dot-separated coordinates");
    }
    std::vector<std::uint32_t> c(orders_.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::uint64_t v = 0;
      if (!detail::parse_uint(parts[k], v)) {
        throw ParseError("element literal '" + std::string(s) + "': bad coordinate '" + std::string(parts[k]) + "'");
      }
      if (v >= orders_[k]) {
        throw ValidationError("element literal '" + std::string(s) + "': coordinate " + std::to_string(v) +
                              " out of range for Z" + std::to_string(orders_[k]));
      }
      c[k] = static_cast<std::uint32_t>(v);
    }
    return from_coords(c);
  }

  std::string to_string() const {
    if (orders_.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      if (k) out += 'x';
      out += "Z" + std::to_string(orders_[k]);
    }
    return out;
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> radix_;
  std::uint32_t order_ = 1;
  std::uint32_t exponent_ = 1;
};

/// Grammar: `1` | `Z<n>(xZ<m>)*` with every factor >= 2.
inline FiniteAbelianGroup parse_group(std::string_view spec) {
  if (spec == "1") return FiniteAbelianGroup::trivial();
  if (spec.empty()) throw ParseError("empty group spec");
  std::vector<std::uint32_t> orders;
  for (auto tok : detail::split(spec, 'x')) {
    std::uint64_t n = 0;
    if (tok.size() < 2 || tok[0] != 'Z' || !detail::parse_uint(tok.substr(1), n)) {
      throw ParseError("group spec '" + std::string(spec) + "': bad token '" + std::string(tok) + "'");
    }
    if (n < 2) throw ValidationError("group spec '" + std::string(spec) + "': factor Z" + std::to_string(n) + " < 2");
    orders.push_back(static_cast<std::uint32_t>(n));
  }
  return FiniteAbelianGroup(std::move(orders));
}

struct Subgroup {
  std::vector<Element> generators;
  std::vector<Element> elements;  // sorted

  bool contains(Element a) const { return std::binary_search(elements.begin(), elements.end(), a); }
  std::size_t order() const { return elements.size(); }
};

/// Coset labelling of A / H.  Cosets are numbered in the order of their
/// lexicographically minimal representative, so the identity coset is 0.
struct QuotientIndex {
  std::vector<std::uint32_t> coset_of;     // indexed by Element::id
  std::vector<Element> representatives;    // minimal representative per coset

  std::uint32_t size() const { return static_cast<std::uint32_t>(representatives.size()); }
  std::uint32_t operator()(Element a) const { return coset_of[a.id]; }
};

inline std::pair<Subgroup, QuotientIndex> subgroup_and_quotient(const FiniteAbelianGroup& group,
                                                                const std::vector<Element>& gens) {
  std::vector<char> in(group.order(), 0);
  std::vector<Element> frontier{group.zero()};
  in[0] = 1;
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      if (!group.contains(g)) throw ValidationError("subgroup generator outside the group");
      const Element y = group.add(x, g);
      if (!in[y.id]) {
        in[y.id] = 1;
        frontier.push_back(y);
      }
    }
  }
  Subgroup h;
  h.generators = gens;
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    if (in[i]) h.elements.push_back(Element{i});
  }
  QuotientIndex q;
  constexpr std::uint32_t unset = ~0u;
  q.coset_of.assign(group.order(), unset);
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    if (q.coset_of[i] != unset) continue;
    const std::uint32_t idx = q.size();
    q.representatives.push_back(Element{i});
    for (auto s : h.elements) q.coset_of[group.add(Element{i}, s).id] = idx;
  }
  return {std::move(h), std::move(q)};
}

/// A character of A, given by exponents r_k: the generator of the k-th
/// cyclic factor maps to zeta_{n_k}^{r_k}.  Characters are in bijection with
/// elements of A (the dual group is presented with the same factors).
struct Character {
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const Character&, const Character&) = default;
};

inline Character character_of(const FiniteAbelianGroup& group, Element dual) {
  return Character{group.coords(dual)};
}

/// chi(a) as a power of zeta_e with e the group exponent.
inline std::uint32_t character_exponent(const FiniteAbelianGroup& group, const Character& chi, Element a) {
  const auto c = group.coords(a);
  const auto& n = group.cyclic_orders();
  const std::uint64_t e = group.exponent();
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < n.size(); ++i) k += static_cast<std::uint64_t>(chi.exponents[i]) * c[i] * (e / n[i]);
  return static_cast<std::uint32_t>(k % e);
}

inline Cyclotomic evaluate(const FiniteAbelianGroup& group, const Character& chi, Element a) {
  return Cyclotomic::root_of_unity(group.exponent(), character_exponent(group, chi, a));
}

inline std::vector<Character> characters(const FiniteAbelianGroup& group) {
  std::vector<Character> out;
  out.reserve(group.order());
  for (auto a : group.elements()) out.push_back(character_of(group, a));
  return out;
}

}  // namespace fwsa
