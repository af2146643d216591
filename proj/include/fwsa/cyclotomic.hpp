#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_e).
//
// A number is stored as its coordinate vector in the power basis
// 1, z, ..., z^{phi(e)-1} of Q[z]/(Phi_e(z)).  Conductor 1 is plain Q and
// embeds into every other field; mixing two different nontrivial
// conductors is an error.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fwsa {

using Rational = mpq_class;

class FieldMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using IntPoly = std::vector<long>;  // little-endian coefficients

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

inline const IntPoly& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{dd | d, dd < d} Phi_dd, built for every divisor
  // of n in increasing order so the smaller factors are always cached.
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d) != 0) continue;
    IntPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (unsigned dd = 1; dd < d; ++dd) {
      if (d % dd == 0) p = poly_divide_exact(p, cache.at(dd));
    }
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

inline unsigned euler_phi(unsigned n) {
  return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
inline RatPoly poly_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return a;
}

inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), c_(1, Rational(0)) {}
  Cyclotomic(long v) : conductor_(1), c_(1, Rational(v)) {}  // NOLINT(implicit)
  Cyclotomic(Rational q) : conductor_(1), c_(1, std::move(q)) { c_[0].canonicalize(); }  // NOLINT(implicit)

  static Cyclotomic zero(unsigned conductor) {
    Cyclotomic z;
    z.conductor_ = conductor;
    z.c_.assign(detail::euler_phi(conductor), Rational(0));
    return z;
  }

  // zeta_e^k, reduced into the power basis.
  static Cyclotomic root_of_unity(unsigned conductor, long k) {
    if (conductor == 0) throw std::invalid_argument("conductor must be positive");
    const long e = static_cast<long>(conductor);
    const long r = ((k % e) + e) % e;
    detail::RatPoly p(static_cast<std::size_t>(r) + 1, Rational(0));
    p[static_cast<std::size_t>(r)] = 1;
    return from_poly(conductor, std::move(p));
  }

  static Cyclotomic from_coords(unsigned conductor, std::vector<Rational> coords) {
    if (coords.size() > detail::euler_phi(conductor)) {
      return from_poly(conductor, std::move(coords));
    }
    Cyclotomic x = zero(conductor);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      x.c_[i] = std::move(coords[i]);
      x.c_[i].canonicalize();
    }
    return x;
  }

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_) {
      if (sgn(q) != 0) return false;
    }
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) return false;
    }
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) return false;
    }
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.conductor_ == conductor_ || o.conductor_ == 1) {
      if (o.conductor_ == conductor_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
      } else {
        c_[0] += o.c_[0];
      }
      return *this;
    }
    Cyclotomic lifted = promoted(o.conductor_);
    lifted += o;
    return *this = std::move(lifted);
  }

  Cyclotomic& operator-=(const Cyclotomic& o) {
    if (o.conductor_ == conductor_ || o.conductor_ == 1) {
      if (o.conductor_ == conductor_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
      } else {
        c_[0] -= o.c_[0];
      }
      return *this;
    }
    Cyclotomic lifted = promoted(o.conductor_);
    lifted -= o;
    return *this = std::move(lifted);
  }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (o.conductor_ == 1) {
      for (auto& q : c_) q *= o.c_[0];
      return *this;
    }
    if (conductor_ == 1) {
      Cyclotomic r = o;
      for (auto& q : r.c_) q *= c_[0];
      return *this = std::move(r);
    }
    check_same(o);
    return *this = from_poly(conductor_, detail::poly_mul(c_, o.c_));
  }

  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.c_ == b.c_;
    if (a.conductor_ == 1) return b.is_rational() && b.c_[0] == a.c_[0];
    if (b.conductor_ == 1) return a.is_rational() && a.c_[0] == b.c_[0];
    throw FieldMismatchError("comparison between Q(zeta_" + std::to_string(a.conductor_) +
                             ") and Q(zeta_" + std::to_string(b.conductor_) + ")");
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    if (conductor_ == 1 || is_rational()) {
      Cyclotomic r = *this;
      r.c_[0] = 1 / c_[0];
      for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
      return r;
    }
    // Extended Euclid: s * a + t * Phi = 1.
    const auto& phi_int = detail::cyclotomic_polynomial(conductor_);
    detail::RatPoly phi(phi_int.begin(), phi_int.end());
    detail::RatPoly r0 = phi, r1 = c_;
    detail::trim(r1);
    detail::RatPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
      auto [q, rem] = detail::poly_divmod(r0, r1);
      detail::RatPoly s2 = detail::poly_sub(s0, detail::poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi is irreducible.
    const Rational inv = 1 / r0[0];
    for (auto& q : s0) q *= inv;
    return from_poly(conductor_, std::move(s0));
  }

  // Complex conjugation z -> z^{-1}.
  Cyclotomic conj() const {
    if (conductor_ <= 2) return *this;
    Cyclotomic r = zero(conductor_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      Cyclotomic term = root_of_unity(conductor_, -static_cast<long>(i));
      for (auto& q : term.c_) q *= c_[i];
      r += term;
    }
    return r;
  }

  std::string to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      std::string coef = c_[i].get_str();
      if (!out.empty()) {
        if (coef[0] == '-') {
          out += "-";
          coef.erase(0, 1);
        } else {
          out += "+";
        }
      }
      if (i == 0) {
        out += coef;
        continue;
      }
      if (coef == "1") {
      } else if (coef == "-1") {
        out += "-";
      } else {
        out += coef + "*";
      }
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  static Cyclotomic from_poly(unsigned conductor, detail::RatPoly p) {
    const auto& phi = detail::cyclotomic_polynomial(conductor);
    const std::size_t d = phi.size() - 1;
    for (auto& q : p) q.canonicalize();
    for (std::size_t k = p.size(); k-- > d;) {
      if (sgn(p[k]) == 0) continue;
      const Rational c = p[k];
      for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * phi[i];
    }
    p.resize(d, Rational(0));
    Cyclotomic x;
    x.conductor_ = conductor;
    x.c_ = std::move(p);
    return x;
  }

  Cyclotomic promoted(unsigned conductor) const {
    if (conductor_ != 1) {
      throw FieldMismatchError("arithmetic between Q(zeta_" + std::to_string(conductor_) +
                               ") and Q(zeta_" + std::to_string(conductor) + ")");
    }
    Cyclotomic r = zero(conductor);
    r.c_[0] = c_[0];
    return r;
  }

  void check_same(const Cyclotomic& o) const {
    if (o.conductor_ != conductor_) {
      throw FieldMismatchError("arithmetic between Q(zeta_" + std::to_string(conductor_) +
                               ") and Q(zeta_" + std::to_string(o.conductor_) + ")");
    }
  }

  unsigned conductor_;
  std::vector<Rational> c_;
};

}  // namespace fwsa
