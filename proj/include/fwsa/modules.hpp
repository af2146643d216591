#pragma once

// Concrete modules and module constructions.

#include "fwsa/module.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace fwsa {

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Mixed radix index of v[1..n-1] in base `base`, first entry most significant.
inline std::uint32_t tail_index(const std::vector<std::uint32_t>& v, std::uint32_t base) {
  std::uint64_t idx = 0;
  for (std::size_t i = 1; i < v.size(); ++i) idx = idx * base + v[i];
  return static_cast<std::uint32_t>(idx);
}

inline std::vector<std::uint32_t> tail_decode(std::uint64_t idx, std::size_t n, std::uint32_t base) {
  std::vector<std::uint32_t> v(n, 0);
  for (std::size_t i = n; i-- > 1;) {
    v[i] = static_cast<std::uint32_t>(idx % base);
    idx /= base;
  }
  return v;
}

inline std::vector<std::uint32_t> morphism_key(const TwsMorphism& m) {
  std::vector<std::uint32_t> k = m.map();
  for (auto a : m.pointing) k.push_back(a.id);
  return k;
}

inline std::string format_values(const FiniteAbelianGroup& group, const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += group.format(v[i]);
  }
  return s.empty() ? "-" : s;
}

inline Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

/// The morphism (f, 0) between the zero-labeled sets underlying m.
inline TwsMorphism unlabeled_copy(const FiniteAbelianGroup& group, const TwsMorphism& m) {
  TwsMorphism r = m;
  r.base.source = LabeledSet(std::vector<Element>(m.source().size(), group.zero()));
  r.base.target = LabeledSet(std::vector<Element>(m.target().size(), group.zero()));
  return r;
}

}  // namespace detail

class ZeroModule : public Module {
 public:
  ZeroModule(FiniteAbelianGroup group, Category category) : Module(std::move(group), category, "0") {}

 protected:
  std::size_t compute_dim(const LabeledSet&) const override { return 0; }
  Matrix compute_act(const TwsMorphism&) const override { return Matrix(0, 0); }
};

/// P_X: Y |-> k Hom(Y, X), acting by precomposition.
class Projective : public Module {
 public:
  Projective(FiniteAbelianGroup group, LabeledSet x, Category category)
      : Module(category == Category::fs ? FiniteAbelianGroup::trivial() : group, category,
               "P[" + format_labels(group, x) + "]"),
        x_(category == Category::fs ? LabeledSet(std::vector<Element>(x.size(), Element{0})) : std::move(x)) {
    check_object(x_);
  }

  const LabeledSet& generator_object() const { return x_; }

  /// Basis index of a morphism Y -> X in the value at Y.
  std::uint32_t index_of(const TwsMorphism& m) const {
    const auto& t = table(m.source());
    auto it = t.index.find(detail::morphism_key(m));
    if (it == t.index.end()) throw ConsistencyError(name() + ": morphism is not a basis element");
    return it->second;
  }

  const std::vector<TwsMorphism>& homs(const LabeledSet& y) const { return table(y).homs; }

 protected:
  std::size_t compute_dim(const LabeledSet& y) const override { return table(y).homs.size(); }

  Matrix compute_act(const TwsMorphism& m) const override {
    const auto& ty = table(m.target());
    Matrix a(table(m.source()).homs.size(), ty.homs.size());
    for (std::size_t j = 0; j < ty.homs.size(); ++j) {
      a.set_column(j, unit_vector<Cyclotomic>(index_of(compose_tws(group(), ty.homs[j], m))));
    }
    return a;
  }

  std::vector<std::string> compute_basis(const LabeledSet& y) const override {
    std::vector<std::string> out;
    for (const auto& h : table(y).homs) {
      std::string s = "f=";
      for (std::size_t i = 0; i < h.map().size(); ++i) s += (i ? "," : "") + std::to_string(h.map()[i]);
      if (is_pointed(category())) s += ";g=" + detail::format_values(group(), h.pointing);
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  struct Table {
    std::vector<TwsMorphism> homs;
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  };

  const Table& table(const LabeledSet& y) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(y);
    if (it != tables_.end()) return *it->second;
    auto t = std::make_unique<Table>();
    if (is_pointed(category())) {
      t->homs = hom_tws(group(), y, x_);
    } else {
      for (auto& f : hom_fws(group(), y, x_)) t->homs.push_back(with_zero_pointing(std::move(f)));
    }
    for (std::uint32_t i = 0; i < t->homs.size(); ++i) t->index.emplace(detail::morphism_key(t->homs[i]), i);
    return *tables_.emplace(y, std::move(t)).first->second;
  }

  LabeledSet x_;
  mutable std::mutex mu_;
  mutable std::map<LabeledSet, std::unique_ptr<Table>> tables_;
};

/// Ṽ₀: k[A^X / A] when |X| >= 3 and the labels sum to 0, else 0.
/// Orbits are represented by h: X -> A with h(0) = 0.
class V0Tilde : public Module {
 public:
  explicit V0Tilde(FiniteAbelianGroup group) : Module(std::move(group), Category::tws, "v0tilde") {}

  bool nonzero_at(const LabeledSet& x) const {
    return x.size() >= 3 && x.total(group()).id == 0;
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override {
    return nonzero_at(x) ? detail::ipow(group().order(), x.size() - 1) : 0;
  }

  Matrix compute_act(const TwsMorphism& m) const override {
    const std::size_t dy = dim(m.target()), dz = dim(m.source());
    Matrix a(dz, dy);
    const std::uint32_t q = group().order();
    const std::size_t nz = m.source().size();
    for (std::size_t j = 0; j < dy; ++j) {
      const auto h = detail::tail_decode(j, m.target().size(), q);
      std::vector<std::uint32_t> out(nz);
      Element base{0};
      for (std::size_t z = 0; z < nz; ++z) {
        const Element v = group().add(Element{h[m.map()[z]]}, m.pointing[z]);
        if (z == 0) base = v;
        out[z] = group().sub(v, base).id;
      }
      a.set_column(j, unit_vector<Cyclotomic>(detail::tail_index(out, q)));
    }
    return a;
  }

  std::vector<std::string> compute_basis(const LabeledSet& x) const override {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < dim(x); ++j) {
      std::vector<Element> h;
      for (auto v : detail::tail_decode(j, x.size(), group().order())) h.push_back(Element{v});
      out.push_back("h=" + detail::format_values(group(), h));
    }
    return out;
  }
};

/// V̄₀: k[(A/H)^X / A] with H generated by the labels, for |X| >= 1 with
/// label sum 0.  Orbits are represented by alpha: X -> A/H with alpha(0) = 0.
class V0Bar : public Module {
 public:
  explicit V0Bar(FiniteAbelianGroup group) : Module(std::move(group), Category::tws, "v0bar") {}

  bool nonzero_at(const LabeledSet& x) const { return x.size() >= 1 && x.total(group()).id == 0; }

  QuotientIndex cosets(const LabeledSet& x) const { return subgroup_and_quotient(group(), x.labels()).second; }

  /// Basis index of the class of h: X -> A.
  std::uint32_t index_of(const LabeledSet& x, const std::vector<Element>& h) const {
    const auto q = cosets(x);
    std::vector<std::uint32_t> alpha(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) alpha[i] = q(group().sub(h[i], h[0]));
    return detail::tail_index(alpha, q.size());
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override {
    return nonzero_at(x) ? detail::ipow(cosets(x).size(), x.size() - 1) : 0;
  }

  Matrix compute_act(const TwsMorphism& m) const override {
    const std::size_t dy = dim(m.target()), dz = dim(m.source());
    Matrix a(dz, dy);
    if (dy == 0) return a;
    const auto qy = cosets(m.target());
    const auto qz = cosets(m.source());
    const std::size_t nz = m.source().size();
    for (std::size_t j = 0; j < dy; ++j) {
      const auto alpha = detail::tail_decode(j, m.target().size(), qy.size());
      std::vector<Element> lifted(nz);
      for (std::size_t z = 0; z < nz; ++z) {
        lifted[z] = group().add(qy.representatives[alpha[m.map()[z]]], m.pointing[z]);
      }
      std::vector<std::uint32_t> beta(nz);
      for (std::size_t z = 0; z < nz; ++z) beta[z] = qz(group().sub(lifted[z], lifted[0]));
      a.set_column(j, unit_vector<Cyclotomic>(detail::tail_index(beta, qz.size())));
    }
    return a;
  }

  std::vector<std::string> compute_basis(const LabeledSet& x) const override {
    std::vector<std::string> out;
    const auto q = cosets(x);
    for (std::size_t j = 0; j < dim(x); ++j) {
      std::vector<Element> reps;
      for (auto c : detail::tail_decode(j, x.size(), q.size())) reps.push_back(q.representatives[c]);
      out.push_back("alpha=" + detail::format_values(group(), reps));
    }
    return out;
  }
};

/// The quotient map Ṽ₀(X) -> V̄₀(X), reducing modulo H.
inline Matrix v0_quotient_map(const FiniteAbelianGroup& group, const LabeledSet& x) {
  V0Tilde vt(group);
  V0Bar vb(group);
  const std::size_t dt = vt.dim(x), db = vb.dim(x);
  Matrix q(db, dt);
  for (std::size_t j = 0; j < dt; ++j) {
    std::vector<Element> h;
    for (auto v : detail::tail_decode(j, x.size(), group.order())) h.push_back(Element{v});
    q.set_column(j, unit_vector<Cyclotomic>(vb.index_of(x, h)));
  }
  return q;
}

/// Σ_a M: X |-> M((*, a) ⊔ X) with * placed first; morphisms fix * with
/// pointing 0 there.
class Shift : public Module {
 public:
  Shift(ModulePtr inner, Element a)
      : Module(inner->group(), inner->category(), "shift(" + inner->group().format(a) + "," + inner->name() + ")"),
        inner_(std::move(inner)),
        a_(a) {
    if (!group().contains(a_)) throw ValidationError("shift element outside the group");
    if (is_unlabeled(category()) && a_.id != 0) {
      throw CategoryError("shift of a " + to_string(category()) + " module must use the zero element");
    }
  }

  TwsMorphism lift(const TwsMorphism& m) const {
    TwsMorphism r;
    r.base.source = m.source().with_prefix(a_);
    r.base.target = m.target().with_prefix(a_);
    r.base.map.push_back(0);
    for (auto y : m.map()) r.base.map.push_back(y + 1);
    r.pointing.push_back(group().zero());
    r.pointing.insert(r.pointing.end(), m.pointing.begin(), m.pointing.end());
    return r;
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override { return inner_->dim(x.with_prefix(a_)); }
  Matrix compute_act(const TwsMorphism& m) const override { return inner_->act(lift(m)); }
  std::vector<std::string> compute_basis(const LabeledSet& x) const override {
    return inner_->basis(x.with_prefix(a_));
  }

 private:
  ModulePtr inner_;
  Element a_;
};

/// Day convolution: (M ⊛ N)(X) = ⊕_{S ⊆ X} M(S) ⊗ N(X \ S).  Blocks are in
/// bitmask order of S; within a block, index i * dim N(X \ S) + j.
class Convolution : public Module {
 public:
  Convolution(ModulePtr m, ModulePtr n)
      : Module(m->group(), m->category(), "conv(" + m->name() + "," + n->name() + ")"),
        m_(std::move(m)),
        n_(std::move(n)) {
    if (!(m_->group() == n_->group()) || m_->category() != n_->category()) {
      throw CategoryError("convolution factors must share group and category");
    }
  }

  /// Offsets of the blocks; entry 2^n is the total dimension.
  std::vector<std::size_t> offsets(const LabeledSet& x) const {
    const std::uint64_t full = (std::uint64_t{1} << x.size()) - 1;
    std::vector<std::size_t> off(full + 2, 0);
    for (std::uint64_t s = 0; s <= full; ++s) {
      off[s + 1] = off[s] + m_->dim(x.restrict(s)) * n_->dim(x.restrict(full & ~s));
    }
    return off;
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override { return offsets(x).back(); }

  Matrix compute_act(const TwsMorphism& mor) const override {
    const auto oy = offsets(mor.target());
    const auto oz = offsets(mor.source());
    Matrix a(oz.back(), oy.back());
    const std::uint64_t full = (std::uint64_t{1} << mor.target().size()) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
      if (oy[s + 1] == oy[s]) continue;
      const std::uint64_t sz = preimage_mask(mor, s);
      const Matrix block = kron(m_->act(restrict_to_target_subset(mor, s)),
                                n_->act(restrict_to_target_subset(mor, full & ~s)));
      for (std::size_t j = 0; j < block.cols(); ++j) {
        Vector col;
        for (const auto& [i, v] : block.column(j)) col.emplace_back(static_cast<std::uint32_t>(i + oz[sz]), v);
        a.set_column(oy[s] + j, std::move(col));
      }
    }
    return a;
  }

 private:
  ModulePtr m_;
  ModulePtr n_;
};

/// Coinvariants of the pointing action: a tws-module becomes an fws-module
/// with M_A(X) = M(X) / span{v - (id, a δ_x)^* v}.
class Coinvariants : public Module {
 public:
  explicit Coinvariants(ModulePtr inner)
      : Module(inner->group(), Category::fws, "coinv(" + inner->name() + ")"), inner_(std::move(inner)) {
    if (inner_->category() != Category::tws) throw CategoryError("coinvariants need a tws module");
  }

  const QuotientSpace<Cyclotomic>& quotient(const LabeledSet& x) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(x); it != cache_.end()) return *it->second;
    }
    const std::size_t d = inner_->dim(x);
    std::vector<Vector> relations;
    if (d > 0) {
      const auto& orders = group().cyclic_orders();
      for (std::size_t pt = 0; pt < x.size(); ++pt) {
        for (std::size_t k = 0; k < orders.size(); ++k) {
          std::vector<std::uint32_t> c(orders.size(), 0);
          c[k] = 1;
          TwsMorphism t = identity_tws(x);
          t.pointing[pt] = group().from_coords(c);
          const Matrix tm = inner_->act(t);
          for (std::uint32_t j = 0; j < d; ++j) {
            relations.push_back(axpy(unit_vector<Cyclotomic>(j), Cyclotomic(-1), tm.column(j)));
          }
        }
      }
    }
    auto q = std::make_shared<QuotientSpace<Cyclotomic>>(d, relations);
    std::lock_guard<std::mutex> lock(mu_);
    return *cache_.emplace(x, std::move(q)).first->second;
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override { return quotient(x).dim(); }

  Matrix compute_act(const TwsMorphism& m) const override {
    const auto& qy = quotient(m.target());
    const auto& qz = quotient(m.source());
    const Matrix f = inner_->act(m);
    for (const auto& r : qy.relation_basis().vectors()) {
      if (!qz.project(f.apply(r)).empty()) {
        throw ConsistencyError(name() + ": induced action is not well defined on coinvariants");
      }
    }
    Matrix a(qz.dim(), qy.dim());
    for (std::uint32_t k = 0; k < qy.dim(); ++k) a.set_column(k, qz.project(f.column(qy.free_coordinate(k))));
    return a;
  }

 private:
  ModulePtr inner_;
  mutable std::mutex mu_;
  mutable std::map<LabeledSet, std::shared_ptr<QuotientSpace<Cyclotomic>>> cache_;
};

/// u_*: an fws-module becomes an FS-module, u_*(M)(X) = ⊕_{ℓ: X -> A} M(X, ℓ)
/// with blocks in lexicographic order of ℓ.
class Pushforward : public Module {
 public:
  explicit Pushforward(ModulePtr inner)
      : Module(FiniteAbelianGroup::trivial(), Category::fs, "push(" + inner->name() + ")"), inner_(std::move(inner)) {
    if (inner_->category() != Category::fws) throw CategoryError("pushforward needs an fws module");
  }

  const FiniteAbelianGroup& source_group() const { return inner_->group(); }

  std::vector<std::size_t> offsets(std::size_t n) const {
    const auto labelings = all_labelings(source_group(), n);
    std::vector<std::size_t> off(labelings.size() + 1, 0);
    for (std::size_t k = 0; k < labelings.size(); ++k) off[k + 1] = off[k] + inner_->dim(labelings[k]);
    return off;
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override { return offsets(x.size()).back(); }

  Matrix compute_act(const TwsMorphism& m) const override {
    const auto& a = source_group();
    const std::size_t nz = m.source().size(), ny = m.target().size();
    const auto oz = offsets(nz);
    const auto oy = offsets(ny);
    std::vector<Vector> cols(oy.back());
    const auto labelings = all_labelings(a, nz);
    for (std::size_t k = 0; k < labelings.size(); ++k) {
      if (oz[k + 1] == oz[k]) continue;
      std::vector<Element> ly(ny, a.zero());
      for (std::size_t z = 0; z < nz; ++z) ly[m.map()[z]] = a.add(ly[m.map()[z]], labelings[k].label(z));
      std::uint64_t yi = 0;
      for (auto e : ly) yi = yi * a.order() + e.id;
      TwsMorphism lm{FwsMorphism{labelings[k], LabeledSet(ly), m.map()}, std::vector<Element>(nz, a.zero())};
      const Matrix block = inner_->act(lm);
      for (std::size_t j = 0; j < block.cols(); ++j) {
        auto& col = cols[oy[yi] + j];
        for (const auto& [i, v] : block.column(j)) col.emplace_back(static_cast<std::uint32_t>(i + oz[k]), v);
      }
    }
    return Matrix::from_columns(oz.back(), std::move(cols));
  }

 private:
  ModulePtr inner_;
};

/// Fourier transform of an FS_A-module (given as a tws- or fsA-module, read
/// on zero-labeled objects): an fws-module over the dual group, presented
/// with the same cyclic factors.  F(M)(X, ℓ) is the ℓ-isotypic part of
/// M(X, 0), with basis the pivot columns of the isotypic projector.
class Fourier : public Module {
 public:
  explicit Fourier(ModulePtr inner)
      : Module(inner->group(), Category::fws, "fourier(" + inner->name() + ")"), inner_(std::move(inner)) {
    if (inner_->category() != Category::tws && inner_->category() != Category::fsA) {
      throw CategoryError("Fourier transform needs a tws or fsA module");
    }
  }

  /// The projector onto the ℓ-isotypic component of M(X, 0), where ℓ is the
  /// labeling of x read as characters.
  const Matrix& projector(const LabeledSet& x) const { return data(x).projector; }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override { return data(x).basis.size(); }

  Matrix compute_act(const TwsMorphism& m) const override {
    const auto& dy = data(m.target());
    const auto& dz = data(m.source());
    const Matrix f = inner_->act(detail::unlabeled_copy(group(), m));
    Matrix a(dz.basis.size(), dy.basis.size());
    for (std::size_t k = 0; k < dy.basis.size(); ++k) {
      const Vector w = dz.projector.apply(f.apply(dy.basis[k]));
      auto c = dz.solver->coordinates(w);
      if (!c) throw ConsistencyError(name() + ": image left the isotypic component");
      a.set_column(k, std::move(*c));
    }
    return a;
  }

 private:
  struct Data {
    Matrix projector;
    std::vector<Vector> basis;
    std::unique_ptr<EchelonBasis<Cyclotomic>> solver;
  };

  const Data& data(const LabeledSet& x) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(x); it != cache_.end()) return *it->second;
    }
    const auto& a = group();
    const LabeledSet x0(std::vector<Element>(x.size(), a.zero()));
    const std::size_t d = inner_->dim(x0);
    const Cyclotomic inv_order = Cyclotomic(Rational(1, a.order()));
    Matrix pi = Matrix::identity(d);
    for (std::size_t pt = 0; pt < x.size(); ++pt) {
      const Character chi = character_of(a, x.label(pt));
      Matrix px(d, d);
      for (auto g : a.elements()) {
        TwsMorphism t = identity_tws(x0);
        t.pointing[pt] = g;
        px = px + inner_->act(t).scaled_by(evaluate(a, chi, a.neg(g)) * inv_order);
      }
      pi = pi * px;
    }
    if (!(pi * pi == pi)) throw ConsistencyError(name() + ": isotypic projector is not idempotent");
    auto data = std::make_unique<Data>();
    data->solver = std::make_unique<EchelonBasis<Cyclotomic>>(d, true);
    for (std::size_t j = 0; j < d && !data->solver->full(); ++j) {
      // Only independent columns may reach the tracking solver, so that
      // generator k is basis[k].
      if (data->solver->contains(pi.column(j))) continue;
      data->solver->add(pi.column(j));
      data->basis.push_back(pi.column(j));
    }
    data->projector = std::move(pi);
    std::lock_guard<std::mutex> lock(mu_);
    return *cache_.emplace(x, std::move(data)).first->second;
  }

  ModulePtr inner_;
  mutable std::mutex mu_;
  mutable std::map<LabeledSet, std::unique_ptr<Data>> cache_;
};

/// Restriction of a tws-module along FWS_A -> tilde-FWS_A (to fws) or to
/// the zero-labeled subcategory FS_A (to fsA).
class Restriction : public Module {
 public:
  Restriction(ModulePtr inner, Category to)
      : Module(inner->group(), to, std::string(to == Category::fws ? "res(" : "fsa(") + inner->name() + ")"),
        inner_(std::move(inner)) {
    if (inner_->category() != Category::tws) throw CategoryError("restriction needs a tws module");
    if (to != Category::fws && to != Category::fsA) throw CategoryError("restriction target must be fws or fsA");
  }

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override { return inner_->dim(x); }
  Matrix compute_act(const TwsMorphism& m) const override { return inner_->act(m); }
  std::vector<std::string> compute_basis(const LabeledSet& x) const override { return inner_->basis(x); }

 private:
  ModulePtr inner_;
};

class DirectSum : public Module {
 public:
  explicit DirectSum(std::vector<ModulePtr> parts)
      : Module(check_parts(parts).group(), parts.front()->category(), sum_name(parts)), parts_(std::move(parts)) {}

 protected:
  std::size_t compute_dim(const LabeledSet& x) const override {
    std::size_t d = 0;
    for (const auto& p : parts_) d += p->dim(x);
    return d;
  }

  Matrix compute_act(const TwsMorphism& m) const override {
    std::vector<Vector> cols;
    std::size_t row_off = 0;
    for (const auto& p : parts_) {
      const Matrix b = p->act(m);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Vector col;
        for (const auto& [i, v] : b.column(j)) col.emplace_back(static_cast<std::uint32_t>(i + row_off), v);
        cols.push_back(std::move(col));
      }
      row_off += b.rows();
    }
    return Matrix::from_columns(row_off, std::move(cols));
  }

 private:
  static const Module& check_parts(const std::vector<ModulePtr>& parts) {
    if (parts.empty()) throw CategoryError("direct sum needs at least one summand");
    for (const auto& p : parts) {
      if (!(p->group() == parts.front()->group()) || p->category() != parts.front()->category()) {
        throw CategoryError("direct summands must share group and category");
      }
    }
    return *parts.front();
  }

  static std::string sum_name(const std::vector<ModulePtr>& parts) {
    std::string s = "sum(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i]->name();
    return s + ")";
  }

  std::vector<ModulePtr> parts_;
};

inline ModulePtr zero_module(const FiniteAbelianGroup& a, Category c) { return std::make_shared<ZeroModule>(a, c); }
inline ModulePtr principal_projective(const FiniteAbelianGroup& a, const LabeledSet& x, Category c) {
  return std::make_shared<Projective>(a, x, c);
}
inline ModulePtr v0_tilde(const FiniteAbelianGroup& a) { return std::make_shared<V0Tilde>(a); }
inline ModulePtr v0_bar(const FiniteAbelianGroup& a) { return std::make_shared<V0Bar>(a); }
inline ModulePtr shift(ModulePtr m, Element a) { return std::make_shared<Shift>(std::move(m), a); }
inline ModulePtr convolve(ModulePtr m, ModulePtr n) { return std::make_shared<Convolution>(std::move(m), std::move(n)); }
inline ModulePtr coinvariants(ModulePtr m) { return std::make_shared<Coinvariants>(std::move(m)); }
inline ModulePtr pushforward_u(ModulePtr m) { return std::make_shared<Pushforward>(std::move(m)); }
inline ModulePtr fourier(ModulePtr m) { return std::make_shared<Fourier>(std::move(m)); }
inline ModulePtr restrict_to_fws(ModulePtr m) { return std::make_shared<Restriction>(std::move(m), Category::fws); }
inline ModulePtr restrict_to_fsa(ModulePtr m) { return std::make_shared<Restriction>(std::move(m), Category::fsA); }
inline ModulePtr direct_sum(std::vector<ModulePtr> parts) { return std::make_shared<DirectSum>(std::move(parts)); }

}  // namespace fwsa
