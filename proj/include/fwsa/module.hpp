#pragma once

// Contravariant functor modules over FWS_A, tilde-FWS_A, FS and FS_A.
//
// act(m) for m: Z -> Y is the matrix of M(Y) -> M(Z): dim M(Z) rows,
// dim M(Y) columns, column j the image of the j-th basis vector of M(Y).
// With this convention act(m2 o m1) = act(m1) * act(m2).

#include "fwsa/labeled.hpp"
#include "fwsa/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwsa {

enum class Category { fws, tws, fs, fsA };

inline std::string to_string(Category c) {
  switch (c) {
    case Category::fws: return "fws";
    case Category::tws: return "tws";
    case Category::fs: return "fs";
    case Category::fsA: return "fsA";
  }
  return "?";
}

inline Category parse_category(std::string_view s) {
  if (s == "fws") return Category::fws;
  if (s == "tws") return Category::tws;
  if (s == "fs") return Category::fs;
  if (s == "fsA") return Category::fsA;
  throw ParseError("unknown category '" + std::string(s) + "' (expected fws, tws, fs or fsA)");
}

/// Morphisms carry nontrivial pointings.
inline bool is_pointed(Category c) { return c == Category::tws || c == Category::fsA; }
/// Objects are restricted to zero labelings.
inline bool is_unlabeled(Category c) { return c == Category::fs || c == Category::fsA; }

class CategoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed; indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Matrix = SparseMatrix<Cyclotomic>;
using Vector = SparseVec<Cyclotomic>;

class Module {
 public:
  Module(FiniteAbelianGroup group, Category category, std::string name)
      : group_(std::move(group)), category_(category), name_(std::move(name)) {
    if (category_ == Category::fs && !group_.is_trivial()) {
      throw CategoryError("fs modules live over the trivial group");
    }
  }
  virtual ~Module() = default;
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const FiniteAbelianGroup& group() const { return group_; }
  Category category() const { return category_; }
  const std::string& name() const { return name_; }

  void check_object(const LabeledSet& x) const {
    validate_object(group_, x);
    if (is_unlabeled(category_) && !x.all_zero()) {
      throw CategoryError(name_ + ": " + to_string(category_) + " objects must carry the zero labeling");
    }
  }

  void check_morphism(const TwsMorphism& m) const {
    validate_morphism(group_, m);
    check_object(m.source());
    check_object(m.target());
    if (!is_pointed(category_) && !m.zero_pointing()) {
      throw CategoryError(name_ + ": " + to_string(category_) + " morphisms must have zero pointing");
    }
  }

  std::size_t dim(const LabeledSet& x) const {
    check_object(x);
    LabeledSet key = x.canonical();
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = dims_.find(key); it != dims_.end()) return it->second;
    }
    const std::size_t d = compute_dim(key);
    std::lock_guard<std::mutex> lock(mu_);
    dims_.emplace(std::move(key), d);
    return d;
  }

  Matrix act(const TwsMorphism& m) const {
    check_morphism(m);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = acts_.find(m); it != acts_.end()) return it->second;
    }
    Matrix a = compute_act(m);
    const std::size_t rows = dim(m.source()), cols = dim(m.target());
    if (a.rows() != rows || a.cols() != cols) {
      throw ConsistencyError(name_ + ": action matrix has shape " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (acts_.size() >= kActCacheLimit) acts_.clear();
    acts_.emplace(m, a);
    return a;
  }

  Matrix act(const FwsMorphism& f) const { return act(with_zero_pointing(f)); }

  std::vector<std::string> basis(const LabeledSet& x) const {
    check_object(x);
    auto b = compute_basis(x);
    if (b.size() != dim(x)) throw ConsistencyError(name_ + ": basis label count differs from dimension");
    return b;
  }

  /// Canonical objects of size n in this module's category.
  std::vector<LabeledSet> objects(std::size_t n) const {
    if (is_unlabeled(category_)) return {LabeledSet(std::vector<Element>(n, group_.zero()))};
    return enumerate_objects(group_, n);
  }

 protected:
  virtual std::size_t compute_dim(const LabeledSet& x) const = 0;
  virtual Matrix compute_act(const TwsMorphism& m) const = 0;

  virtual std::vector<std::string> compute_basis(const LabeledSet& x) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim(x); ++i) out.push_back("e" + std::to_string(i));
    return out;
  }

 private:
  static constexpr std::size_t kActCacheLimit = 1u << 16;

  FiniteAbelianGroup group_;
  Category category_;
  std::string name_;
  mutable std::mutex mu_;
  mutable std::map<LabeledSet, std::size_t> dims_;
  mutable std::map<TwsMorphism, Matrix> acts_;
};

using ModulePtr = std::shared_ptr<const Module>;

}  // namespace fwsa
