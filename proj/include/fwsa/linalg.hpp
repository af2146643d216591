#pragma once

// Exact sparse linear algebra over Q and Q(zeta_e).
//
// Vectors are sorted (index, value) lists; matrices are stored by column.
// Elimination is incremental: each vector is reduced against the stored
// echelon vectors in increasing pivot order, where the pivot of a vector is
// its lowest nonzero index and stored vectors are normalized to pivot 1.
// Feeding the columns of a matrix left to right therefore keeps exactly the
// pivot columns, which makes bases reproducible.

#include "fwsa/cyclotomic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace fwsa {

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }
inline Rational inverse(const Rational& x) { return 1 / x; }

template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

/// y += alpha * x
template <class K>
SparseVec<K> axpy(const SparseVec<K>& y, const std::type_identity_t<K>& alpha, const SparseVec<K>& x) {
  SparseVec<K> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      K v = alpha * x[j].second;
      if (!is_zero(v)) out.emplace_back(x[j].first, std::move(v));
      ++j;
    } else {
      K v = y[i].second + alpha * x[j].second;
      if (!is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
SparseVec<K> scaled(SparseVec<K> v, const std::type_identity_t<K>& alpha) {
  if (is_zero(alpha)) return {};
  for (auto& [i, x] : v) x = x * alpha;
  return v;
}

template <class K>
SparseVec<K> unit_vector(std::uint32_t i) {
  return SparseVec<K>{{i, K(1)}};
}

template <class K = Cyclotomic>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), K(1));
    return m;
  }

  static SparseMatrix from_dense(const std::vector<std::vector<K>>& rows) {
    const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    SparseMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        if (!is_zero(rows[i][j])) m.columns_[j].emplace_back(static_cast<std::uint32_t>(i), rows[i][j]);
      }
    }
    return m;
  }

  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVec<K>> columns) {
    SparseMatrix m(rows, columns.size());
    m.columns_ = std::move(columns);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec<K>& column(std::size_t j) const { return columns_[j]; }
  SparseVec<K>& column(std::size_t j) { return columns_[j]; }
  const std::vector<SparseVec<K>>& columns() const { return columns_; }

  void set_column(std::size_t j, SparseVec<K> v) { columns_[j] = std::move(v); }

  void append_column(SparseVec<K> v) {
    columns_.push_back(std::move(v));
    ++cols_;
  }

  K at(std::size_t i, std::size_t j) const {
    for (const auto& [r, v] : columns_[j]) {
      if (r == i) return v;
    }
    return K(0);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero_matrix() const { return nonzeros() == 0; }

  SparseVec<K> apply(const SparseVec<K>& v) const {
    SparseVec<K> out;
    for (const auto& [j, x] : v) out = axpy(out, x, columns_[j]);
    return out;
  }

  SparseMatrix transpose() const {
    std::vector<SparseVec<K>> cols(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      for (const auto& [i, v] : columns_[j]) cols[i].emplace_back(static_cast<std::uint32_t>(j), v);
    }
    SparseMatrix t(cols_, rows_);
    t.columns_ = std::move(cols);
    return t;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix p(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) p.columns_[j] = a.apply(b.columns_[j]);
    return p;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    SparseMatrix s(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) s.columns_[j] = axpy(a.columns_[j], K(1), b.columns_[j]);
    return s;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    SparseMatrix s(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) s.columns_[j] = axpy(a.columns_[j], K(-1), b.columns_[j]);
    return s;
  }

  SparseMatrix scaled_by(const K& alpha) const {
    SparseMatrix s(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) s.columns_[j] = scaled(columns_[j], alpha);
    return s;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const auto& x = a.columns_[j];
      const auto& y = b.columns_[j];
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<K>> to_dense() const {
    std::vector<std::vector<K>> d(rows_, std::vector<K>(cols_, K(0)));
    for (std::size_t j = 0; j < cols_; ++j) {
      for (const auto& [i, v] : columns_[j]) d[i][j] = v;
    }
    return d;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec<K>> columns_;
};

/// Rows of `top` above rows of `bottom`.
template <class K>
SparseMatrix<K> vstack(const SparseMatrix<K>& top, const SparseMatrix<K>& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  std::vector<SparseVec<K>> cols(top.cols());
  const auto shift = static_cast<std::uint32_t>(top.rows());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    cols[j] = top.column(j);
    for (const auto& [i, v] : bottom.column(j)) cols[j].emplace_back(i + shift, v);
  }
  return SparseMatrix<K>::from_columns(top.rows() + bottom.rows(), std::move(cols));
}

/// Kronecker product with row/column index (i, j) -> i * b.rows() + j.
template <class K>
SparseMatrix<K> kron(const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
  SparseMatrix<K> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      SparseVec<K> col;
      for (const auto& [ia, x] : a.column(ja)) {
        for (const auto& [ib, y] : b.column(jb)) {
          col.emplace_back(static_cast<std::uint32_t>(ia * b.rows() + ib), x * y);
        }
      }
      k.set_column(ja * b.cols() + jb, std::move(col));
    }
  }
  return k;
}

/// Incrementally maintained echelon basis of a subspace of K^dim.
///
/// With tracking enabled, every stored vector remembers its expression in
/// terms of the vectors passed to add(), which lets coordinates() express a
/// vector of the span in that generating set.
template <class K = Cyclotomic>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim, bool track = false)
      : dim_(dim), track_(track), pivot_slot_(dim, -1), buf_(dim), touched_(dim, 0) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  std::size_t generators_seen() const { return generators_; }

  /// Adds v; returns true when v was independent of the current span.
  bool add(const SparseVec<K>& v) {
    const std::size_t gen = generators_++;
    SparseVec<K> combo;
    if (track_) combo.emplace_back(static_cast<std::uint32_t>(gen), K(1));
    auto residual = reduce_impl(v, track_ ? &combo : nullptr);
    if (residual.empty()) return false;
    const std::uint32_t pivot = residual.front().first;
    const K inv = inverse(residual.front().second);
    residual = scaled(std::move(residual), inv);
    if (track_) combo = scaled(std::move(combo), inv);
    pivot_slot_[pivot] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(residual));
    combos_.push_back(std::move(combo));
    pivots_.push_back(pivot);
    return true;
  }

  /// v minus its projection along the stored pivots; zero iff v is in the span.
  SparseVec<K> reduce(const SparseVec<K>& v) const { return reduce_impl(v, nullptr); }

  bool contains(const SparseVec<K>& v) const { return reduce_impl(v, nullptr).empty(); }

  /// Coefficients of v over the generators passed to add() (tracking only).
  std::optional<SparseVec<K>> coordinates(const SparseVec<K>& v) const {
    if (!track_) throw std::logic_error("coordinates() requires a tracking EchelonBasis");
    SparseVec<K> combo;
    auto residual = reduce_impl(v, &combo);
    if (!residual.empty()) return std::nullopt;
    return scaled(std::move(combo), K(-1));
  }

  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  bool is_pivot(std::uint32_t i) const { return pivot_slot_[i] >= 0; }
  const std::vector<SparseVec<K>>& vectors() const { return rows_; }

 private:
  // Reduces v; when combo is given it accumulates -sum(alpha_p * combo_p),
  // so that v + sum(...) in generator terms equals the returned residual.
  SparseVec<K> reduce_impl(const SparseVec<K>& v, SparseVec<K>* combo) const {
    SparseVec<K> residual;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> touched_list;
    for (const auto& [i, x] : v) {
      if (i >= dim_) throw std::out_of_range("vector index exceeds ambient dimension");
      buf_[i] = x;
      touched_[i] = 1;
      touched_list.push_back(i);
      heap.push(i);
    }
    while (!heap.empty()) {
      const std::uint32_t p = heap.top();
      heap.pop();
      if (is_zero(buf_[p])) continue;
      const std::int64_t slot = pivot_slot_[p];
      if (slot < 0) {
        residual.emplace_back(p, buf_[p]);
        continue;
      }
      const K alpha = buf_[p];
      for (const auto& [i, x] : rows_[static_cast<std::size_t>(slot)]) {
        if (!touched_[i]) {
          touched_[i] = 1;
          touched_list.push_back(i);
          buf_[i] = K(0) - alpha * x;
          heap.push(i);
        } else {
          buf_[i] -= alpha * x;
        }
      }
      if (combo) *combo = axpy(*combo, K(0) - alpha, combos_[static_cast<std::size_t>(slot)]);
    }
    for (auto i : touched_list) {
      touched_[i] = 0;
      buf_[i] = K(0);
    }
    return residual;
  }

  std::size_t dim_;
  bool track_;
  std::size_t generators_ = 0;
  std::vector<std::int64_t> pivot_slot_;
  std::vector<SparseVec<K>> rows_;
  std::vector<SparseVec<K>> combos_;
  std::vector<std::uint32_t> pivots_;
  mutable std::vector<K> buf_;
  mutable std::vector<char> touched_;
};

template <class K = Cyclotomic>
struct ColumnSpace {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_columns;
  SparseMatrix<K> basis;
};

template <class K>
ColumnSpace<K> column_space(const SparseMatrix<K>& m) {
  EchelonBasis<K> eb(m.rows());
  ColumnSpace<K> cs;
  std::vector<SparseVec<K>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (eb.full()) break;
    if (eb.add(m.column(j))) {
      cs.pivot_columns.push_back(static_cast<std::uint32_t>(j));
      cols.push_back(m.column(j));
    }
  }
  cs.rank = eb.rank();
  cs.basis = SparseMatrix<K>::from_columns(m.rows(), std::move(cols));
  return cs;
}

template <class K>
std::size_t rank(const SparseMatrix<K>& m) {
  EchelonBasis<K> eb(m.rows());
  for (std::size_t j = 0; j < m.cols() && !eb.full(); ++j) eb.add(m.column(j));
  return eb.rank();
}

/// K^ambient modulo the span of a set of relation vectors.  Quotient
/// coordinates are the non-pivot coordinates of a fully reduced vector.
template <class K = Cyclotomic>
class QuotientSpace {
 public:
  explicit QuotientSpace(std::size_t ambient) : relations_(ambient) { finalize(); }

  QuotientSpace(std::size_t ambient, const std::vector<SparseVec<K>>& relations) : relations_(ambient) {
    for (const auto& r : relations) {
      if (relations_.full()) break;
      relations_.add(r);
    }
    finalize();
  }

  std::size_t ambient_dim() const { return relations_.dim(); }
  std::size_t dim() const { return free_.size(); }
  std::size_t relation_rank() const { return relations_.rank(); }
  const EchelonBasis<K>& relation_basis() const { return relations_; }

  SparseVec<K> project(const SparseVec<K>& v) const {
    auto r = relations_.reduce(v);
    for (auto& [i, x] : r) i = quotient_index_[i];
    return r;
  }

  /// A representative of the k-th quotient basis vector.
  SparseVec<K> lift(std::uint32_t k) const { return unit_vector<K>(free_[k]); }

  std::uint32_t free_coordinate(std::uint32_t k) const { return free_[k]; }

  /// Matrix of the projection, dim() x ambient_dim().
  SparseMatrix<K> projection_matrix() const {
    SparseMatrix<K> p(dim(), ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      p.set_column(j, project(unit_vector<K>(static_cast<std::uint32_t>(j))));
    }
    return p;
  }

 private:
  void finalize() {
    quotient_index_.assign(relations_.dim(), ~0u);
    free_.clear();
    for (std::uint32_t i = 0; i < relations_.dim(); ++i) {
      if (!relations_.is_pivot(i)) {
        quotient_index_[i] = static_cast<std::uint32_t>(free_.size());
        free_.push_back(i);
      }
    }
  }

  EchelonBasis<K> relations_;
  std::vector<std::uint32_t> free_;
  std::vector<std::uint32_t> quotient_index_;
};

/// The cokernel of m: its codomain modulo its column space.
template <class K>
QuotientSpace<K> cokernel(const SparseMatrix<K>& m) {
  return QuotientSpace<K>(m.rows(), m.columns());
}

}  // namespace fwsa
