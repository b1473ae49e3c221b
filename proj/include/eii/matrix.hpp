#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eii/field.hpp"

namespace eii {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <GaloisField F>
using FieldMatrix = Matrix<typename F::value_type>;

template <GaloisField F>
FieldMatrix<F> zeros(const F& field, std::size_t rows, std::size_t cols) {
  return FieldMatrix<F>(rows, cols, field.zero());
}

template <GaloisField F>
FieldMatrix<F> select_columns(const F& field, const FieldMatrix<F>& a,
                              std::span<const std::size_t> cols) {
  FieldMatrix<F> out = zeros(field, a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = a(r, cols[c]);
  }
  return out;
}

// In-place reduced row echelon form, pivoting only in the first pivot_cols columns.
// Returns the pivot column of each leading row.
template <GaloisField F>
std::vector<std::size_t> row_reduce(const F& field, FieldMatrix<F>& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && field.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const auto scale = field.inv(a(r, c));
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = field.mul(a(r, k), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || field.is_zero(a(i, c))) continue;
      const auto f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        a(i, k) = field.add(a(i, k), field.mul(f, a(r, k)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <GaloisField F>
std::size_t rank(const F& field, FieldMatrix<F> a) {
  return row_reduce(field, a, a.cols()).size();
}

// Unique solution X of A X = B, or nullopt when A lacks full column rank or
// the system is inconsistent.
template <GaloisField F>
std::optional<FieldMatrix<F>> solve(const F& field, const FieldMatrix<F>& a,
                                    const FieldMatrix<F>& b) {
  const std::size_t n = a.cols();
  FieldMatrix<F> aug = zeros(field, a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  const auto pivots = row_reduce(field, aug, n);
  if (pivots.size() < n) return std::nullopt;
  for (std::size_t r = n; r < aug.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (!field.is_zero(aug(r, n + c))) return std::nullopt;
    }
  }
  FieldMatrix<F> x = zeros(field, n, b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
  }
  return x;
}

// A nonzero kernel vector, or nullopt when the columns are independent.
template <GaloisField F>
std::optional<std::vector<typename F::value_type>> null_vector(const F& field, FieldMatrix<F> a) {
  const auto pivots = row_reduce(field, a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (const std::size_t c : pivots) is_pivot[c] = true;
  std::size_t free = a.cols();
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) {
      free = c;
      break;
    }
  }
  if (free == a.cols()) return std::nullopt;
  std::vector<typename F::value_type> v(a.cols(), field.zero());
  v[free] = field.one();
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = a(r, free);
  return v;
}

template <GaloisField F>
std::vector<typename F::value_type> multiply(const F& field, const FieldMatrix<F>& a,
                                             std::span<const typename F::value_type> v) {
  std::vector<typename F::value_type> out(a.rows(), field.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto acc = field.zero();
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!field.is_zero(v[c])) acc = field.add(acc, field.mul(a(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

// Incrementally maintained echelon basis of column vectors; used by searches
// that extend a column set one vector at a time.
template <GaloisField F>
class EchelonBasis {
 public:
  using value_type = typename F::value_type;

  EchelonBasis(const F& field, std::size_t dim) : field_(&field), dim_(dim) {}

  std::size_t size() const { return vectors_.size(); }

  // Reduces v against the basis; returns true and inserts it when independent.
  bool insert(std::vector<value_type> v) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      const auto& coeff = v[pivots_[i]];
      if (field_->is_zero(coeff)) continue;
      const auto f = coeff;
      for (std::size_t k = 0; k < dim_; ++k) {
        v[k] = field_->add(v[k], field_->mul(f, vectors_[i][k]));
      }
    }
    std::size_t p = 0;
    while (p < dim_ && field_->is_zero(v[p])) ++p;
    if (p == dim_) return false;
    const auto scale = field_->inv(v[p]);
    for (auto& x : v) x = field_->mul(x, scale);
    vectors_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  void pop() {
    vectors_.pop_back();
    pivots_.pop_back();
  }

 private:
  const F* field_;
  std::size_t dim_;
  std::vector<std::vector<value_type>> vectors_;
  std::vector<std::size_t> pivots_;
};

}  // namespace eii
