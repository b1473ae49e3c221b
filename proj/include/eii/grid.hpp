#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace eii {

using Cell = std::pair<std::size_t, std::size_t>;

// m x n symbols plus an erasure mask; erased cells hold no trusted value.
template <class T>
class SymbolGrid {
 public:
  SymbolGrid() = default;
  SymbolGrid(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill), erased_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const T& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  T& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  std::span<const T> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }
  std::span<T> row(std::size_t r) { return {cells_.data() + r * cols_, cols_}; }

  bool erased(std::size_t r, std::size_t c) const { return erased_[r * cols_ + c] != 0; }
  void erase(std::size_t r, std::size_t c) { erased_[r * cols_ + c] = 1; }
  void set(std::size_t r, std::size_t c, T value) {
    cells_[r * cols_ + c] = std::move(value);
    erased_[r * cols_ + c] = 0;
  }

  std::vector<std::size_t> row_erasures(std::size_t r) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (erased(r, c)) out.push_back(c);
    }
    return out;
  }

  std::size_t row_erasure_count(std::size_t r) const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < cols_; ++c) n += erased(r, c);
    return n;
  }

  std::size_t erasure_count() const {
    std::size_t n = 0;
    for (const auto e : erased_) n += e;
    return n;
  }

  std::vector<Cell> erasures() const {
    std::vector<Cell> out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (erased(r, c)) out.emplace_back(r, c);
      }
    }
    return out;
  }

  SymbolGrid transposed() const {
    SymbolGrid out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.cells_.reserve(cells_.size());
    out.erased_.reserve(erased_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) {
        out.cells_.push_back(at(r, c));
        out.erased_.push_back(erased_[r * cols_ + c]);
      }
    }
    return out;
  }

  // Values under erasures are ignored.
  friend bool operator==(const SymbolGrid& a, const SymbolGrid& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.erased_ != b.erased_) return false;
    for (std::size_t i = 0; i < a.cells_.size(); ++i) {
      if (!a.erased_[i] && !(a.cells_[i] == b.cells_[i])) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
  std::vector<unsigned char> erased_;
};

template <class T>
SymbolGrid<T> transpose_grid(const SymbolGrid<T>& grid) {
  return grid.transposed();
}

enum class DecodeStatus { fully_corrected, partially_corrected, failed };

const char* status_name(DecodeStatus status) noexcept;

template <class T>
struct DecodeReport {
  SymbolGrid<T> grid;
  DecodeStatus status = DecodeStatus::failed;
  std::vector<std::size_t> corrected_rows;
  std::vector<Cell> residual;
  std::size_t passes = 0;
};

template <class T>
DecodeStatus status_for(std::size_t before, const std::vector<Cell>& residual) {
  if (residual.empty()) return DecodeStatus::fully_corrected;
  return residual.size() < before ? DecodeStatus::partially_corrected : DecodeStatus::failed;
}

}  // namespace eii
