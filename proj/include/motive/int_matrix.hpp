#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "motive/checked.hpp"

namespace motive {

// Dense row-major integer matrix, sized for root-lattice computations.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  std::int64_t& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  IntMatrix multiply(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("IntMatrix::multiply: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const std::int64_t a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < rhs.cols_; ++j) {
          out.at(i, j) = checked_add(out.at(i, j), checked_mul(a, rhs.at(k, j)));
        }
      }
    }
    return out;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("IntMatrix::apply: dimension mismatch");
    std::vector<std::int64_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < cols_; ++j) acc = checked_add(acc, checked_mul(at(i, j), v[j]));
      out[i] = acc;
    }
    return out;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace motive
