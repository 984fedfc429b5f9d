#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hubness {

// On-disk element width. In memory every element is held as a double; a
// binary32 matrix holds only values that are exactly representable as float.
enum class DType : std::uint32_t {
  binary32 = 0,
  binary64 = 1,
};

std::size_t element_width(DType dtype);
std::string_view to_string(DType dtype);

// Row-major real matrix. Construction enforces the shape and finiteness
// invariants, so every DenseMatrix in circulation is valid.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  // Throws Error(data) on size mismatch or a non-finite element. With
  // DType::binary32 each value is rounded to the nearest float.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
              DType dtype = DType::binary64);

  static DenseMatrix zeros(std::size_t rows, std::size_t cols,
                           DType dtype = DType::binary64);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  DType dtype() const noexcept { return dtype_; }

  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  DType dtype_ = DType::binary64;
  std::vector<double> values_;
};

// Mutable staging buffer for building a matrix row by row before the
// invariants are checked once in DenseMatrix's constructor.
class MatrixBuilder {
 public:
  MatrixBuilder(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  std::span<double> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

  DenseMatrix build(DType dtype = DType::binary64) && {
    return DenseMatrix(rows_, cols_, std::move(values_), dtype);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

}  // namespace hubness
