#include "hubness/matrix.hpp"

#include <cmath>
#include <string>

#include "hubness/error.hpp"

namespace hubness {

std::size_t element_width(DType dtype) { return dtype == DType::binary32 ? 4 : 8; }

std::string_view to_string(DType dtype) {
  return dtype == DType::binary32 ? "binary32" : "binary64";
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                         DType dtype)
    : rows_(rows), cols_(cols), dtype_(dtype), values_(std::move(values)) {
  if (cols != 0 && rows > values_.max_size() / cols) {
    throw_data("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) +
               " overflows");
  }
  if (values_.size() != rows * cols) {
    throw_data("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
               " needs " + std::to_string(rows * cols) + " values, got " +
               std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double& v = values_[i];
    if (dtype == DType::binary32) v = static_cast<double>(static_cast<float>(v));
    if (!std::isfinite(v)) {
      throw_data("non-finite element at row " + std::to_string(i / cols) + ", column " +
                 std::to_string(i % cols));
    }
  }
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols, DType dtype) {
  return DenseMatrix(rows, cols, std::vector<double>(rows * cols, 0.0), dtype);
}

}  // namespace hubness
