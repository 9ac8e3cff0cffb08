#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bregman/legendre.hpp"

namespace bregman {

// Small dense row-major matrix with adjoint application; all the coupling
// operators in this library are desk-scale.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, std::vector<double> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols)
      throw std::invalid_argument("DenseMatrix: data size mismatch");
  }

  static DenseMatrix identity(std::size_t n) {
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 1.0;
    return {n, n, std::move(d)};
  }

  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  Vector apply(const Vector& x) const {
    if (x.size() != cols) throw std::invalid_argument("DenseMatrix::apply: size");
    Vector y(rows, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < cols; ++c) s += data[r * cols + c] * x[c];
      y[r] = s;
    }
    return y;
  }

  Vector apply_adjoint(const Vector& y) const {
    if (y.size() != rows)
      throw std::invalid_argument("DenseMatrix::apply_adjoint: size");
    Vector x(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r) s += data[r * cols + c] * y[r];
      x[c] = s;
    }
    return x;
  }
};

}  // namespace bregman
