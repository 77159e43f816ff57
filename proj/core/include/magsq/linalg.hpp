#pragma once

#include <cstddef>
#include <vector>

#include "magsq/tolerances.hpp"

namespace magsq {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double max_abs_diff(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, double s);

// Small dense real matrix, row-major. Sized for n <= 12; nothing clever.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols);
  static RealMatrix identity(std::size_t n);
  static RealMatrix diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

  RealMatrix operator*(const RealMatrix& other) const;
  Vec operator*(const Vec& v) const;
  RealMatrix operator+(const RealMatrix& other) const;
  RealMatrix operator-(const RealMatrix& other) const;
  RealMatrix operator*(double s) const;
  RealMatrix operator-() const { return *this * -1.0; }

  RealMatrix transposed() const;
  double trace() const;
  // Gaussian elimination with partial pivoting; exact enough for n <= 12.
  double det() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
bool approx_equal(const RealMatrix& a, const RealMatrix& b, double tol = kEqTol);

}  // namespace magsq
