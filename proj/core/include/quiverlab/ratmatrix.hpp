#ifndef QUIVERLAB_RATMATRIX_HPP
#define QUIVERLAB_RATMATRIX_HPP

#include "quiverlab/numeric.hpp"

namespace quiverlab {

/// Dense matrix over exact rationals with the handful of operations the
/// moment lab needs. The interface mirrors the Eigen calls used in the
/// generic code paths (Zero, Identity, rows, cols, operator(), trace).
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(long rows, long cols) : m_rows(rows), m_cols(cols), m_data(rows * cols, Rat(0)) {}

  static RatMatrix Zero(long rows, long cols) { return RatMatrix(rows, cols); }
  static RatMatrix Identity(long rows, long cols);

  long rows() const { return m_rows; }
  long cols() const { return m_cols; }

  Rat& operator()(long i, long j) { return m_data[i * m_cols + j]; }
  const Rat& operator()(long i, long j) const { return m_data[i * m_cols + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& scalar) const;
  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);

  Rat trace() const;
  bool is_zero() const;

  /// Exact rank by fraction-preserving Gaussian elimination.
  long rank() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  long m_rows = 0;
  long m_cols = 0;
  std::vector<Rat> m_data;
};

}  // namespace quiverlab

#endif
