#include "quiverlab/ratmatrix.hpp"

#include <algorithm>
#include <utility>

#include "quiverlab/errors.hpp"

namespace quiverlab {

RatMatrix RatMatrix::Identity(long rows, long cols) {
  RatMatrix m(rows, cols);
  for (long i = 0; i < std::min(rows, cols); ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (m_cols != o.m_rows) throw DomainError("matrix product shape mismatch");
  RatMatrix r(m_rows, o.m_cols);
  for (long i = 0; i < m_rows; ++i) {
    for (long k = 0; k < m_cols; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.m_cols; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  RatMatrix r = *this;
  r += o;
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  RatMatrix r = *this;
  r -= o;
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& scalar) const {
  RatMatrix r = *this;
  for (auto& x : r.m_data) x *= scalar;
  return r;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (m_rows != o.m_rows || m_cols != o.m_cols) throw DomainError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < m_data.size(); ++i) m_data[i] += o.m_data[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (m_rows != o.m_rows || m_cols != o.m_cols) throw DomainError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < m_data.size(); ++i) m_data[i] -= o.m_data[i];
  return *this;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (long i = 0; i < std::min(m_rows, m_cols); ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : m_data)
    if (x != 0) return false;
  return true;
}

long RatMatrix::rank() const {
  RatMatrix m = *this;
  long rank = 0;
  long row = 0;
  for (long col = 0; col < m_cols && row < m_rows; ++col) {
    long pivot = -1;
    for (long i = row; i < m_rows; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (long j = col; j < m_cols; ++j) std::swap(m(row, j), m(pivot, j));
    const Rat lead = m(row, col);
    for (long i = row + 1; i < m_rows; ++i) {
      if (m(i, col) == 0) continue;
      Rat factor = m(i, col) / lead;
      m(i, col) = 0;
      for (long j = col + 1; j < m_cols; ++j) m(i, j) -= factor * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace quiverlab
