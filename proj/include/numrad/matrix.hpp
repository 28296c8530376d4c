#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "numrad/error.hpp"

namespace numrad {

using cplx = std::complex<double>;

enum class Field { real, complex };

/// Dense row-major matrix over R or C. Entries are always stored as complex
/// pairs; a real-tagged matrix has every imaginary part exactly zero.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols, Field field = Field::complex);

  /// Row-wise literal; tag defaults to complex.
  static CMatrix fromRows(std::initializer_list<std::initializer_list<cplx>> rows,
                          Field field = Field::complex);
  static CMatrix fromRows(const std::vector<std::vector<cplx>>& rows,
                          Field field = Field::complex);
  static CMatrix identity(std::size_t n, Field field = Field::complex);
  static CMatrix diagonal(std::span<const cplx> d, Field field = Field::complex);
  static CMatrix zeros(std::size_t rows, std::size_t cols, Field field = Field::complex) {
    return CMatrix(rows, cols, field);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool isSquare() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }
  Field field() const noexcept { return field_; }
  bool isReal() const noexcept { return field_ == Field::real; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  /// Copy with a different tag. Retagging as real throws NotReal unless every
  /// imaginary part is exactly zero.
  CMatrix withField(Field field) const;

  /// Checks finiteness and the real-tag invariant; throws InvalidArgument/NotReal.
  void validate() const;

  /// True when every imaginary part is exactly zero (regardless of tag).
  bool hasRealEntries() const noexcept;

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::complex;
  std::vector<cplx> data_;
};

/// Resulting tag of an arithmetic combination of two operands.
inline Field combine(Field a, Field b) {
  return (a == Field::real && b == Field::real) ? Field::real : Field::complex;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);

/// y = M x
std::vector<cplx> apply(const CMatrix& m, std::span<const cplx> x);

/// <Mx, x> = x^* M x
cplx quadraticForm(const CMatrix& m, std::span<const cplx> x);

/// <x, y> = sum x_i conj(y_i) (linear in the first argument).
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm2(std::span<const cplx> x);

double frobeniusNorm(const CMatrix& m);
double maxAbs(const CMatrix& m);

/// x (x) y: the rank-one map z -> <z, y> x, i.e. the matrix x y^*.
CMatrix outer(std::span<const cplx> x, std::span<const cplx> y, Field field = Field::complex);

/// Largest |M(i,j) - conj(M(j,i))|.
double hermitianDefect(const CMatrix& m);

}  // namespace numrad
