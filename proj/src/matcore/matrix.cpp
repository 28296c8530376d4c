#include "numrad/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numrad/kernels.hpp"

namespace numrad {

std::string_view toString(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::UnequalBlocks: return "UnequalBlocks";
    case ErrorCode::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorCode::NotBlockShift: return "NotBlockShift";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

CMatrix CMatrix::fromRows(std::initializer_list<std::initializer_list<cplx>> rows, Field field) {
  std::vector<std::vector<cplx>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return fromRows(copy, field);
}

CMatrix CMatrix::fromRows(const std::vector<std::vector<cplx>>& rows, Field field) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::InvalidArgument, "matrix needs at least one row and one column");
  }
  CMatrix m(rows.size(), rows.front().size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw Error(ErrorCode::InvalidArgument, "ragged row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  m.validate();
  return m;
}

CMatrix CMatrix::identity(std::size_t n, Field field) {
  CMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d, Field field) {
  CMatrix m(d.size(), d.size(), field);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  m.validate();
  return m;
}

CMatrix CMatrix::withField(Field field) const {
  CMatrix copy = *this;
  copy.field_ = field;
  copy.validate();
  return copy;
}

void CMatrix::validate() const {
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
    }
  }
  if (field_ == Field::real && !hasRealEntries()) {
    throw Error(ErrorCode::NotReal, "real-tagged matrix has a nonzero imaginary part");
  }
}

bool CMatrix::hasRealEntries() const noexcept {
  for (const cplx& z : data_) {
    if (z.imag() != 0.0) return false;
  }
  return true;
}

namespace {

void requireSameShape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  requireSameShape(a, b);
  CMatrix r(a.rows(), a.cols(), combine(a.field(), b.field()));
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = a.data()[k] + b.data()[k];
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  requireSameShape(a, b);
  CMatrix r(a.rows(), a.cols(), combine(a.field(), b.field()));
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = a.data()[k] - b.data()[k];
  return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ in product");
  }
  const auto& k = kernels::active();
  CMatrix r(a.rows(), b.cols(), combine(a.field(), b.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx* out = r.row(i).data();
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const cplx s = a(i, l);
      if (s != cplx{}) k.axpy(out, s, b.row(l).data(), b.cols());
    }
  }
  return r;
}

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix r(a.rows(), a.cols(), s.imag() == 0.0 ? a.field() : Field::complex);
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = s * a.data()[k];
  return r;
}

CMatrix operator*(double s, const CMatrix& a) {
  CMatrix r(a.rows(), a.cols(), a.field());
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = s * a.data()[k];
  return r;
}

std::vector<cplx> apply(const CMatrix& m, std::span<const cplx> x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length");
  const auto& k = kernels::active();
  std::vector<cplx> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = k.dotu(m.row(i).data(), x.data(), m.cols());
  return y;
}

cplx quadraticForm(const CMatrix& m, std::span<const cplx> x) {
  if (!m.isSquare()) throw Error(ErrorCode::NotSquare, "quadratic form");
  const std::vector<cplx> mx = apply(m, x);
  return kernels::active().dotc(x.data(), mx.data(), x.size());
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "inner product");
  // <x, y> = sum x_i conj(y_i) = dotc(y, x)
  return kernels::active().dotc(y.data(), x.data(), x.size());
}

double norm2(std::span<const cplx> x) {
  return std::sqrt(
      kernels::active().sumsq(reinterpret_cast<const double*>(x.data()), 2 * x.size()));
}

double frobeniusNorm(const CMatrix& m) {
  return std::sqrt(
      kernels::active().sumsq(reinterpret_cast<const double*>(m.data().data()), 2 * m.size()));
}

double maxAbs(const CMatrix& m) {
  double r = 0.0;
  for (const cplx& z : m.data()) r = std::max(r, std::abs(z));
  return r;
}

CMatrix outer(std::span<const cplx> x, std::span<const cplx> y, Field field) {
  CMatrix m(x.size(), y.size(), field);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  }
  m.validate();
  return m;
}

double hermitianDefect(const CMatrix& m) {
  if (!m.isSquare()) throw Error(ErrorCode::NotSquare, "hermitian defect");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return d;
}

}  // namespace numrad
