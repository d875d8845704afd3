#pragma once

// Exact linear algebra over prime fields F_p and over the integers.
//
// Everything here is exact: residues are reduced modulo p after every
// operation, integer work uses arbitrary-precision integers. Zero-sized
// matrices are legal and behave as expected (rank 0, full kernel).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace itcalc {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime p <= 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A single element of F_p carrying its modulus.
struct FieldElem {
  Residue residue = 0;
  std::uint32_t modulus = 2;

  FieldElem() = default;
  FieldElem(std::int64_t value, std::uint32_t p);

  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  FieldElem inverse() const;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// Dense row-major matrix over F_p.
class Mat {
 public:
  Mat() : field_(2) {}
  Mat(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}
  Mat(std::size_t rows, std::size_t cols, PrimeField field, std::vector<Residue> data);

  static Mat identity(std::size_t n, PrimeField field);
  static Mat zero(std::size_t rows, std::size_t cols, PrimeField field) {
    return Mat(rows, cols, field);
  }
  /// Builds a matrix from signed integers, reducing modulo p.
  static Mat from_ints(std::size_t rows, std::size_t cols, PrimeField field,
                       std::span<const std::int64_t> values);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Mat from_columns(std::size_t rows, std::span<const Vec> columns, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Residue>& data() const noexcept { return data_; }

  Vec column(std::size_t c) const;
  bool is_zero() const noexcept;

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  Vec operator*(std::span<const Residue> v) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(Residue s) const;

  /// Columns [c0, c0 + n).
  Mat column_block(std::size_t c0, std::size_t n) const;
  Mat row_block(std::size_t r0, std::size_t n) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<Residue> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diagonal(std::span<const Mat> blocks, PrimeField field);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Mat m);

std::size_t rank(const Mat& m);
/// Basis of the right null space; each v satisfies m * v = 0.
std::vector<Vec> kernel_basis(const Mat& m);
/// Some x with m * x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Residue> b);
/// Solves m * X = b column by column.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& b);
std::optional<Mat> inverse(const Mat& m);
/// A basis of the column space, chosen among the columns of m.
Mat column_space(const Mat& m);
/// Extends the independent columns of `sub` by standard basis vectors to a
/// basis of F_p^rows; returns the added columns.
Mat complement_columns(const Mat& sub);

/// A growing subspace of F_p^n kept in reduced echelon form.
class IncrementalSpan {
 public:
  IncrementalSpan(std::size_t ambient, PrimeField field) : n_(ambient), field_(field) {}

  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  /// Remainder of v after elimination against the current basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; returns true iff the dimension grew.
  bool insert(const Vec& v);

 private:
  std::size_t n_;
  PrimeField field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMat from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over Q, computed by fraction-free (Bareiss) elimination.
std::size_t int_rank(const IntMat& m);
/// Integer basis of the left null space {c : c^T m = 0} over Q, each vector
/// scaled to primitive integer entries.
std::vector<std::vector<BigInt>> int_left_kernel(const IntMat& m);

}  // namespace itcalc
