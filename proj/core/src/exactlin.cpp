#include "itcalc/exactlin.hpp"

#include "itcalc/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace itcalc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidInput, "field characteristic " + std::to_string(p) +
                                             " is not a prime <= 2^31");
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw Error(ErrorKind::InvalidInput, "division by zero in F_p");
  // extended Euclid on signed 64-bit values
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return reduce(s0);
}

FieldElem::FieldElem(std::int64_t value, std::uint32_t p)
    : residue(PrimeField(p).reduce(value)), modulus(p) {}

namespace {

void require_same_modulus(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw Error(ErrorKind::InvalidInput, "mixed field characteristics");
}

void require_same_field(const Mat& a, const Mat& b) {
  require_same_modulus(a.modulus(), b.modulus());
}

}  // namespace

FieldElem operator+(FieldElem a, FieldElem b) {
  require_same_modulus(a.modulus, b.modulus);
  FieldElem r;
  r.modulus = a.modulus;
  r.residue = PrimeField(a.modulus).add(a.residue, b.residue);
  return r;
}

FieldElem operator-(FieldElem a, FieldElem b) {
  require_same_modulus(a.modulus, b.modulus);
  FieldElem r;
  r.modulus = a.modulus;
  r.residue = PrimeField(a.modulus).sub(a.residue, b.residue);
  return r;
}

FieldElem operator*(FieldElem a, FieldElem b) {
  require_same_modulus(a.modulus, b.modulus);
  FieldElem r;
  r.modulus = a.modulus;
  r.residue = PrimeField(a.modulus).mul(a.residue, b.residue);
  return r;
}

FieldElem FieldElem::inverse() const {
  FieldElem r;
  r.modulus = modulus;
  r.residue = PrimeField(modulus).inv(residue);
  return r;
}

Mat::Mat(std::size_t rows, std::size_t cols, PrimeField field, std::vector<Residue> data)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::InvalidInput, "matrix entry count does not match its shape");
  }
  for (Residue r : data_) {
    if (r >= field_.modulus()) throw Error(ErrorKind::InvalidInput, "matrix entry out of range");
  }
}

Mat Mat::identity(std::size_t n, PrimeField field) {
  Mat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, PrimeField field,
                   std::span<const std::int64_t> values) {
  if (values.size() != rows * cols) {
    throw Error(ErrorKind::InvalidInput, "matrix entry count does not match its shape");
  }
  Mat m(rows, cols, field);
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = field.reduce(values[i]);
  return m;
}

Mat Mat::from_columns(std::size_t rows, std::span<const Vec> columns, PrimeField field) {
  Mat m(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::InvalidInput, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidInput, "matrix product shape mismatch");
  Mat out(rows_, rhs.cols_, field_);
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Residue* row = &rhs.data_[k * rhs.cols_];
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * row[j]) % p;
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j]);
  }
  return out;
}

Vec Mat::operator*(std::span<const Residue> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidInput, "matrix-vector shape mismatch");
  Vec out(rows_, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{(*this)(i, k)} * v[k]) % p;
    out[i] = static_cast<Residue>(acc);
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidInput, "matrix sum shape mismatch");
  Mat out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidInput, "matrix difference shape mismatch");
  Mat out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::scaled(Residue s) const {
  Mat out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Mat Mat::column_block(std::size_t c0, std::size_t n) const {
  Mat out(rows_, n, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = (*this)(r, c0 + c);
  return out;
}

Mat Mat::row_block(std::size_t r0, std::size_t n) const {
  Mat out(n, cols_, field_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols_), n * cols_, out.data_.begin());
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidInput, "hstack row mismatch");
  Mat out(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw Error(ErrorKind::InvalidInput, "vstack column mismatch");
  std::vector<Residue> data(a.data());
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Mat(a.rows() + b.rows(), a.cols(), a.field(), std::move(data));
}

Mat block_diagonal(std::span<const Mat> blocks, PrimeField field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat out(rows, cols, field);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Echelon row_reduce(Mat m) {
  const PrimeField& f = m.field();
  const std::uint64_t p = f.modulus();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    const Residue scale = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Residue factor = m(r, col);
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = static_cast<Residue>((m(r, c) + neg * m(row, c)) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_reduce(m).pivots.size();
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  const PrimeField& f = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::InvalidInput, "right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
  return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
  require_same_field(m, b);
  if (b.rows() != m.rows()) throw Error(ErrorKind::InvalidInput, "right-hand side row mismatch");
  const auto ech = row_reduce(hstack(m, b));
  for (auto c : ech.pivots) {
    if (c >= m.cols()) return std::nullopt;
  }
  Mat x(m.cols(), b.cols(), m.field());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(ech.pivots[i], j) = ech.reduced(i, m.cols() + j);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_matrix(m, Mat::identity(m.rows(), m.field()));
}

Mat column_space(const Mat& m) {
  const auto ech = row_reduce(m);
  Mat out(m.rows(), ech.pivots.size(), m.field());
  for (std::size_t j = 0; j < ech.pivots.size(); ++j)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = m(r, ech.pivots[j]);
  return out;
}

Mat complement_columns(const Mat& sub) {
  const std::size_t n = sub.rows();
  const auto ech = row_reduce(hstack(sub, Mat::identity(n, sub.field())));
  std::vector<std::size_t> added;
  for (auto c : ech.pivots) {
    if (c >= sub.cols()) added.push_back(c - sub.cols());
  }
  Mat out(n, added.size(), sub.field());
  for (std::size_t j = 0; j < added.size(); ++j) out(added[j], j) = 1;
  return out;
}

Vec IncrementalSpan::reduce(Vec v) const {
  if (v.size() != n_) throw Error(ErrorKind::InvalidInput, "vector length mismatch");
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue factor = v[pivots_[i]];
    if (factor == 0) continue;
    const std::uint64_t neg = p - factor;
    const Vec& row = rows_[i];
    for (std::size_t c = 0; c < n_; ++c) {
      if (row[c] != 0) v[c] = static_cast<Residue>((v[c] + neg * row[c]) % p);
    }
  }
  return v;
}

bool IncrementalSpan::contains(const Vec& v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool IncrementalSpan::insert(const Vec& v) {
  Vec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Residue x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - r.begin());
  const Residue scale = field_.inv(r[piv]);
  for (auto& x : r) x = field_.mul(x, scale);
  // keep existing rows reduced at the new pivot
  const std::uint64_t p = field_.modulus();
  for (auto& row : rows_) {
    const Residue factor = row[piv];
    if (factor == 0) continue;
    const std::uint64_t neg = p - factor;
    for (std::size_t c = piv; c < n_; ++c) {
      if (r[c] != 0) row[c] = static_cast<Residue>((row[c] + neg * r[c]) % p);
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

IntMat IntMat::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidInput, "integer row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::size_t int_rank(const IntMat& input) {
  IntMat m = input;
  std::size_t row = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    // Bareiss step: every division below is exact.
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        m(r, c) = (m(row, col) * m(r, c) - m(r, col) * m(row, c)) / prev;
      }
      m(r, col) = 0;
    }
    prev = m(row, col);
    ++row;
  }
  return row;
}

std::vector<std::vector<BigInt>> int_left_kernel(const IntMat& m) {
  // Left kernel of m = right kernel of m^T, via rational RREF.
  const std::size_t rows = m.cols();
  const std::size_t cols = m.rows();
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = BigRational(m(c, r));

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const BigRational lead = a[row][col];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const BigRational factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    BigInt lcm = 1;
    for (const auto& x : v) {
      const BigInt d = boost::multiprecision::denominator(x);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<BigInt> iv(cols);
    BigInt g = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      const BigRational scaled = v[i] * BigRational(lcm);
      iv[i] = boost::multiprecision::numerator(scaled);
      g = boost::multiprecision::gcd(g, iv[i]);
    }
    if (g > 1) {
      for (auto& x : iv) x /= g;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace itcalc
