#include "diracwm/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace diracwm {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& block, const Rational& scale) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw std::out_of_range("block does not fit");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) {
      const Rational& v = block(r, c);
      if (v != 0) (*this)(r0 + r, c0 + c) += scale * v;
    }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) p(i, j) += x * b(k, j);
    }
  return p;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << "]";
  return os.str();
}

Echelon echelon(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Clear denominators row by row, then run Bareiss over Z.
  std::vector<std::vector<mpz_class>> z(m, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = a(r, c);
      z[r][c] = v.get_num() * (l / v.get_den());
    }
  }
  Echelon e;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && z[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(z[p], z[row]);
    for (std::size_t r = row + 1; r < m; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        mpz_class t = z[row][col] * z[r][c] - z[r][col] * z[row][c];
        mpz_divexact(z[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[r][col] = 0;
    }
    prev = z[row][col];
    e.pivots.push_back(col);
    ++row;
  }
  // Back-substitute over Q to the reduced form.
  const std::size_t rk = e.pivots.size();
  Matrix red(rk, n);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < n; ++c) red(r, c) = Rational(z[r][c]);
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = e.pivots[r];
    Rational inv = 1 / red(r, pc);
    for (std::size_t c = pc; c < n; ++c) red(r, c) *= inv;
    for (std::size_t u = 0; u < r; ++u) {
      Rational f = red(u, pc);
      if (f == 0) continue;
      for (std::size_t c = pc; c < n; ++c) red(u, c) -= f * red(r, c);
    }
  }
  e.reduced = std::move(red);
  return e;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  return echelon(a).pivots.size();
}

Matrix nullspace(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  Echelon e = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(r, free[j]);
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Echelon e = echelon(hstack(a, b));
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;  // inconsistent
  }
  if (e.pivots.size() < n) {
    // Require full column rank so the solution is unique.
    for (std::size_t r = 0; r < n; ++r)
      if (r >= e.pivots.size() || e.pivots[r] != r) throw std::invalid_argument("solve: matrix lacks full column rank");
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, n + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.rows()));
}

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix s(a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) s(r, j) = a(r, cols[j]);
  return s;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix h(a.rows(), a.cols() + b.cols());
  h.add_block(0, 0, a);
  h.add_block(0, a.cols(), b);
  return h;
}

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
  return rank(a) + rank(b) - rank(hstack(a, b));
}

}  // namespace diracwm
