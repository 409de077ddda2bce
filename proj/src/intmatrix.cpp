#include "tlg/intmatrix.hpp"

#include <utility>

#include "tlg/detail/cursor.hpp"

namespace tlg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column(const std::vector<BigInt>& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_),
          data_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<BigInt> IntMatrix::col(std::size_t j) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix dimensions do not match");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  }
  return out;
}

std::vector<BigInt> IntMatrix::operator*(const std::vector<BigInt>& v) const {
  if (cols_ != v.size()) throw DomainError("matrix and vector dimensions do not match");
  std::vector<BigInt> out(rows_, BigInt(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) out[i] += at(i, k) * v[k];
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimensions do not match");
  IntMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw DomainError("row counts differ");
  IntMatrix out(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
  }
  return out;
}

BigInt IntMatrix::determinant() const {
  if (!is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += at(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

IntMatrix IntMatrix::parse(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<std::vector<BigInt>> rows;
  cur.expect('[');
  do {
    cur.expect('[');
    std::vector<BigInt> row;
    do {
      cur.skip_ws();
      bool neg = cur.accept('-');
      std::string d = cur.digits();
      BigInt v(d);
      row.push_back(neg ? BigInt(-v) : v);
    } while (cur.accept(','));
    cur.expect(']');
    if (!rows.empty() && row.size() != rows[0].size()) cur.fail("ragged matrix rows");
    rows.push_back(std::move(row));
  } while (cur.accept(','));
  cur.expect(']');
  cur.expect_end();
  return from_rows(rows);
}

IntMatrix IntMatrix::random_unimodular(std::size_t n, std::size_t steps, std::mt19937_64& rng) {
  IntMatrix m = identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2), kind(0, 3);
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0:
        for (std::size_t c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
        break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
        break;
      default:
        if (i != j) {
          int q = coef(rng);
          for (std::size_t c = 0; c < n; ++c) m.at(i, c) += q * m.at(j, c);
        }
        break;
    }
  }
  return m;
}

namespace {

// Row and column operations applied simultaneously to S and the transforms.
struct SnfState {
  IntMatrix S, U, Uinv, V, Vinv;

  // row_i -= q * row_t
  void row_sub(std::size_t i, std::size_t t, const BigInt& q) {
    for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) -= q * S.at(t, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) -= q * U.at(t, c);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, t) += q * Uinv.at(r, i);
  }
  void row_swap(std::size_t i, std::size_t t) {
    if (i == t) return;
    for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S.at(i, c), S.at(t, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(t, c));
    for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, t));
  }
  void row_negate(std::size_t t) {
    for (std::size_t c = 0; c < S.cols(); ++c) S.at(t, c) = -S.at(t, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U.at(t, c) = -U.at(t, c);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, t) = -Uinv.at(r, t);
  }
  // col_j -= q * col_t
  void col_sub(std::size_t j, std::size_t t, const BigInt& q) {
    for (std::size_t r = 0; r < S.rows(); ++r) S.at(r, j) -= q * S.at(r, t);
    for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, j) -= q * V.at(r, t);
    for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv.at(t, c) += q * Vinv.at(j, c);
  }
  void col_swap(std::size_t j, std::size_t t) {
    if (j == t) return;
    for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S.at(r, j), S.at(r, t));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, j), V.at(r, t));
    for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(j, c), Vinv.at(t, c));
  }
};

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SnfState st{m, IntMatrix::identity(R), IntMatrix::identity(R), IntMatrix::identity(C),
              IntMatrix::identity(C)};
  IntMatrix& S = st.S;
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i) {
      for (std::size_t j = t; j < C; ++j) {
        if (S.at(i, j) != 0 && (pi == R || abs(S.at(i, j)) < abs(S.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == R) break;
    st.row_swap(pi, t);
    st.col_swap(pj, t);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (S.at(i, t) == 0) continue;
        st.row_sub(i, t, tdiv(S.at(i, t), S.at(t, t)));
        if (S.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (S.at(t, j) == 0) continue;
        st.col_sub(j, t, tdiv(S.at(t, j), S.at(t, t)));
        if (S.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot sits in row or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (S.at(i, t) != 0 && abs(S.at(i, t)) < abs(S.at(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < C; ++j) {
          if (S.at(t, j) != 0 && abs(S.at(t, j)) < abs(S.at(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        st.row_swap(bi, t);
        st.col_swap(bj, t);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (S.at(i, j) % S.at(t, t) != 0) {
            st.row_sub(t, i, BigInt(-1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (S.at(t, t) < 0) st.row_negate(t);
  }
  SmithForm out;
  out.rank = t;
  for (std::size_t k = 0; k < t; ++k) out.diagonal.push_back(S.at(k, k));
  out.S = std::move(st.S);
  out.U = std::move(st.U);
  out.Uinv = std::move(st.Uinv);
  out.V = std::move(st.V);
  out.Vinv = std::move(st.Vinv);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square() || abs(m.determinant()) != 1) throw DomainError("matrix is not unimodular");
  // U M V = I, so M^-1 = V U.
  SmithForm f = smith_normal_form(m);
  return f.V * f.U;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  IntMatrix out(m.cols(), m.cols() - f.rank);
  for (std::size_t j = f.rank; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, j - f.rank) = f.V.at(i, j);
  }
  return out;
}

}  // namespace tlg
