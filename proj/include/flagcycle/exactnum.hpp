#pragma once

// Exact arithmetic over the Gaussian rationals Q[i] and dense matrices over
// them. Ranks and determinants go through fraction-free (Bareiss) elimination
// over the Gaussian integers Z[i]; SpanBuilder offers an incremental,
// field-based echelon for rank profiles.

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagcycle/error.hpp"

namespace flagcycle {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses the canonical form written by str(): "0", "-3/4", "i", "-2i",
  /// "1/2-3/5i". A leading '+' and redundant zero parts are accepted.
  static GaussianRational parse(std::string_view text);

  /// Canonical form "a/b+c/di" with zero parts omitted and unit imaginary
  /// coefficients written as "i" / "-i".
  std::string str() const;

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

namespace detail {

inline mpq_class parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] { throw parse_error("invalid Gaussian rational '" + std::string(whole) + "'"); };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool digits = false;
  bool slash = false;
  bool denom_digits = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const char c = text[k];
    if (c >= '0' && c <= '9') {
      (slash ? denom_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      fail();
    }
  }
  if (!digits || (slash && !denom_digits)) fail();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail();
  if (sgn(q.get_den()) == 0) fail();
  q.canonicalize();
  return q;
}

inline std::string imaginary_str(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "i";
}

}  // namespace detail

inline GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw parse_error("empty Gaussian rational");
  if (text.back() != 'i') return {detail::parse_rational(text, whole), mpq_class(0)};

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  mpq_class im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = detail::parse_rational(im_text, whole);
  }
  mpq_class re = re_text.empty() ? mpq_class(0) : detail::parse_rational(re_text, whole);
  return {std::move(re), std::move(im)};
}

inline std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return detail::imaginary_str(im_);
  std::string out = re_.get_str();
  if (sgn(im_) > 0) out += '+';
  return out + detail::imaginary_str(im_);
}

enum class Form { bilinear, hermitian };

/// Dense row-major matrix over Q[i]. Column vectors are the usual carrier of
/// subspace bases.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != c) throw std::invalid_argument("ExactMatrix: ragged rows");
      for (std::size_t k = 0; k < c; ++k) m(r, k) = rows[r][k];
    }
    return m;
  }

  static ExactMatrix from_columns(const std::vector<std::vector<GaussianRational>>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<GaussianRational> column(std::size_t c) const {
    std::vector<GaussianRational> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  /// The first k columns.
  ExactMatrix leading_columns(std::size_t k) const {
    if (k > cols_) throw std::invalid_argument("ExactMatrix: too many columns requested");
    ExactMatrix m(rows_, k);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < k; ++c) m(r, c) = (*this)(r, c);
    return m;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  ExactMatrix conjugate() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
    return m;
  }

  bool is_real() const {
    for (const auto& z : data_)
      if (!z.is_real()) return false;
    return true;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: product dimension mismatch");
    ExactMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
      }
    return p;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// [A | B]
inline ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  ExactMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

inline ExactMatrix conjugate(const ExactMatrix& m) { return m.conjugate(); }

/// Matrix of pairwise form values between the columns of A and the columns of
/// B: A^t B for the bilinear form b, conj(A)^t B for the Hermitian form h.
inline ExactMatrix gram(const ExactMatrix& a, const ExactMatrix& b, Form form) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("gram: operands live in different ambient dimensions");
  const ExactMatrix left = form == Form::bilinear ? a.transpose() : a.conjugate().transpose();
  return left * b;
}

namespace detail {

struct GaussInt {
  mpz_class re;
  mpz_class im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// a*b - c*d
inline GaussInt cross(const GaussInt& a, const GaussInt& b, const GaussInt& c, const GaussInt& d) {
  return {a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im),
          a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re)};
}

// Division known to be exact in Z[i].
inline void divexact(GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  mpz_divexact(a.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(a.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
}

struct IntegralRows {
  std::vector<std::vector<GaussInt>> rows;
  mpz_class scale = 1;  // product of the per-row multipliers
};

// Clears denominators row by row; rank is unchanged and the determinant is
// multiplied by `scale`.
inline IntegralRows to_integral(const ExactMatrix& m) {
  IntegralRows out;
  out.rows.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).real().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).imag().get_den_mpz_t());
    }
    out.scale *= l;
    auto& row = out.rows[r];
    row.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& z = m(r, c);
      row.push_back({z.real().get_num() * (l / z.real().get_den()), z.imag().get_num() * (l / z.imag().get_den())});
    }
  }
  return out;
}

struct BareissOutcome {
  std::size_t rank = 0;
  bool odd_swaps = false;
  GaussInt last_pivot{1, 0};
};

// Fraction-free elimination with row pivoting. Columns without a pivot are
// skipped; every division is exact by Sylvester's identity.
inline BareissOutcome bareiss(std::vector<std::vector<GaussInt>>& a, std::size_t cols) {
  BareissOutcome out;
  GaussInt prev{1, 0};
  const std::size_t rows = a.size();
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t p = k;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != k) {
      std::swap(a[p], a[k]);
      out.odd_swaps = !out.odd_swaps;
    }
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = cross(a[k][c], a[r][j], a[r][c], a[k][j]);
        divexact(a[r][j], prev);
      }
      a[r][c] = GaussInt{0, 0};
    }
    prev = a[k][c];
    ++k;
  }
  out.rank = k;
  out.last_pivot = prev;
  return out;
}

}  // namespace detail

/// Exact rank by fraction-free elimination over Z[i].
inline std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto integral = detail::to_integral(m);
  return detail::bareiss(integral.rows, m.cols()).rank;
}

inline ExactMatrix transpose(const ExactMatrix& m) { return m.transpose(); }

inline GaussianRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  auto integral = detail::to_integral(m);
  const auto outcome = detail::bareiss(integral.rows, m.cols());
  if (outcome.rank < m.rows()) return 0;
  mpq_class re(outcome.last_pivot.re, integral.scale);
  mpq_class im(outcome.last_pivot.im, integral.scale);
  GaussianRational det(std::move(re), std::move(im));
  return outcome.odd_swaps ? -det : det;
}

/// Incremental column echelon over Q[i]: feed vectors one at a time and read
/// the rank of everything fed so far. Stored vectors have a unit entry at
/// their pivot and zeros at all earlier pivots.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }

  /// Returns true iff v is independent of the vectors added before.
  bool add(std::vector<GaussianRational> v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: vector of wrong length");
    for (std::size_t t = 0; t < basis_.size(); ++t) {
      const std::size_t p = pivots_[t];
      if (v[p].is_zero()) continue;
      const GaussianRational f = v[p];
      const auto& b = basis_[t];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!b[k].is_zero()) v[k] -= f * b[k];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    const GaussianRational lead = v[p];
    for (std::size_t k = p; k < dim_; ++k)
      if (!v[k].is_zero()) v[k] /= lead;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  void add_columns(const ExactMatrix& m, std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) add(m.column(c));
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<GaussianRational>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace flagcycle
