#include "valtree/mat.hpp"

#include <unordered_map>

#include "valtree/error.hpp"

namespace valtree {

Mat::Mat(Field field, std::size_t n, std::vector<FieldElem> entries)
    : n_(n), field_(std::move(field)), a_(std::move(entries)) {
  if (n_ == 0) raise(Errc::dimension_mismatch, "matrix dimension must be at least 1");
  if (a_.size() != n_ * n_) raise(Errc::dimension_mismatch, "entry count does not match n^2");
  for (auto& e : a_) e = field_.coerce(e);
}

Mat Mat::identity(const Field& field, std::size_t n) {
  std::vector<FieldElem> e(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = field.one();
  return Mat(field, n, std::move(e));
}

Mat Mat::diagonal(const Field& field, const std::vector<FieldElem>& diag) {
  const std::size_t n = diag.size();
  std::vector<FieldElem> e(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Mat(field, n, std::move(e));
}

Mat Mat::from_rows(const Field& field, const std::vector<std::vector<FieldElem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<FieldElem> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) raise(Errc::dimension_mismatch, "matrix rows must have length n");
    e.insert(e.end(), r.begin(), r.end());
  }
  return Mat(field, n, std::move(e));
}

Mat Mat::from_literals(const Field& field, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<FieldElem>> parsed;
  for (const auto& r : rows) {
    auto& out = parsed.emplace_back();
    for (const auto& lit : r) out.push_back(parse_literal(lit, field));
  }
  return from_rows(field, parsed);
}

Mat Mat::elementary(const Field& field, std::size_t n, std::size_t row, std::size_t col,
                    const FieldElem& value) {
  Mat m = identity(field, n);
  m.a_[row * n + col] = field.coerce(m.a_[row * n + col] + value);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (n_ != o.n_) raise(Errc::dimension_mismatch, "matrix product of different sizes");
  std::vector<FieldElem> out(n_ * n_, field_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const FieldElem& aik = a_[i * n_ + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const FieldElem& bkj = o.a_[k * n_ + j];
        if (bkj.is_zero()) continue;
        out[i * n_ + j] += aik * bkj;
      }
    }
  }
  return Mat(field_, n_, std::move(out));
}

Mat Mat::operator+(const Mat& o) const {
  if (n_ != o.n_) raise(Errc::dimension_mismatch, "matrix sum of different sizes");
  std::vector<FieldElem> out(a_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.a_[i];
  return Mat(field_, n_, std::move(out));
}

Mat Mat::operator-(const Mat& o) const {
  if (n_ != o.n_) raise(Errc::dimension_mismatch, "matrix difference of different sizes");
  std::vector<FieldElem> out(a_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.a_[i];
  return Mat(field_, n_, std::move(out));
}

Mat Mat::scaled(const FieldElem& s) const {
  std::vector<FieldElem> out(a_);
  for (auto& e : out) e *= s;
  return Mat(field_, n_, std::move(out));
}

Mat Mat::transpose() const {
  std::vector<FieldElem> out(a_.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[j * n_ + i] = a_[i * n_ + j];
  return Mat(field_, n_, std::move(out));
}

Mat Mat::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  const std::size_t k = rows.size();
  if (cols.size() != k) raise(Errc::dimension_mismatch, "minor needs as many rows as columns");
  std::vector<FieldElem> out;
  out.reserve(k * k);
  for (auto r : rows)
    for (auto c : cols) out.push_back(a_[r * n_ + c]);
  return Mat(field_, k, std::move(out));
}

FieldElem Mat::det() const {
  if (field_.kind() == FieldKind::multipoly) return det_by_expansion(*this);
  std::vector<FieldElem> m(a_);
  FieldElem acc = field_.one();
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m[pivot * n_ + col].is_zero()) ++pivot;
    if (pivot == n_) return field_.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[col * n_ + j]);
      acc = -acc;
    }
    const FieldElem p = m[col * n_ + col];
    acc *= p;
    const FieldElem p_inv = p.inverse();
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (m[r * n_ + col].is_zero()) continue;
      const FieldElem f = m[r * n_ + col] * p_inv;
      for (std::size_t j = col; j < n_; ++j) m[r * n_ + j] -= f * m[col * n_ + j];
    }
  }
  return acc;
}

FieldElem det_by_expansion(const Mat& m) {
  const std::size_t n = m.dim();
  if (n > 20) raise(Errc::invalid_argument, "cofactor expansion limited to n <= 20");
  // value(row, mask) = determinant of rows row..n-1 restricted to the columns in mask
  std::unordered_map<std::uint32_t, FieldElem> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t mask) -> FieldElem {
    if (row == n) return m.field().one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    FieldElem acc = m.field().zero();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const FieldElem& e = m(row, c);
      if (!e.is_zero()) {
        const FieldElem term = e * self(self, row + 1, mask & ~(1u << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, n == 32 ? ~0u : ((1u << n) - 1));
}

FieldElem Mat::trace() const {
  FieldElem acc = field_.zero();
  for (std::size_t i = 0; i < n_; ++i) acc += a_[i * n_ + i];
  return acc;
}

Mat Mat::inverse() const {
  if (field_.kind() == FieldKind::multipoly) {
    const FieldElem d = det();
    if (d.is_zero() || !d.as_multipoly().is_constant())
      raise(Errc::singular_matrix, "matrix is not invertible over the polynomial ring");
  }
  std::vector<FieldElem> m(a_);
  Mat inv = identity(field_, n_);
  std::vector<FieldElem>& r = inv.a_;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m[pivot * n_ + col].is_zero()) ++pivot;
    if (pivot == n_) raise(Errc::singular_matrix, "matrix is singular: " + key());
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m[pivot * n_ + j], m[col * n_ + j]);
        std::swap(r[pivot * n_ + j], r[col * n_ + j]);
      }
    }
    const FieldElem p_inv = m[col * n_ + col].inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      m[col * n_ + j] *= p_inv;
      r[col * n_ + j] *= p_inv;
    }
    for (std::size_t row = 0; row < n_; ++row) {
      if (row == col || m[row * n_ + col].is_zero()) continue;
      const FieldElem f = m[row * n_ + col];
      for (std::size_t j = 0; j < n_; ++j) {
        m[row * n_ + j] -= f * m[col * n_ + j];
        r[row * n_ + j] -= f * r[col * n_ + j];
      }
    }
  }
  return inv;
}

bool Mat::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i == j ? !a_[i * n_ + j].is_one() : !a_[i * n_ + j].is_zero()) return false;
  return true;
}

bool Mat::is_uni_upper_triangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!a_[i * n_ + i].is_one()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!a_[i * n_ + j].is_zero()) return false;
  }
  return true;
}

bool Mat::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !a_[i * n_ + j].is_zero()) return false;
  return true;
}

std::string Mat::key() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ',';
      out += a_[i * n_ + j].str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.a_ == b.a_;
}

std::vector<FieldElem> char_poly(const Mat& g) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = g.dim();
  const Field& f = g.field();
  std::vector<FieldElem> c(n + 1, f.zero());
  c[n] = f.one();
  Mat m = Mat::identity(f, n).scaled(f.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    m = g * m + Mat::identity(f, n).scaled(c[n - k + 1]);
    const Mat am = g * m;
    c[n - k] = -(am.trace() / f.embed(Rational(static_cast<long>(k))));
  }
  return c;
}

std::string char_poly_str(const std::vector<FieldElem>& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const FieldElem& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('(') != std::string::npos;
    bool neg = !compound && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    out += out.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace valtree
