#include "taucrest/exactmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace taucrest {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

struct PrimeOps {
  using E = std::uint32_t;
  std::uint32_t p;

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  E add(E a, E b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<E>(s >= p ? s - p : s);
  }
  E sub(E a, E b) const { return a >= b ? a - b : static_cast<E>(std::uint64_t{a} + p - b); }
  E mul(E a, E b) const { return static_cast<E>(std::uint64_t{a} * b % p); }
  E neg(E a) const { return a == 0 ? 0 : p - a; }
  E inv(E a) const { return inverse_mod(a, p); }

  static std::vector<E>& data(Mat& m) { return m.residues(); }
  static const std::vector<E>& data(const Mat& m) { return m.residues(); }
};

struct RationalOps {
  using E = mpq_class;

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(const E& a) const { return sgn(a) == 0; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const { return 1 / a; }

  static std::vector<E>& data(Mat& m) { return m.rationals(); }
  static const std::vector<E>& data(const Mat& m) { return m.rationals(); }
};

template <class Fn>
decltype(auto) with_ops(Field f, Fn&& fn) {
  if (f.is_prime()) return fn(PrimeOps{f.characteristic()});
  return fn(RationalOps{});
}

template <class Ops>
RrefResult rref_impl(const Ops& ops, Mat m) {
  auto& a = Ops::data(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    }
    auto inv = ops.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = ops.mul(a[r * cols + k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      auto f = a[i * cols + c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!ops.is_zero(a[r * cols + k])) a[i * cols + k] = ops.sub(a[i * cols + k], ops.mul(f, a[r * cols + k]));
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

template <class Ops>
Mat matmul_impl(const Ops& ops, const Mat& x, const Mat& y) {
  Mat out(x.field(), x.rows(), y.cols());
  const auto& a = Ops::data(x);
  const auto& b = Ops::data(y);
  auto& c = Ops::data(out);
  const std::size_t n = x.rows(), k = x.cols(), m = y.cols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const auto& v = a[i * k + l];
      if (ops.is_zero(v)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!ops.is_zero(b[l * m + j])) c[i * m + j] = ops.add(c[i * m + j], ops.mul(v, b[l * m + j]));
      }
    }
  }
  return out;
}

// Specialised F_p product: accumulate in 64 bits and reduce lazily.
Mat matmul_prime(std::uint32_t p, const Mat& x, const Mat& y) {
  Mat out(x.field(), x.rows(), y.cols());
  const auto& a = x.residues();
  const auto& b = y.residues();
  auto& c = out.residues();
  const std::size_t n = x.rows(), k = x.cols(), m = y.cols();
  if (p < (1u << 16)) {
    // products fit in 32 bits; 2^31 / p^2 terms can be summed before reducing
    const std::uint64_t pp = std::uint64_t{p} * p;
    const std::size_t batch = std::max<std::uint64_t>(1, (~std::uint64_t{0} >> 1) / pp);
    std::vector<std::uint64_t> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::size_t pending = 0;
      for (std::size_t l = 0; l < k; ++l) {
        const std::uint64_t v = a[i * k + l];
        if (v == 0) continue;
        for (std::size_t j = 0; j < m; ++j) acc[j] += v * b[l * m + j];
        if (++pending == batch) {
          for (auto& s : acc) s %= p;
          pending = 0;
        }
      }
      for (std::size_t j = 0; j < m; ++j) c[i * m + j] = static_cast<std::uint32_t>(acc[j] % p);
    }
    return out;
  }
  return matmul_impl(PrimeOps{p}, x, y);
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("field characteristic out of range: " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_prime()) {
    long r = v % static_cast<long>(f.characteristic());
    if (r < 0) r += f.characteristic();
    residue_ = static_cast<std::uint32_t>(r);
  } else {
    q_ = v;
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_prime()) {
    const unsigned long p = f.characteristic();
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
    auto n = static_cast<std::uint32_t>(num.get_ui());
    auto d = static_cast<std::uint32_t>(den.get_ui());
    residue_ = PrimeOps{f.characteristic()}.mul(n, inverse_mod(d, f.characteristic()));
  } else {
    q_ = q;
    q_.canonicalize();
  }
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatchError("scalar fields differ: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const { return field_.is_prime() ? residue_ == 0 : sgn(q_) == 0; }

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime()) r.residue_ = PrimeOps{field_.characteristic()}.add(residue_, o.residue_);
  else r.q_ = q_ + o.q_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime()) r.residue_ = PrimeOps{field_.characteristic()}.sub(residue_, o.residue_);
  else r.q_ = q_ - o.q_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime()) r.residue_ = PrimeOps{field_.characteristic()}.mul(residue_, o.residue_);
  else r.q_ = q_ * o.q_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime()) r.residue_ = inverse_mod(residue_, field_.characteristic());
  else r.q_ = 1 / q_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar::zero(field_) - *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime() ? residue_ == o.residue_ : q_ == o.q_;
}

std::string Scalar::to_string() const { return field_.is_prime() ? std::to_string(residue_) : q_.get_str(); }

// ---------------------------------------------------------------- Mat

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime()) fp_.assign(rows * cols, 0);
  else q_.assign(rows * cols, mpq_class(0));
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
  return m;
}

Mat Mat::from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(f, v);
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionError("ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionError("ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return Scalar(field_, static_cast<long>(fp_[r * cols_ + c]));
  return Scalar(field_, q_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) throw FieldMismatchError("entry field " + v.field().name() + " does not match matrix field " + field_.name());
  if (field_.is_prime()) fp_[r * cols_ + c] = v.residue();
  else q_[r * cols_ + c] = v.rational();
}

void Mat::set(std::size_t r, std::size_t c, long v) { set(r, c, Scalar(field_, v)); }

bool Mat::entry_is_zero(std::size_t r, std::size_t c) const {
  return field_.is_prime() ? fp_[r * cols_ + c] == 0 : sgn(q_[r * cols_ + c]) == 0;
}

bool Mat::is_zero() const {
  if (field_.is_prime()) return std::all_of(fp_.begin(), fp_.end(), [](auto x) { return x == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const auto& x) { return sgn(x) == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      bool ok = field_.is_prime() ? fp_[i * cols_ + j] == (i == j ? 1u : 0u) : q_[i * cols_ + j] == (i == j ? 1 : 0);
      if (!ok) return false;
    }
  }
  return true;
}

void Mat::check_same(const Mat& o) const {
  if (!(field_ == o.field_)) throw FieldMismatchError("matrix fields differ: " + field_.name() + " vs " + o.field_.name());
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(o, Scalar::one(field_));
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(o, -Scalar::one(field_));
  return r;
}

Mat Mat::operator-() const { return scaled(-Scalar::one(field_)); }

Mat& Mat::add_scaled(const Mat& o, const Scalar& s) {
  check_same(o);
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionError("matrix sum shape mismatch");
  with_ops(field_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& a = Ops::data(*this);
    const auto& b = Ops::data(o);
    typename Ops::E f;
    if constexpr (std::is_same_v<Ops, PrimeOps>) f = s.residue();
    else f = s.rational();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!ops.is_zero(b[i])) a[i] = ops.add(a[i], ops.mul(f, b[i]));
    }
  });
  return *this;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(field_, rows_, cols_);
  r.add_scaled(*this, s);
  return r;
}

Mat Mat::operator*(const Mat& o) const { return matmul(*this, o); }

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && fp_ == o.fp_ && q_ == o.q_;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (field_.is_prime()) b.fp_[i * nc + j] = fp_[(r0 + i) * cols_ + c0 + j];
      else b.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
    }
  }
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  check_same(b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (field_.is_prime()) fp_[(r0 + i) * cols_ + c0 + j] = b.fp_[i * b.cols_ + j];
      else q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
    }
  }
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- algorithms

RrefResult rref(const Mat& m) {
  return with_ops(m.field(), [&](auto ops) { return rref_impl(ops, m); });
}

std::size_t rank(const Mat& m) {
  if (m.empty()) return 0;
  return rref(m).rank;
}

Mat kernel_basis(const Mat& m) {
  auto rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  Mat k(m.field(), n, n - rr.rank);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    k.set(j, col, 1L);
    for (std::size_t i = 0; i < rr.rank; ++i) {
      if (!rr.matrix.entry_is_zero(i, j)) k.set(rr.pivot_cols[i], col, -rr.matrix.at(i, j));
    }
    ++col;
  }
  return k;
}

Mat image_basis(const Mat& m) {
  auto rr = rref(m);
  Mat out(m.field(), m.rows(), rr.rank);
  for (std::size_t k = 0; k < rr.rank; ++k) out.set_block(0, k, m.column(rr.pivot_cols[k]));
  return out;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (!(m.field() == b.field())) throw FieldMismatchError("solve: field mismatch");
  if (m.rows() != b.rows()) throw DimensionError("solve: row count mismatch (" + std::to_string(m.rows()) + " vs " + std::to_string(b.rows()) + ")");
  Mat aug = hstack(m.field(), m.rows(), {m, b});
  auto rr = rref(aug);
  Mat x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    const std::size_t c = rr.pivot_cols[i];
    if (c >= m.cols()) return std::nullopt;
    for (std::size_t k = 0; k < b.cols(); ++k) {
      if (!rr.matrix.entry_is_zero(i, m.cols() + k)) x.set(c, k, rr.matrix.at(i, m.cols() + k));
    }
  }
  return x;
}

bool is_surjective_on_columns(const Mat& m) { return rank(m) == m.rows(); }
bool is_injective(const Mat& m) { return rank(m) == m.cols(); }

Mat matmul(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("matmul: field mismatch");
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
  if (a.field().is_prime()) return matmul_prime(a.field().characteristic(), a, b);
  return matmul_impl(RationalOps{}, a, b);
}

Mat kron(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("kron: field mismatch");
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.entry_is_zero(i, j)) continue;
      out.set_block(i * b.rows(), j * b.cols(), b.scaled(a.at(i, j)));
    }
  }
  return out;
}

Mat direct_sum_mat(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("direct_sum_mat: field mismatch");
  Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Mat transpose(const Mat& m) {
  Mat t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.field().is_prime()) t.residues()[j * m.rows() + i] = m.residues()[i * m.cols() + j];
      else t.rationals()[j * m.rows() + i] = m.rationals()[i * m.cols() + j];
    }
  }
  return t;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.field(), m.rows()));
}

Mat power(const Mat& m, std::uint64_t e) {
  if (m.rows() != m.cols()) throw DimensionError("power: matrix is not square");
  Mat result = Mat::identity(m.field(), m.rows());
  Mat base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Mat hstack(Field f, std::size_t rows, const std::vector<Mat>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw DimensionError("hstack: row mismatch");
    cols += p.cols();
  }
  Mat out(f, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Mat vstack(Field f, std::size_t cols, const std::vector<Mat>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionError("vstack: column mismatch");
    rows += p.rows();
  }
  Mat out(f, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Mat flatten(const Mat& m) {
  Mat v(m.field(), m.rows() * m.cols(), 1);
  if (m.field().is_prime()) v.residues() = m.residues();
  else v.rationals() = m.rationals();
  return v;
}

Mat unflatten(const Mat& v, std::size_t rows, std::size_t cols) {
  if (v.rows() * v.cols() != rows * cols) throw DimensionError("unflatten: size mismatch");
  Mat m(v.field(), rows, cols);
  if (v.field().is_prime()) m.residues() = v.residues();
  else m.rationals() = v.rationals();
  return m;
}

Mat quotient_map(const Mat& subspace, std::size_t ambient_dim) {
  if (subspace.rows() != ambient_dim) throw DimensionError("quotient_map: subspace lives in a different space");
  if (subspace.cols() == 0) return Mat::identity(subspace.field(), ambient_dim);
  return transpose(kernel_basis(transpose(subspace)));
}

Mat right_inverse(const Mat& q) {
  auto s = solve(q, Mat::identity(q.field(), q.rows()));
  if (!s) throw DimensionError("right_inverse: map is not surjective");
  return *s;
}

Mat left_inverse(const Mat& q) { return transpose(right_inverse(transpose(q))); }

bool column_space_contains(const Mat& space, const Mat& vectors) {
  if (vectors.cols() == 0) return true;
  if (space.cols() == 0) return vectors.is_zero();
  return solve(space, vectors).has_value();
}

}  // namespace taucrest
