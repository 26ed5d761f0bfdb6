#pragma once

// Exact scalars and dense matrices over Q and prime fields F_p.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taucrest {

class FieldMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The base field: either the rationals or F_p with 2 <= p < 2^31.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  /// Canonical representative in [0, p). Prime fields only.
  std::uint32_t residue() const { return residue_; }
  /// Rationals only.
  const mpq_class& rational() const { return q_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  std::string to_string() const;

 private:
  void check(const Scalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  mpq_class q_;
};

/// Dense row-major matrix. Entries are stored as residues for prime fields and
/// as GMP rationals for Q; exactly one of the two buffers is in use.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat zero(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat identity(Field f, std::size_t n);
  static Mat from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows);
  static Mat from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  static Mat from_rows(Field f, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;
  Mat& add_scaled(const Mat& o, const Scalar& s);

  bool operator==(const Mat& o) const;

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat column(std::size_t c) const { return block(0, c, rows_, 1); }
  Mat row(std::size_t r) const { return block(r, 0, 1, cols_); }

  /// "[[a,b],[c,d]]"; rationals print as n or n/d.
  std::string to_string() const;

  std::vector<std::uint32_t>& residues() { return fp_; }
  const std::vector<std::uint32_t>& residues() const { return fp_; }
  std::vector<mpq_class>& rationals() { return q_; }
  const std::vector<mpq_class>& rationals() const { return q_; }

 private:
  void check_same(const Mat& o) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

struct RrefResult {
  Mat matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Columns form a basis of {v : m v = 0}.
Mat kernel_basis(const Mat& m);
/// Columns form a basis of the column space (the pivot columns of m).
Mat image_basis(const Mat& m);
/// Some x with m x = b, or nullopt. Throws DimensionError if rows differ.
std::optional<Mat> solve(const Mat& m, const Mat& b);
/// True when the columns of m span the whole target space.
bool is_surjective_on_columns(const Mat& m);
bool is_injective(const Mat& m);

Mat matmul(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat direct_sum_mat(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
Mat power(const Mat& m, std::uint64_t e);

Mat hstack(Field f, std::size_t rows, const std::vector<Mat>& parts);
Mat vstack(Field f, std::size_t cols, const std::vector<Mat>& parts);
/// Row-major flattening into a column vector.
Mat flatten(const Mat& m);
Mat unflatten(const Mat& v, std::size_t rows, std::size_t cols);

/// Rows form a map V -> V/span(subspace) with kernel exactly span(subspace).
Mat quotient_map(const Mat& subspace, std::size_t ambient_dim);
/// Some s with q s = I. Requires q of full row rank.
Mat right_inverse(const Mat& q);
/// Some s with s q = I. Requires q of full column rank.
Mat left_inverse(const Mat& q);

bool column_space_contains(const Mat& space, const Mat& vectors);

}  // namespace taucrest
