#pragma once

// Path algebras modulo admissible ideals, and bimodules over them.
//
// Conventions: a path is stored as its arrow indices in traversal order, so
// the path "first a, then b" is {a, b}; in composition notation (and in input
// files) that is written b.a.  Multiplication is composition: for basis paths
// p, q the product p*q is "q first, then p", nonzero only when
// target(q) == source(p).  Modules are left modules.

#include "taucrest/exactmat.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taucrest {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Path = std::vector<std::size_t>;

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> arrow_index(const std::string& label) const;
  void validate() const;
};

struct RelationTerm {
  mpq_class coeff;
  Path path;
};
using Relation = std::vector<RelationTerm>;

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  /// Every path of length >= nilpotency_bound is declared zero.
  std::size_t nilpotency_bound = 2;
};

struct AlgebraData;

/// Immutable, cheaply copyable handle.  Two handles compare equal only when
/// they refer to the same built algebra.
class Algebra {
 public:
  Algebra() = default;

  static Algebra build(const AlgebraPresentation& pres, Field field);

  Field field() const;
  std::size_t dim() const;
  std::size_t vertex_count() const;
  std::size_t arrow_count() const;
  const Quiver& quiver() const;
  const AlgebraPresentation& presentation() const;

  const std::vector<Path>& basis_paths() const;
  /// Source and target vertex of the basis path b.
  std::size_t source(std::size_t b) const;
  std::size_t target(std::size_t b) const;
  /// "e1", "a", "b.a", ...
  std::string basis_label(std::size_t b) const;
  std::string path_label(const Path& p, std::size_t start_vertex) const;

  /// Basis index of the trivial path at v / of arrow a.
  std::size_t vertex_element(std::size_t v) const { return v; }
  std::size_t arrow_element(std::size_t a) const;

  /// Coordinates (dim x 1) of an arbitrary path; zero for long or reducible-to-zero paths.
  Mat coords(const Path& p) const;
  /// Matrix of x -> b*x and of x -> x*b on the basis.
  const Mat& left_mult(std::size_t b) const;
  const Mat& right_mult(std::size_t b) const;
  /// Product of two elements given as coordinate columns.
  Mat multiply(const Mat& x, const Mat& y) const;

  /// All composable paths of length exactly L (the nilpotency bound).  A
  /// representation must kill these on top of the listed relations.
  const std::vector<Path>& boundary_paths() const;

  /// Basis indices of e_w A e_v, i.e. paths from v to w, in basis order.
  const std::vector<std::size_t>& paths_between(std::size_t v, std::size_t w) const;

  /// Arrows reversed, relation paths reversed.
  Algebra opposite() const;

  bool valid() const { return static_cast<bool>(d_); }
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.d_ == b.d_; }

 private:
  explicit Algebra(std::shared_ptr<const AlgebraData> d) : d_(std::move(d)) {}
  std::shared_ptr<const AlgebraData> d_;
};

/// R x S on the disjoint union of quivers.  Arrow labels of S that collide
/// with labels of R get a trailing prime.
struct ProductAlgebra {
  Algebra algebra;
  Algebra left;   // R
  Algebra right;  // S
  std::vector<std::size_t> left_vertex, right_vertex;  // factor vertex -> product vertex
  std::vector<std::size_t> left_arrow, right_arrow;    // factor arrow -> product arrow
};

ProductAlgebra product_algebra(const Algebra& r, const Algebra& s);

enum class BimoduleKind { Regular, Dual, Zero, Triangular, Custom };
std::string to_string(BimoduleKind k);

/// Generator-level action data for custom bimodules: matrices for each
/// vertex idempotent and each arrow, on the left and on the right.
struct GeneratorActions {
  std::size_t dim = 0;
  std::vector<Mat> left_vertex, left_arrow, right_vertex, right_arrow;
};

struct TriangularData {
  ProductAlgebra product;
  std::size_t m_dim = 0;
};

/// An A-bimodule given by commuting left and right action matrices, one per
/// algebra basis element.  left[b] is m -> b*m, right[b] is m -> m*b.
struct Bimodule {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<Mat> left, right;
  BimoduleKind kind = BimoduleKind::Custom;
  std::shared_ptr<const TriangularData> triangular;

  /// Throws AlgebraError naming the first violated axiom.
  void validate() const;
  std::string summary() const;
};

Bimodule regular_bimodule(const Algebra& a);
Bimodule dual_bimodule(const Algebra& a);
Bimodule zero_bimodule(const Algebra& a);
/// Extends generator actions multiplicatively and validates the result.
Bimodule custom_bimodule(const Algebra& a, const GeneratorActions& gens);

/// The lower triangular algebra [[R,0],[M,S]] as (R x S) |x M.  `m` holds the
/// left S-action (generators of S) and the right R-action (generators of R).
struct TriangularSetup {
  Algebra algebra;  // R x S
  Bimodule bimodule;
};
TriangularSetup triangular_bimodule(const Algebra& r, const Algebra& s, const GeneratorActions& m);
/// R = S = A and M = A with its regular actions.
TriangularSetup triangular_self(const Algebra& a);
/// R = S = A and M = D(A).
TriangularSetup triangular_dual(const Algebra& a);

}  // namespace taucrest
