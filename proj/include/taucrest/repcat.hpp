#pragma once

// A-mod as quiver representations: morphisms, (co)kernels, radical and top,
// projective covers, minimal presentations, decomposition and isomorphism.

#include "taucrest/algebra.hpp"
#include "taucrest/krull_schmidt.hpp"

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace taucrest {

class RepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RepData;

/// A left A-module: one vector space per vertex and one matrix per arrow
/// (target dim x source dim).  Immutable; copies share storage.
///
/// The total space is the direct sum of the vertex spaces in vertex order;
/// "total" matrices below are with respect to that ordering.
class Rep {
 public:
  Rep() = default;

  /// Validates shapes and that every relation (and every path of length L)
  /// acts as zero.
  static Rep make(const Algebra& a, std::vector<std::size_t> dims, std::vector<Mat> arrows);
  /// As make, but a relation violation yields nullopt (shape errors still throw).
  static std::optional<Rep> try_make(const Algebra& a, std::vector<std::size_t> dims, std::vector<Mat> arrows);
  static Rep zero(const Algebra& a);

  const Algebra& algebra() const;
  Field field() const;
  const std::vector<std::size_t>& dims() const;
  std::size_t dim(std::size_t v) const;
  std::size_t total_dim() const;
  std::size_t offset(std::size_t v) const;
  const Mat& arrow(std::size_t a) const;
  bool is_zero() const { return total_dim() == 0; }

  /// X_p for a path (traversal order) starting at `start`.
  Mat path_matrix(const Path& p, std::size_t start) const;
  /// Action of the algebra basis element b on the total space.
  Mat element_matrix(std::size_t b) const;
  /// Action of an arbitrary element (coordinate column) on the total space.
  Mat action(const Mat& element) const;

  /// Canonical text form: dims and arrow matrices.  Equal keys mean equal
  /// representations (not merely isomorphic).
  std::string key() const;
  std::string dims_string() const;

 private:
  static Rep assemble(const Algebra& a, std::vector<std::size_t> dims, std::vector<Mat> arrows);
  /// Empty when every relation and boundary path acts as zero.
  std::string relation_violation() const;

  std::shared_ptr<const RepData> d_;
};

struct RepMap {
  Rep source, target;
  std::vector<Mat> blocks;  // per vertex: target.dim(v) x source.dim(v)

  static RepMap zero(const Rep& x, const Rep& y);
  static RepMap identity(const Rep& x);
  /// Reads the diagonal vertex blocks of a total matrix.
  static RepMap from_total(const Rep& x, const Rep& y, const Mat& total);

  Mat total() const;
  bool is_zero() const;
  bool intertwines() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_iso() const { return is_surjective() && is_injective(); }

  RepMap operator+(const RepMap& o) const;
  RepMap operator-(const RepMap& o) const;
  RepMap scaled(const Scalar& s) const;
  bool operator==(const RepMap& o) const;
};

/// g after f.
RepMap compose(const RepMap& g, const RepMap& f);

struct DirectSum {
  Rep sum;
  std::vector<RepMap> inj, proj;
};
DirectSum direct_sum(const Algebra& a, const std::vector<Rep>& parts);
/// Map out of a direct sum assembled from its components.
RepMap map_from_sum(const DirectSum& s, const std::vector<RepMap>& components, const Rep& target);
/// Map into a direct sum assembled from its components.
RepMap map_to_sum(const DirectSum& s, const std::vector<RepMap>& components, const Rep& source);

struct SubRep {
  Rep rep;
  RepMap inclusion;
};
struct QuotientRep {
  Rep rep;
  RepMap projection;
  std::vector<Mat> sections;  // per vertex right inverse of the projection block
};

/// Per-vertex column bases of an invariant graded subspace.
SubRep subrep(const Rep& x, const std::vector<Mat>& bases);
/// Per-vertex spanning sets (not necessarily independent) of an invariant subspace.
QuotientRep quotient(const Rep& x, const std::vector<Mat>& spans);

SubRep kernel(const RepMap& f);
SubRep image(const RepMap& f);
QuotientRep cokernel(const RepMap& f);
SubRep radical(const Rep& x);
QuotientRep top(const Rep& x);

// ------------------------------------------------------------ distinguished modules

Rep projective_module(const Algebra& a, std::size_t i);
Rep simple_module(const Algebra& a, std::size_t i);
Rep injective_module(const Algebra& a, std::size_t i);

/// The unique map P(i) -> Y sending e_i to y (a dims(i) x 1 column of Y_i).
RepMap map_from_projective(const Algebra& a, std::size_t i, const Rep& y, const Mat& element);

/// A direct sum of indecomposable projectives P(vertices[0]) + ... with the
/// generator of summand k sitting at vertex vertices[k].
struct ProjectiveSum {
  Rep rep;
  std::vector<std::size_t> vertices;
  DirectSum parts;
};
ProjectiveSum projective_sum(const Algebra& a, const std::vector<std::size_t>& vertices);
/// Map out of a projective sum, given the image of each generator.
RepMap map_from_projective_sum(const ProjectiveSum& p, const Rep& y, const std::vector<Mat>& images);
/// Image of generator k under f, as a column of target.dim(vertices[k]).
Mat generator_image(const ProjectiveSum& p, const RepMap& f, std::size_t k);

struct Cover {
  ProjectiveSum source;
  RepMap map;  // surjective, right minimal
};
Cover projective_cover(const Rep& x);

struct Presentation {
  ProjectiveSum p1, p0;
  RepMap f;      // P1 -> P0
  RepMap cover;  // P0 -> X
};
Presentation minimal_presentation(const Rep& x);

// ------------------------------------------------------------ Hom, iso, decomposition

std::vector<RepMap> hom_basis(const Rep& x, const Rep& y);
std::size_t hom_dim(const Rep& x, const Rep& y);
/// Total matrices of a Hom basis.
std::vector<Mat> hom_totals(const Rep& x, const Rep& y);

bool is_projective(const Rep& x);

struct RepTraits {
  using Obj = Rep;
  static std::size_t total_dim(const Rep& x) { return x.total_dim(); }
  static std::vector<Mat> end_basis(const Rep& x) { return taucrest::hom_totals(x, x); }
  static std::vector<Mat> hom_totals(const Rep& x, const Rep& y) { return taucrest::hom_totals(x, y); }
  static Rep kernel_of(const Rep& x, const Mat& endo);
  static Rep image_of(const Rep& x, const Mat& endo);
  static std::string invariant(const Rep& x) { return x.dims_string(); }
  static std::tuple<std::size_t, std::vector<std::size_t>, std::string> sort_key(const Rep& x) {
    return {x.total_dim(), x.dims(), x.key()};
  }
};
using RepKS = KrullSchmidt<RepTraits>;

bool is_isomorphic(const Rep& x, const Rep& y);
RepKS::Decomposition decompose(const Rep& x);
/// Throws RepError for the zero module.
bool is_indecomposable(const Rep& x);
/// |X|: number of pairwise non-isomorphic indecomposable summands.
std::size_t count_summands(const Rep& x);

/// A module given by the action of the generators (vertex idempotents and
/// arrows) on an arbitrary basis of a vector space.  Returns the module in a
/// vertex-adapted basis together with the change-of-basis matrix (columns
/// are the new basis in old coordinates).
struct RebasedRep {
  Rep rep;
  Mat basis;
};
RebasedRep rep_from_action(const Algebra& a, const std::vector<Mat>& vertex_actions, const std::vector<Mat>& arrow_actions);

/// Restriction of a module over a product algebra to one factor.
Rep restrict_to_factor(const Rep& x, const Algebra& factor, const std::vector<std::size_t>& vertex_map,
                       const std::vector<std::size_t>& arrow_map);
/// Extension by zero of a module over one factor to the product.
Rep extend_from_factor(const Rep& x, const Algebra& product, const std::vector<std::size_t>& vertex_map,
                       const std::vector<std::size_t>& arrow_map);

/// Conjugate each vertex space by an invertible matrix: X'_a = g_j X_a g_i^{-1}.
Rep change_basis(const Rep& x, const std::vector<Mat>& g);

}  // namespace taucrest
