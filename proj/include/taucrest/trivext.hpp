#pragma once

// Modules over the trivial extension A |x M as pairs (X, alpha: M (x)_A X -> X)
// with alpha (M (x) alpha) = 0.  Functors T, U, C, Z, Hom spaces, kernels and
// cokernels, projective covers, minimal presentations, tau-rigidity, and
// decomposition in the pair category.

#include "taucrest/repcat.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace taucrest {

class PairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M (x)_A X in a vertex-adapted basis.  q maps pure-tensor coordinates
/// (index m * dim X + x) onto F(X); s is a right inverse of q.
struct TensorData {
  Rep fx;
  Mat q, s;
};

class TrivialExtension;
using ExtPtr = std::shared_ptr<const TrivialExtension>;

class TrivialExtension : public std::enable_shared_from_this<TrivialExtension> {
 public:
  static ExtPtr create(Bimodule m);

  const Algebra& algebra() const { return m_.algebra; }
  const Bimodule& bimodule() const { return m_; }
  std::size_t dim() const { return m_.algebra.dim() + m_.dim; }
  std::size_t vertex_count() const { return m_.algebra.vertex_count(); }

  /// Cached; safe for concurrent callers.
  std::shared_ptr<const TensorData> tensor(const Rep& x) const;
  Rep F(const Rep& x) const { return tensor(x)->fx; }
  RepMap F(const RepMap& f) const;

  std::size_t cache_size() const;

 private:
  explicit TrivialExtension(Bimodule m) : m_(std::move(m)) {}
  std::shared_ptr<const TensorData> compute_tensor(const Rep& x) const;

  Bimodule m_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const TensorData>> cache_;
};

/// Pure-tensor rank oracle: dim of M (x)_K X modulo the balancing relations,
/// computed without the vertex-adapted basis.
std::size_t tensor_dim_by_rank(const Bimodule& m, const Rep& x);

struct PairMod {
  ExtPtr ext;
  Rep x;
  RepMap alpha;  // F(x) -> x

  /// Validates that alpha is A-linear and alpha F(alpha) = 0.
  static PairMod make(const ExtPtr& ext, const Rep& x, const RepMap& alpha);
  static PairMod make(const ExtPtr& ext, const Rep& x, const Mat& alpha_total);
  static PairMod zero(const ExtPtr& ext);

  std::size_t total_dim() const { return x.total_dim(); }
  bool is_zero() const { return x.is_zero(); }
  std::string key() const;
};

struct PairMap {
  PairMod source, target;
  RepMap f;

  static PairMap make(const PairMod& p, const PairMod& q, const RepMap& f);  // validates the square
  static PairMap identity(const PairMod& p);
  static PairMap zero(const PairMod& p, const PairMod& q);
  bool commutes() const;
  bool is_zero() const { return f.is_zero(); }
  bool is_iso() const { return f.is_iso(); }
};

PairMap compose(const PairMap& g, const PairMap& f);

// ------------------------------------------------------------ functors

/// T(N) = (N + F(N), alpha = inclusion of F(N) after F(projection to N)).
PairMod functor_T(const ExtPtr& ext, const Rep& n);
PairMap functor_T(const ExtPtr& ext, const RepMap& f);
/// The decomposition N + F(N) underlying T(N).
DirectSum t_parts(const ExtPtr& ext, const Rep& n);
Rep functor_U(const PairMod& p);
PairMod functor_Z(const ExtPtr& ext, const Rep& n);
PairMap functor_Z(const ExtPtr& ext, const RepMap& f);
/// cok alpha with its quotient witness.
QuotientRep functor_C(const PairMod& p);
/// The canonical epimorphism p -> Z(C(p)).
PairMap unit_to_ZC(const PairMod& p);
/// The map (1, 0): T(N) -> Z(N).
PairMap t_to_z(const ExtPtr& ext, const Rep& n);

// ------------------------------------------------------------ Hom, (co)kernels

std::vector<PairMap> pair_hom_basis(const PairMod& p, const PairMod& q);
std::size_t pair_hom_dim(const PairMod& p, const PairMod& q);

struct DirectPairSum {
  PairMod sum;
  DirectSum parts;  // underlying inclusions and projections
};
DirectPairSum pair_direct_sum(const ExtPtr& ext, const std::vector<PairMod>& parts);

struct SubPair {
  PairMod pair;
  PairMap inclusion;
};
struct QuotientPair {
  PairMod pair;
  PairMap projection;
};
/// Sub-object on an alpha-invariant A-submodule.
SubPair sub_pair(const PairMod& p, const SubRep& s);
SubPair pair_kernel(const PairMap& f);
SubPair pair_image(const PairMap& f);
QuotientPair pair_cokernel(const PairMap& f);
/// rad(X, alpha) = rad_A X + im alpha.
SubPair pair_radical(const PairMod& p);
/// Surjective with kernel inside the radical of the source.
bool is_minimal_epimorphism(const PairMap& f);

// ------------------------------------------------------------ projectives

struct PairCover {
  ProjectiveSum base;  // A-projective cover of C(p)
  PairMod source;      // T(base)
  PairMap map;         // (q, alpha F(q))
};
PairCover pair_projective_cover(const PairMod& p);

struct PairPresentation {
  PairCover c0, c1;  // c1 covers the kernel of c0
  PairMap f;         // T(P1) -> T(P0)
};
PairPresentation pair_minimal_presentation(const PairMod& p);

/// Some pair morphisms phi0, phi1 (both isomorphisms) make the two
/// presentations of the same object isomorphic as complexes.
bool presentations_isomorphic(const PairMap& f_a, const PairMap& cover_a, const PairMap& f_b, const PairMap& cover_b);

bool pair_is_projective(const PairMod& p);

/// The presentation  T(P1 + Q) -> T(P0) -> Z(X) -> 0  assembled from the
/// A-minimal presentation P1 -f-> P0 -c-> X and the projective cover
/// Q -> F(X), with middle map [[f, 0, 0, 0], [0, r, F(f), 0]] in the order
/// (P1, Q, F(P1), F(Q)) -> (P0, F(P0)), where F(c) r is the cover of F(X).
struct ZPresentation {
  Presentation base;
  Cover q;                 // Q -> F(X)
  RepMap r;                // Q -> F(P0)
  DirectSum p1q;           // P1 + Q
  PairMap f;               // T(P1 + Q) -> T(P0)
  PairMap cover;           // (c, 0): T(P0) -> Z(X)
};
ZPresentation z_presentation(const ExtPtr& ext, const Rep& x);

// ------------------------------------------------------------ tau

/// Hom(T(P0), q) -> Hom(T(P1), q) surjective, for the minimal presentation of p.
bool pair_hom_to_tau_vanishes(const PairMod& q, const PairMod& p);
bool pair_is_tau_rigid(const PairMod& p);

// ------------------------------------------------------------ decomposition

struct PairTraits {
  using Obj = PairMod;
  static std::size_t total_dim(const PairMod& p) { return p.total_dim(); }
  static std::vector<Mat> end_basis(const PairMod& p);
  static std::vector<Mat> hom_totals(const PairMod& p, const PairMod& q);
  static PairMod kernel_of(const PairMod& p, const Mat& endo);
  static PairMod image_of(const PairMod& p, const Mat& endo);
  static std::string invariant(const PairMod& p);
  static std::tuple<std::size_t, std::vector<std::size_t>, std::string> sort_key(const PairMod& p) {
    return {p.total_dim(), p.x.dims(), p.key()};
  }
};
using PairKS = KrullSchmidt<PairTraits>;

PairKS::Decomposition pair_decompose(const PairMod& p);
bool pair_is_indecomposable(const PairMod& p);
bool pair_isomorphic(const PairMod& p, const PairMod& q);
std::size_t pair_count_summands(const PairMod& p);

// ------------------------------------------------------------ support tau-tilting

struct PairSttResult {
  bool tau_rigid = false, projective = false, hom_vanishes = false;
  std::size_t count_x = 0, count_p = 0, count_lambda = 0;
  bool accepted = false;
  std::string witness;
};
PairSttResult pair_support_tau_tilting(const PairMod& x, const PairMod& p);
/// The largest basic projective with Hom(P, p) = 0: T(P(i)) over the
/// vertices where X vanishes, since Hom(T(P(i)), (X, alpha)) = X_i.
PairMod pair_vanishing_projective(const PairMod& p);
bool pair_is_support_tau_tilting_module(const PairMod& p);

// ------------------------------------------------------------ forms

/// The regular module Lambda = A + M materialized as a pair.
PairMod regular_pair(const ExtPtr& ext);
/// p is isomorphic to T(C(p)).
bool is_T_form(const PairMod& p);
/// alpha = 0.
bool is_Z_form(const PairMod& p);

// ------------------------------------------------------------ lower triangular view

/// For (R x S) |x M: the module (X, Y) with X over R and Y over S.
Rep triangular_module(const TriangularData& t, const Rep& x_r, const Rep& y_s);
struct TriangularView {
  Rep x, y;        // restrictions to R and S
  Rep mx;          // M (x)_R X as an S-module
  RepMap alpha;    // M (x)_R X -> Y
};
TriangularView triangular_view(const PairMod& p);

}  // namespace taucrest
