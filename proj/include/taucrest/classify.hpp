#pragma once

// Brute-force classification over a finite field: indecomposables, tau-rigid
// modules and support tau-tilting pairs for A and for A |x M, report labels,
// and the harness that checks the tau-tilting transfer statements on every
// enumerated instance.

#include "taucrest/taukit.hpp"
#include "taucrest/trivext.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace taucrest {

class EnumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumConfig {
  Field field = Field::prime(2);
  std::size_t max_total_dim = 6;
  std::uint64_t seed = 0;
  bool parallel = false;
};

/// Tuples per dimension vector above this are skipped with a warning.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

struct Enumeration {
  std::vector<Rep> modules;           // one per isomorphism class
  std::vector<std::string> warnings;  // skipped dimension vectors
};

/// All indecomposables with total dimension <= max_total_dim, ordered by
/// (total dim, dimension vector, discovery order).
Enumeration enumerate_indecomposables(const Algebra& a, const EnumConfig& cfg);
std::vector<Rep> enumerate_tau_rigid_indecomposables(const Algebra& a, const EnumConfig& cfg);

/// Every module that is a direct sum of the given indecomposables with
/// total dimension <= bound (multiplicities allowed), excluding 0.
std::vector<Rep> modules_up_to(const Algebra& a, const std::vector<Rep>& indecomposables, std::size_t bound);
/// All multiplicity-free sums, 0 included, in subset order.
std::vector<Rep> basic_modules(const Algebra& a, const std::vector<Rep>& indecomposables);

// ------------------------------------------------------------ support tau-tilting, A side

struct SupportPair {
  std::vector<std::size_t> x;  // indices into the list searched
  std::vector<std::size_t> p;  // vertices of the projective part
  Rep module, projective;
};

/// Subset search over tau-rigid indecomposables using pairwise
/// Hom(-, tau -) vanishing.
std::vector<SupportPair> support_tau_tilting_search(const Algebra& a, const std::vector<Rep>& tau_rigid);
/// Tests every basic (module, projective) combination with the full
/// predicate; indices refer to `indecomposables`.
std::vector<SupportPair> support_tau_tilting_brute_force(const Algebra& a, const std::vector<Rep>& indecomposables);
std::vector<SupportPair> enumerate_support_tau_tilting(const Algebra& a, const EnumConfig& cfg);
/// Same pairs up to isomorphism, irrespective of order.
bool same_support_pairs(const std::vector<SupportPair>& u, const std::vector<SupportPair>& v);

// ------------------------------------------------------------ the trivial extension side

/// Indecomposable pairs (X, alpha) with X ranging over the sums of
/// `a_indecomposables` of total dimension <= max_total_dim.
struct PairEnumeration {
  std::vector<PairMod> modules;
  std::vector<std::string> warnings;
};
PairEnumeration enumerate_pair_indecomposables(const ExtPtr& ext, const std::vector<Rep>& a_indecomposables, const EnumConfig& cfg);

struct PairSupport {
  std::vector<std::size_t> x;
  std::vector<std::size_t> p;  // vertices i of the summands T(P(i))
  PairMod module, projective;
  bool t_form = false, z_form = false;
};
std::vector<PairSupport> pair_support_tau_tilting_search(const ExtPtr& ext, const std::vector<PairMod>& tau_rigid);
std::vector<PairSupport> pair_support_tau_tilting_brute_force(const ExtPtr& ext, const std::vector<PairMod>& indecomposables);
bool same_pair_supports(const std::vector<PairSupport>& u, const std::vector<PairSupport>& v);

// ------------------------------------------------------------ labels

/// Names modules by matching summands against P(i), S(i), I(i) (1-based);
/// anything else becomes M[dims]#hash.
class Labeler {
 public:
  explicit Labeler(const Algebra& a);
  std::string indecomposable(const Rep& x) const;
  std::string operator()(const Rep& x) const;

 private:
  Algebra a_;
  std::vector<std::pair<std::string, Rep>> named_;
};

/// T(label), Z(label) or L[dims]#hash per indecomposable summand.
std::string pair_label(const PairMod& p, const Labeler& labels);
std::string form_name(bool t_form, bool z_form);

// ------------------------------------------------------------ classification

struct Classification {
  Algebra algebra;
  ExtPtr ext;
  EnumConfig config;
  std::vector<std::string> warnings;
  std::vector<Rep> a_indecomposables, a_tau_rigid;
  std::vector<SupportPair> a_support;
  std::vector<PairMod> lambda_indecomposables, lambda_tau_rigid;
  std::vector<PairSupport> lambda_support;
};
Classification classify(const ExtPtr& ext, const EnumConfig& cfg);

// ------------------------------------------------------------ verification

enum class VerdictStatus { Verified, Counterexample, NotApplicable };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string name;
  std::string statement;
  VerdictStatus status = VerdictStatus::NotApplicable;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string counterexample;  // the first failing instance
};

/// One line of the status table for lower triangular inputs: the functor
/// applied to the pair (X over R, Y over S).
struct TriangularEntry {
  char functor = 'T';
  Rep x, y;
  std::string x_label, y_label;
  bool support_tau_tilting = false;
};

struct VerificationReport {
  Classification classification;
  std::vector<Verdict> verdicts;
  bool triangular = false;
  std::vector<TriangularEntry> triangular_table;

  bool all_verified() const;
  const Verdict& verdict(const std::string& name) const;
};

VerificationReport verify_theorems(const ExtPtr& ext, const EnumConfig& cfg);
VerificationReport verify_theorems(const Algebra& a, const Bimodule& m, const EnumConfig& cfg);

}  // namespace taucrest
