#pragma once

// Direct-sum decomposition and isomorphism testing, generic over any
// Hom-finite category whose objects expose endomorphisms as matrices on a
// total space.  Used for A-modules (Rep) and for modules over a trivial
// extension (PairMod).
//
// Traits must provide:
//   using Obj;
//   static std::size_t total_dim(const Obj&);
//   static std::vector<Mat> end_basis(const Obj&);
//   static std::vector<Mat> hom_totals(const Obj& from, const Obj& to);
//   static Obj kernel_of(const Obj&, const Mat& endo);
//   static Obj image_of(const Obj&, const Mat& endo);
//   static std::string invariant(const Obj&);   // equal on isomorphic objects
//   static auto sort_key(const Obj&);            // totally ordered

#include "taucrest/endo.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace taucrest {

template <class Traits>
class KrullSchmidt {
 public:
  using Obj = typename Traits::Obj;

  struct Summand {
    Obj obj;
    std::size_t multiplicity = 0;
  };
  struct Decomposition {
    std::vector<Summand> summands;
    bool nonsplit = false;  // some piece was only presumed indecomposable
    std::size_t count() const { return summands.size(); }
  };

  static bool is_indecomposable(const Obj& x, bool* nonsplit = nullptr, std::uint64_t seed = 0) {
    if (Traits::total_dim(x) == 0) throw std::invalid_argument("the zero module is not indecomposable");
    const EndoInfo info = analyze_endomorphisms(Traits::end_basis(x), seed);
    if (nonsplit) *nonsplit = info.nonsplit;
    return info.local;
  }

  /// Indecomposable pieces with repetition, in a deterministic order.
  static std::vector<Obj> pieces(const Obj& x, bool& nonsplit, std::uint64_t seed = 0) {
    std::vector<Obj> out;
    split(x, out, nonsplit, seed);
    return out;
  }

  static Decomposition decompose(const Obj& x, std::uint64_t seed = 0) {
    Decomposition d;
    for (auto& piece : pieces(x, d.nonsplit, seed)) {
      bool placed = false;
      for (auto& s : d.summands) {
        if (iso_indecomposables(s.obj, piece)) {
          ++s.multiplicity;
          placed = true;
          break;
        }
      }
      if (!placed) d.summands.push_back({std::move(piece), 1});
    }
    std::stable_sort(d.summands.begin(), d.summands.end(),
                     [](const Summand& a, const Summand& b) { return Traits::sort_key(a.obj) < Traits::sort_key(b.obj); });
    return d;
  }

  static std::size_t count(const Obj& x) { return decompose(x).count(); }

  /// Both arguments must be indecomposable: then they are isomorphic iff some
  /// composite g*f of basis morphisms is invertible (End is local).
  static bool iso_indecomposables(const Obj& a, const Obj& b) {
    if (Traits::invariant(a) != Traits::invariant(b)) return false;
    const auto ab = Traits::hom_totals(a, b);
    if (ab.empty()) return false;
    const auto ba = Traits::hom_totals(b, a);
    const std::size_t n = Traits::total_dim(a);
    for (const auto& g : ba) {
      for (const auto& f : ab) {
        if (rank(g * f) == n) return true;
      }
    }
    return false;
  }

  static bool isomorphic(const Obj& a, const Obj& b) {
    if (Traits::invariant(a) != Traits::invariant(b)) return false;
    if (Traits::total_dim(a) == 0) return true;
    const auto ea = Traits::end_basis(a);
    if (ea.size() != Traits::end_basis(b).size()) return false;
    if (Traits::hom_totals(a, b).size() != ea.size()) return false;
    const auto da = decompose(a);
    const auto db = decompose(b);
    if (da.summands.size() != db.summands.size()) return false;
    std::vector<bool> used(db.summands.size(), false);
    for (const auto& s : da.summands) {
      bool found = false;
      for (std::size_t j = 0; j < db.summands.size() && !found; ++j) {
        if (used[j] || db.summands[j].multiplicity != s.multiplicity) continue;
        if (iso_indecomposables(s.obj, db.summands[j].obj)) used[j] = found = true;
      }
      if (!found) return false;
    }
    return true;
  }

 private:
  static void split(const Obj& x, std::vector<Obj>& out, bool& nonsplit, std::uint64_t seed) {
    const std::size_t n = Traits::total_dim(x);
    if (n == 0) return;
    const EndoInfo info = analyze_endomorphisms(Traits::end_basis(x), seed);
    if (info.local) {
      nonsplit = nonsplit || info.nonsplit;
      out.push_back(x);
      return;
    }
    // Fitting: psi = phi^n splits x as ker(psi) + im(psi), both nonzero.
    const Mat psi = power(*info.splitter, n);
    split(Traits::kernel_of(x, psi), out, nonsplit, seed);
    split(Traits::image_of(x, psi), out, nonsplit, seed);
  }
};

}  // namespace taucrest
