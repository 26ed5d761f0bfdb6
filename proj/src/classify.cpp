#include "taucrest/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace taucrest {

namespace {

// Runs body(i) for i < n, on worker threads when asked.  Results must be
// written to per-index slots so that the outcome is order independent.
void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = parallel ? std::min<std::size_t>(n, std::max(2u, std::thread::hardware_concurrency())) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next++) < n;) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_finite(const Algebra& a, const EnumConfig& cfg) {
  if (!a.field().is_prime()) throw EnumError("enumeration needs a finite prime field, not " + a.field().name());
  if (!(cfg.field == a.field())) throw EnumError("enumeration field " + cfg.field.name() + " differs from the algebra's " + a.field().name());
  if (cfg.max_total_dim == 0) throw EnumError("max_total_dim must be at least 1");
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string hash_tag(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(h ^ (h >> 32)));
  return buf;
}

// Dimension vectors with 1 <= total <= bound and connected support.
std::vector<std::vector<std::size_t>> dimension_vectors(const Algebra& a, std::size_t bound) {
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> d(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
    if (v == n) {
      if (left != 0) return;
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i)
        if (d[i]) support.push_back(i);
      // connectivity of the support in the underlying graph
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{support.front()};
      seen[support.front()] = true;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& arr : a.quiver().arrows) {
          for (auto [x, y] : {std::pair{arr.source, arr.target}, std::pair{arr.target, arr.source}}) {
            if (x == u && d[y] && !seen[y]) {
              seen[y] = true;
              stack.push_back(y);
            }
          }
        }
      }
      for (auto s : support)
        if (!seen[s]) return;
      out.push_back(d);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      d[v] = k;
      rec(v + 1, left - k);
    }
    d[v] = 0;
  };
  for (std::size_t total = 1; total <= bound; ++total) rec(0, total);
  return out;
}

// Partitions of n into parts of size <= cap, largest part first.
void partitions(std::size_t n, std::size_t cap, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, cap); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

// Normal forms for the first arrow with nonzero source and target: rank
// normal forms for an ordinary arrow, nilpotent Jordan forms for a loop
// (every loop acts nilpotently since long paths vanish).
std::vector<Mat> normal_forms(const Algebra& a, std::size_t rows, std::size_t cols, bool loop) {
  const Field f = a.field();
  std::vector<Mat> out;
  if (!loop) {
    for (std::size_t r = 0; r <= std::min(rows, cols); ++r) {
      Mat m(f, rows, cols);
      for (std::size_t i = 0; i < r; ++i) m.set(i, i, 1L);
      out.push_back(std::move(m));
    }
    return out;
  }
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  partitions(rows, std::max<std::size_t>(1, a.presentation().nilpotency_bound), cur, parts);
  for (const auto& p : parts) {
    Mat m(f, rows, rows);
    std::size_t at = 0;
    for (auto k : p) {
      for (std::size_t i = 1; i < k; ++i) m.set(at + i, at + i - 1, 1L);
      at += k;
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct DimResult {
  std::vector<Rep> modules;
  std::string warning;
};

DimResult indecomposables_of(const Algebra& a, const std::vector<std::size_t>& d) {
  const Field f = a.field();
  const std::uint64_t p = f.characteristic();
  const auto& arrows = a.quiver().arrows;
  std::optional<std::size_t> nf_arrow;
  std::size_t free_entries = 0;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t e = d[arrows[k].target] * d[arrows[k].source];
    if (e == 0) continue;
    if (!nf_arrow) nf_arrow = k;
    else free_entries += e;
  }
  std::vector<Mat> forms;
  if (nf_arrow) {
    const auto& arr = arrows[*nf_arrow];
    forms = normal_forms(a, d[arr.target], d[arr.source], arr.source == arr.target);
  } else {
    forms.push_back(Mat(f, 0, 0));
  }
  const double log_count = std::log2(static_cast<double>(forms.size())) + free_entries * std::log2(static_cast<double>(p));
  DimResult res;
  if (log_count > 24.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "skipped dimension vector %s: %zu normal forms x %llu^%zu arrow-matrix tuples exceed 2^24", dims_text(d).c_str(),
                  forms.size(), static_cast<unsigned long long>(p), free_entries);
    res.warning = buf;
    return res;
  }
  std::vector<std::size_t> digits(free_entries, 0);
  for (const Mat& form : forms) {
    std::fill(digits.begin(), digits.end(), 0);
    for (;;) {
      std::vector<Mat> mats;
      std::size_t pos = 0;
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        const std::size_t r = d[arrows[k].target], c = d[arrows[k].source];
        if (nf_arrow && k == *nf_arrow) {
          mats.push_back(form);
          continue;
        }
        Mat m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) {
            if (digits[pos]) m.set(i, j, static_cast<long>(digits[pos]));
            ++pos;
          }
        mats.push_back(std::move(m));
      }
      if (auto x = Rep::try_make(a, d, std::move(mats)); x && is_indecomposable(*x)) {
        bool known = false;
        for (const auto& y : res.modules) {
          if (is_isomorphic(*x, y)) {
            known = true;
            break;
          }
        }
        if (!known) res.modules.push_back(*x);
      }
      // next tuple
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return res;
}

std::vector<std::vector<std::size_t>> vertex_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

// All k-subsets of `from`, in lexicographic order.
void combinations(const std::vector<std::size_t>& from, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < from.size(); ++i) {
    cur.push_back(from[i]);
    combinations(from, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Compatible families of a pairwise relation: all subsets of size <= n
// whose members are pairwise compatible, then projective vertices among
// `free_vertices(family)` filling the count up to n.
template <class Emit>
void subset_search(std::size_t count, std::size_t n, const std::vector<std::vector<bool>>& compatible,
                   const std::function<std::vector<std::size_t>(const std::vector<std::size_t>&)>& free_vertices, Emit emit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() <= n) {
      std::vector<std::vector<std::size_t>> qs;
      std::vector<std::size_t> cur;
      combinations(free_vertices(chosen), n - chosen.size(), 0, cur, qs);
      for (const auto& q : qs) emit(chosen, q);
    }
    if (chosen.size() == n) return;
    for (std::size_t i = start; i < count; ++i) {
      bool ok = true;
      for (auto j : chosen) ok = ok && compatible[i][j];
      if (!ok) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

template <class T>
std::vector<T> pick(const std::vector<T>& all, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

Rep sum_of(const Algebra& a, const std::vector<Rep>& parts) { return parts.empty() ? Rep::zero(a) : direct_sum(a, parts).sum; }

PairMod pair_sum_of(const ExtPtr& ext, const std::vector<PairMod>& parts) {
  return parts.empty() ? PairMod::zero(ext) : pair_direct_sum(ext, parts).sum;
}

}  // namespace

// ------------------------------------------------------------ A side

Enumeration enumerate_indecomposables(const Algebra& a, const EnumConfig& cfg) {
  require_finite(a, cfg);
  const auto dvs = dimension_vectors(a, cfg.max_total_dim);
  std::vector<DimResult> per(dvs.size());
  for_each_index(dvs.size(), cfg.parallel, [&](std::size_t i) { per[i] = indecomposables_of(a, dvs[i]); });
  Enumeration e;
  for (auto& r : per) {
    for (auto& m : r.modules) e.modules.push_back(std::move(m));
    if (!r.warning.empty()) e.warnings.push_back(std::move(r.warning));
  }
  return e;
}

std::vector<Rep> enumerate_tau_rigid_indecomposables(const Algebra& a, const EnumConfig& cfg) {
  std::vector<Rep> out;
  for (const auto& x : enumerate_indecomposables(a, cfg).modules) {
    if (is_tau_rigid(x)) out.push_back(x);
  }
  return out;
}

std::vector<Rep> modules_up_to(const Algebra& a, const std::vector<Rep>& indecomposables, std::size_t bound) {
  std::vector<Rep> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t used) {
    if (!cur.empty()) out.push_back(sum_of(a, pick(indecomposables, cur)));
    for (std::size_t i = start; i < indecomposables.size(); ++i) {
      const std::size_t d = indecomposables[i].total_dim();
      if (used + d > bound) continue;
      cur.push_back(i);
      rec(i, used + d);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Rep> basic_modules(const Algebra& a, const std::vector<Rep>& indecomposables) {
  if (indecomposables.size() > 20) throw EnumError("too many indecomposables for an exhaustive subset scan");
  std::vector<Rep> out;
  for (const auto& s : vertex_subsets(indecomposables.size())) out.push_back(sum_of(a, pick(indecomposables, s)));
  return out;
}

std::vector<SupportPair> support_tau_tilting_search(const Algebra& a, const std::vector<Rep>& tau_rigid) {
  const std::size_t k = tau_rigid.size(), n = a.vertex_count();
  std::vector<std::vector<bool>> vanish(k, std::vector<bool>(k, true)), compatible(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) vanish[i][j] = hom_to_tau_vanishes(tau_rigid[i], tau_rigid[j]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) compatible[i][j] = vanish[i][j] && vanish[j][i];
  auto free_vertices = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> v;
    for (std::size_t q = 0; q < n; ++q) {
      bool zero = true;
      for (auto i : s) zero = zero && tau_rigid[i].dim(q) == 0;
      if (zero) v.push_back(q);
    }
    return v;
  };
  std::vector<SupportPair> out;
  subset_search(k, n, compatible, free_vertices, [&](const std::vector<std::size_t>& s, const std::vector<std::size_t>& q) {
    out.push_back({s, q, sum_of(a, pick(tau_rigid, s)), projective_sum(a, q).rep});
  });
  return out;
}

std::vector<SupportPair> support_tau_tilting_brute_force(const Algebra& a, const std::vector<Rep>& indecomposables) {
  const std::size_t n = a.vertex_count();
  if (indecomposables.size() > 20) throw EnumError("too many indecomposables for an exhaustive subset scan");
  const auto qs = vertex_subsets(n);
  std::vector<SupportPair> out;
  for (const auto& s : vertex_subsets(indecomposables.size())) {
    if (s.size() > n) continue;
    const Rep x = sum_of(a, pick(indecomposables, s));
    for (const auto& q : qs) {
      const Rep p = projective_sum(a, q).rep;
      if (is_support_tau_tilting_pair(x, p).accepted) out.push_back({s, q, x, p});
    }
  }
  return out;
}

std::vector<SupportPair> enumerate_support_tau_tilting(const Algebra& a, const EnumConfig& cfg) {
  return support_tau_tilting_search(a, enumerate_tau_rigid_indecomposables(a, cfg));
}

bool same_support_pairs(const std::vector<SupportPair>& u, const std::vector<SupportPair>& v) {
  if (u.size() != v.size()) return false;
  std::vector<bool> used(v.size(), false);
  for (const auto& s : u) {
    bool found = false;
    for (std::size_t j = 0; j < v.size() && !found; ++j) {
      if (used[j] || v[j].p != s.p || v[j].module.dims() != s.module.dims()) continue;
      if (is_isomorphic(v[j].module, s.module)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

// ------------------------------------------------------------ Lambda side

PairEnumeration enumerate_pair_indecomposables(const ExtPtr& ext, const std::vector<Rep>& a_indecomposables, const EnumConfig& cfg) {
  const Algebra& a = ext->algebra();
  require_finite(a, cfg);
  const std::uint64_t p = a.field().characteristic();
  const auto xs = modules_up_to(a, a_indecomposables, cfg.max_total_dim);
  // warm the tensor cache sequentially so that workers mostly read it
  for (const auto& x : xs) ext->tensor(x);

  struct Slot {
    std::vector<PairMod> found;
    std::string warning;
  };
  std::vector<Slot> slots(xs.size());
  for_each_index(xs.size(), cfg.parallel, [&](std::size_t idx) {
    const Rep& x = xs[idx];
    const Rep fx = ext->F(x);
    const auto h = hom_basis(fx, x);
    if (h.size() * std::log2(static_cast<double>(p)) > 24.0) {
      slots[idx].warning = "skipped structure maps on X = " + x.dims_string() + ": " + std::to_string(p) + "^" + std::to_string(h.size()) +
                           " candidates exceed 2^24";
      return;
    }
    std::vector<RepMap> fh;
    for (const auto& g : h) fh.push_back(ext->F(g));
    std::vector<std::size_t> digits(h.size(), 0);
    for (;;) {
      RepMap alpha = RepMap::zero(fx, x);
      RepMap f_alpha = RepMap::zero(ext->F(fx), fx);
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!digits[i]) continue;
        const Scalar c(a.field(), static_cast<long>(digits[i]));
        alpha = alpha + h[i].scaled(c);
        f_alpha = f_alpha + fh[i].scaled(c);
      }
      if (compose(alpha, f_alpha).is_zero()) {
        PairMod q{ext, x, alpha};
        if (pair_is_indecomposable(q)) {
          bool known = false;
          for (const auto& r : slots[idx].found) {
            if (pair_isomorphic(q, r)) {
              known = true;
              break;
            }
          }
          if (!known) slots[idx].found.push_back(std::move(q));
        }
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  });
  PairEnumeration e;
  for (auto& s : slots) {
    for (auto& q : s.found) e.modules.push_back(std::move(q));
    if (!s.warning.empty()) e.warnings.push_back(std::move(s.warning));
  }
  std::stable_sort(e.modules.begin(), e.modules.end(), [](const PairMod& u, const PairMod& v) {
    return std::pair(u.total_dim(), u.x.dims()) < std::pair(v.total_dim(), v.x.dims());
  });
  return e;
}

namespace {

PairSupport make_pair_support(const ExtPtr& ext, std::vector<std::size_t> s, std::vector<std::size_t> q, PairMod module) {
  PairSupport r;
  r.x = std::move(s);
  r.p = std::move(q);
  r.projective = functor_T(ext, projective_sum(ext->algebra(), r.p).rep);
  r.module = std::move(module);
  r.z_form = is_Z_form(r.module);
  r.t_form = is_T_form(r.module);
  return r;
}

}  // namespace

std::vector<PairSupport> pair_support_tau_tilting_search(const ExtPtr& ext, const std::vector<PairMod>& tau_rigid) {
  const std::size_t k = tau_rigid.size(), n = ext->vertex_count();
  std::vector<std::vector<bool>> vanish(k, std::vector<bool>(k, true)), compatible(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) vanish[i][j] = pair_hom_to_tau_vanishes(tau_rigid[i], tau_rigid[j]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) compatible[i][j] = vanish[i][j] && vanish[j][i];
  // Hom(T(P(q)), (X, alpha)) = X_q
  auto free_vertices = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> v;
    for (std::size_t q = 0; q < n; ++q) {
      bool zero = true;
      for (auto i : s) zero = zero && tau_rigid[i].x.dim(q) == 0;
      if (zero) v.push_back(q);
    }
    return v;
  };
  std::vector<PairSupport> out;
  subset_search(k, n, compatible, free_vertices, [&](const std::vector<std::size_t>& s, const std::vector<std::size_t>& q) {
    out.push_back(make_pair_support(ext, s, q, pair_sum_of(ext, pick(tau_rigid, s))));
  });
  return out;
}

std::vector<PairSupport> pair_support_tau_tilting_brute_force(const ExtPtr& ext, const std::vector<PairMod>& indecomposables) {
  const std::size_t n = ext->vertex_count();
  if (indecomposables.size() > 20) throw EnumError("too many indecomposables for an exhaustive subset scan");
  const auto qs = vertex_subsets(n);
  std::vector<PairSupport> out;
  for (const auto& s : vertex_subsets(indecomposables.size())) {
    if (s.size() > n) continue;
    const PairMod x = pair_sum_of(ext, pick(indecomposables, s));
    for (const auto& q : qs) {
      const PairMod p = functor_T(ext, projective_sum(ext->algebra(), q).rep);
      if (pair_support_tau_tilting(x, p).accepted) out.push_back(make_pair_support(ext, s, q, x));
    }
  }
  return out;
}

bool same_pair_supports(const std::vector<PairSupport>& u, const std::vector<PairSupport>& v) {
  if (u.size() != v.size()) return false;
  std::vector<bool> used(v.size(), false);
  for (const auto& s : u) {
    bool found = false;
    for (std::size_t j = 0; j < v.size() && !found; ++j) {
      if (used[j] || v[j].p != s.p || v[j].module.x.dims() != s.module.x.dims()) continue;
      if (pair_isomorphic(v[j].module, s.module)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

// ------------------------------------------------------------ labels

Labeler::Labeler(const Algebra& a) : a_(a) {
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    const std::string v = std::to_string(i + 1);
    named_.push_back({"P(" + v + ")", projective_module(a, i)});
    named_.push_back({"S(" + v + ")", simple_module(a, i)});
    named_.push_back({"I(" + v + ")", injective_module(a, i)});
  }
}

std::string Labeler::indecomposable(const Rep& x) const {
  for (const auto& [name, m] : named_) {
    if (m.dims() == x.dims() && is_isomorphic(m, x)) return name;
  }
  return "M" + x.dims_string() + "#" + hash_tag(x.key());
}

namespace {

std::string join_labels(std::vector<std::pair<std::string, std::size_t>> parts) {
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& [name, mult] : parts) {
    if (!s.empty()) s += " + ";
    if (mult > 1) s += std::to_string(mult) + "*";
    s += name;
  }
  return s;
}

}  // namespace

std::string Labeler::operator()(const Rep& x) const {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, std::size_t>> parts;
  for (const auto& s : decompose(x).summands) parts.push_back({indecomposable(s.obj), s.multiplicity});
  return join_labels(std::move(parts));
}

std::string pair_label(const PairMod& p, const Labeler& labels) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::string, std::size_t>> parts;
  for (const auto& s : pair_decompose(p).summands) {
    const PairMod& q = s.obj;
    std::string name;
    if (is_T_form(q)) name = "T(" + labels(functor_C(q).rep) + ")";
    else if (is_Z_form(q)) name = "Z(" + labels(q.x) + ")";
    else name = "L" + q.x.dims_string() + "#" + hash_tag(q.key());
    parts.push_back({name, s.multiplicity});
  }
  return join_labels(std::move(parts));
}

std::string form_name(bool t_form, bool z_form) {
  if (t_form && z_form) return "T and Z";
  if (t_form) return "T";
  if (z_form) return "Z";
  return "neither";
}

// ------------------------------------------------------------ classification

Classification classify(const ExtPtr& ext, const EnumConfig& cfg) {
  Classification c;
  c.algebra = ext->algebra();
  c.ext = ext;
  c.config = cfg;
  Enumeration e = enumerate_indecomposables(c.algebra, cfg);
  c.a_indecomposables = std::move(e.modules);
  c.warnings = std::move(e.warnings);
  for (const auto& x : c.a_indecomposables)
    if (is_tau_rigid(x)) c.a_tau_rigid.push_back(x);
  c.a_support = support_tau_tilting_search(c.algebra, c.a_tau_rigid);

  PairEnumeration pe = enumerate_pair_indecomposables(ext, c.a_indecomposables, cfg);
  c.lambda_indecomposables = std::move(pe.modules);
  for (auto& w : pe.warnings) c.warnings.push_back(std::move(w));
  for (const auto& p : c.lambda_indecomposables)
    if (pair_is_tau_rigid(p)) c.lambda_tau_rigid.push_back(p);
  c.lambda_support = pair_support_tau_tilting_search(ext, c.lambda_tau_rigid);
  return c;
}

// ------------------------------------------------------------ verification

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "verified";
    case VerdictStatus::Counterexample: return "counterexample";
    case VerdictStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool VerificationReport::all_verified() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == VerdictStatus::Counterexample; });
}

const Verdict& VerificationReport::verdict(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return v;
  throw std::out_of_range("no verdict named " + name);
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Tally {
 public:
  Tally(std::string name, std::string statement) {
    v_.name = std::move(name);
    v_.statement = std::move(statement);
  }
  // lhs: the statement about the extension; rhs: the conditions over A.
  void biconditional(bool lhs, bool rhs, const std::function<std::string()>& instance) {
    ++v_.instances;
    if (lhs != rhs && v_.failures++ == 0) v_.counterexample = instance() + ": extension side " + yes_no(lhs) + ", conditions " + yes_no(rhs);
  }
  void holds(bool ok, const std::function<std::string()>& instance) {
    ++v_.instances;
    if (!ok && v_.failures++ == 0) v_.counterexample = instance();
  }
  Verdict done() {
    v_.status = v_.failures ? VerdictStatus::Counterexample : VerdictStatus::Verified;
    return v_;
  }
  Verdict not_applicable() {
    v_.status = VerdictStatus::NotApplicable;
    return v_;
  }

 private:
  Verdict v_;
};

// Per-module quantities shared by several checks.
struct ModuleFacts {
  Rep x, fx;
  PairMod t, z;
  bool tau_rigid = false, t_tau_rigid = false, z_tau_rigid = false;
  bool fx_to_tau_vanishes = false, cover_hom_vanishes = false;
  std::size_t count = 0, t_count = 0, z_count = 0;
};

ModuleFacts facts_of(const ExtPtr& ext, const Rep& x) {
  ModuleFacts m;
  m.x = x;
  m.fx = ext->F(x);
  m.t = functor_T(ext, x);
  m.z = functor_Z(ext, x);
  m.tau_rigid = is_tau_rigid(x);
  m.t_tau_rigid = pair_is_tau_rigid(m.t);
  m.z_tau_rigid = pair_is_tau_rigid(m.z);
  m.fx_to_tau_vanishes = hom_to_tau_vanishes(m.fx, x);
  m.cover_hom_vanishes = hom_dim(projective_cover(m.fx).source.rep, x) == 0;
  m.count = count_summands(x);
  m.t_count = pair_count_summands(m.t);
  m.z_count = pair_count_summands(m.z);
  return m;
}

}  // namespace

VerificationReport verify_theorems(const ExtPtr& ext, const EnumConfig& cfg) {
  VerificationReport rep;
  rep.classification = classify(ext, cfg);
  const Classification& c = rep.classification;
  const Algebra& a = c.algebra;
  const std::size_t n = a.vertex_count();
  const Labeler labels(a);

  // ---- pairs (X, P) of A-modules against (T(X), T(P)) and (Z(X), T(P))
  {
    Tally t("T-pair-support-tau-tilting",
            "(T(X), T(P)) is a support tau-tilting pair iff (X, P) is one, Hom(P, M(x)X) = 0 and Hom(M(x)X, tau X) = 0");
    Tally z("Z-pair-support-tau-tilting",
            "(Z(X), T(P)) is a support tau-tilting pair iff (X, P) is one and Hom(Q, X) = 0 for the projective cover Q of M(x)X");
    const auto xs = basic_modules(a, c.a_indecomposables);
    const auto qs = vertex_subsets(n);
    std::vector<ModuleFacts> facts(xs.size());
    for_each_index(xs.size(), cfg.parallel, [&](std::size_t i) { facts[i] = facts_of(ext, xs[i]); });
    struct ProjFacts {
      Rep p;
      PairMod tp;
      bool projective;
      std::size_t count;
    };
    std::vector<ProjFacts> ps;
    for (const auto& q : qs) {
      const Rep p = projective_sum(a, q).rep;
      const PairMod tp = functor_T(ext, p);
      ps.push_back({p, tp, pair_is_projective(tp), pair_count_summands(tp)});
    }
    for (const auto& m : facts) {
      for (const auto& pf : ps) {
        const auto instance = [&] { return "X = " + labels(m.x) + ", P = " + labels(pf.p); };
        const SttPair base = is_support_tau_tilting_pair(m.x, pf.p);
        // the extension side, assembled from the same predicates as pair_support_tau_tilting
        const bool t_lhs = m.t_tau_rigid && pf.projective && pair_hom_dim(pf.tp, m.t) == 0 && m.t_count + pf.count == n;
        const bool z_lhs = m.z_tau_rigid && pf.projective && pair_hom_dim(pf.tp, m.z) == 0 && m.z_count + pf.count == n;
        t.biconditional(t_lhs, base.accepted && hom_dim(pf.p, m.fx) == 0 && m.fx_to_tau_vanishes, instance);
        z.biconditional(z_lhs, base.accepted && m.cover_hom_vanishes, instance);
      }
    }
    rep.verdicts.push_back(t.done());
    rep.verdicts.push_back(z.done());
  }

  // ---- tau-rigid pairs have tau-rigid cokernel
  std::vector<PairMod> rigid_pairs = c.lambda_tau_rigid;
  for (const auto& s : c.lambda_support)
    if (!s.module.is_zero() && s.x.size() > 1) rigid_pairs.push_back(s.module);
  {
    Tally t("cokernel-tau-rigid", "if (X, alpha) is tau-rigid then cok alpha is a tau-rigid A-module");
    for (const auto& p : rigid_pairs) {
      t.holds(is_tau_rigid(functor_C(p).rep), [&] { return "p = " + pair_label(p, labels) + ": cok alpha is not tau-rigid"; });
    }
    rep.verdicts.push_back(t.done());
  }

  // ---- T(X), Z(X) tau-rigid, and the summand counts, over all enumerated modules
  {
    Tally t("T-tau-rigid", "T(X) is tau-rigid iff X is tau-rigid and Hom(M(x)X, tau X) = 0");
    Tally z("Z-tau-rigid", "Z(X) is tau-rigid iff X is tau-rigid and Hom(Q, X) = 0 for the projective cover Q of M(x)X");
    Tally tc("T-summand-count", "|T(X)| = |X|");
    Tally zc("Z-summand-count", "|Z(X)| = |X|");
    const auto xs = modules_up_to(a, c.a_indecomposables, cfg.max_total_dim);
    std::vector<ModuleFacts> facts(xs.size());
    for_each_index(xs.size(), cfg.parallel, [&](std::size_t i) { facts[i] = facts_of(ext, xs[i]); });
    for (const auto& m : facts) {
      const auto instance = [&] { return "X = " + labels(m.x); };
      t.biconditional(m.t_tau_rigid, m.tau_rigid && m.fx_to_tau_vanishes, instance);
      z.biconditional(m.z_tau_rigid, m.tau_rigid && m.cover_hom_vanishes, instance);
      tc.holds(m.t_count == m.count, [&] { return instance() + ": |T(X)| = " + std::to_string(m.t_count) + ", |X| = " + std::to_string(m.count); });
      zc.holds(m.z_count == m.count, [&] { return instance() + ": |Z(X)| = " + std::to_string(m.z_count) + ", |X| = " + std::to_string(m.count); });
    }
    rep.verdicts.push_back(t.done());
    rep.verdicts.push_back(z.done());

    // ---- lower triangular inputs
    const auto& tri = ext->bimodule().triangular;
    rep.triangular = static_cast<bool>(tri);
    Tally tcok("triangular-cokernel-tau-rigid", "if (X, Y, alpha) is tau-rigid then X is a tau-rigid R-module and cok alpha a tau-rigid S-module");
    Tally tt("triangular-T-tau-rigid",
             "(X, Y + M(x)X) is tau-rigid iff X and Y are tau-rigid and Hom_S(M(x)X, tau Y) = 0");
    Tally tz("triangular-Z-tau-rigid",
             "(X, Y) with zero map is tau-rigid iff X and Y are tau-rigid and Hom_S(Q, Y) = 0 for the projective cover Q of M(x)X");
    Tally ts("triangular-T-support-tau-tilting",
             "(X, Y + M(x)X) is support tau-tilting iff X and Y are, Hom_S(M(x)X, tau Y) = 0 and Hom_S(P, M(x)X) = 0 for (Y, P) support tau-tilting");
    Tally tzs("triangular-Z-support-tau-tilting",
              "(X, Y) with zero map is support tau-tilting iff X and Y are and Hom_S(Q, Y) = 0 for the projective cover Q of M(x)X");
    if (!tri) {
      for (auto* x : {&tcok, &tt, &tz, &ts, &tzs}) rep.verdicts.push_back(x->not_applicable());
    } else {
      const ProductAlgebra& pa = tri->product;
      const Labeler rl(pa.left), sl(pa.right);
      for (const auto& p : rigid_pairs) {
        const TriangularView v = triangular_view(p);
        tcok.holds(is_tau_rigid(v.x) && is_tau_rigid(cokernel(v.alpha).rep),
                   [&] { return "(X, Y) = (" + rl(v.x) + ", " + sl(v.y) + "): X or cok alpha is not tau-rigid"; });
      }
      const auto r_ind = enumerate_indecomposables(pa.left, cfg).modules;
      const auto s_ind = enumerate_indecomposables(pa.right, cfg).modules;
      const auto r_mods = basic_modules(pa.left, r_ind);
      const auto s_mods = basic_modules(pa.right, s_ind);
      struct SFacts {
        bool tau_rigid, stt;
        Rep vp;
      };
      std::vector<SFacts> sf;
      for (const auto& y : s_mods) sf.push_back({is_tau_rigid(y), is_support_tau_tilting_module(y), vanishing_projective(y)});
      struct Cell {
        bool t_rigid, z_rigid, t_stt, z_stt;
      };
      std::vector<Cell> cells(r_mods.size() * s_mods.size());
      for_each_index(cells.size(), cfg.parallel, [&](std::size_t k) {
        const Rep w = triangular_module(*tri, r_mods[k / s_mods.size()], s_mods[k % s_mods.size()]);
        const PairMod tp = functor_T(ext, w), zp = functor_Z(ext, w);
        cells[k] = {pair_is_tau_rigid(tp), pair_is_tau_rigid(zp), pair_is_support_tau_tilting_module(tp), pair_is_support_tau_tilting_module(zp)};
      });
      for (std::size_t i = 0; i < r_mods.size(); ++i) {
        const Rep& x = r_mods[i];
        const Rep mx = restrict_to_factor(ext->F(triangular_module(*tri, x, Rep::zero(pa.right))), pa.right, pa.right_vertex, pa.right_arrow);
        const Rep q = projective_cover(mx).source.rep;
        const bool x_rigid = is_tau_rigid(x), x_stt = is_support_tau_tilting_module(x);
        for (std::size_t j = 0; j < s_mods.size(); ++j) {
          const Rep& y = s_mods[j];
          const Cell& cell = cells[i * s_mods.size() + j];
          const auto instance = [&] { return "(X, Y) = (" + rl(x) + ", " + sl(y) + ")"; };
          const bool mx_tau = hom_to_tau_vanishes(mx, y);
          const bool q_vanish = hom_dim(q, y) == 0;
          tt.biconditional(cell.t_rigid, x_rigid && sf[j].tau_rigid && mx_tau, instance);
          tz.biconditional(cell.z_rigid, x_rigid && sf[j].tau_rigid && q_vanish, instance);
          ts.biconditional(cell.t_stt, x_stt && sf[j].stt && mx_tau && hom_dim(sf[j].vp, mx) == 0, instance);
          tzs.biconditional(cell.z_stt, x_stt && sf[j].stt && q_vanish, instance);
        }
      }
      for (auto* x : {&tcok, &tt, &tz, &ts, &tzs}) rep.verdicts.push_back(x->done());

      // status table over support tau-tilting X and Y, zero included
      std::vector<Rep> r_stt, s_stt;
      for (const auto& s : support_tau_tilting_search(pa.left, [&] {
             std::vector<Rep> v;
             for (const auto& x : r_ind)
               if (is_tau_rigid(x)) v.push_back(x);
             return v;
           }()))
        r_stt.push_back(s.module);
      for (const auto& s : support_tau_tilting_search(pa.right, [&] {
             std::vector<Rep> v;
             for (const auto& x : s_ind)
               if (is_tau_rigid(x)) v.push_back(x);
             return v;
           }()))
        s_stt.push_back(s.module);
      for (char fn : {'T', 'Z'}) {
        for (const auto& x : r_stt) {
          for (const auto& y : s_stt) {
            const Rep w = triangular_module(*tri, x, y);
            const PairMod p = fn == 'T' ? functor_T(ext, w) : functor_Z(ext, w);
            rep.triangular_table.push_back({fn, x, y, rl(x), sl(y), pair_is_support_tau_tilting_module(p)});
          }
        }
      }
    }

    rep.verdicts.push_back(tc.done());
    rep.verdicts.push_back(zc.done());
  }

  // ---- the regular module
  {
    Tally t("regular-module-is-T(A)", "Lambda is isomorphic to T(A) as a module, hence |Lambda| = |A|");
    const PairMod lam = regular_pair(ext);
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    const PairMod ta = functor_T(ext, projective_sum(a, all).rep);
    t.holds(pair_isomorphic(lam, ta) && pair_count_summands(lam) == n, [&] { return "Lambda is not isomorphic to T(A) or |Lambda| != |A|"; });
    rep.verdicts.push_back(t.done());
  }
  return rep;
}

VerificationReport verify_theorems(const Algebra& a, const Bimodule& m, const EnumConfig& cfg) {
  if (!(m.algebra == a)) throw EnumError("the bimodule lives over a different algebra");
  return verify_theorems(TrivialExtension::create(m), cfg);
}

}  // namespace taucrest
