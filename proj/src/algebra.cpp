#include "taucrest/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taucrest {

struct AlgebraData {
  AlgebraPresentation pres;
  Field field;

  // every path of length < L, in preference order
  std::vector<Path> all_paths;
  std::vector<Path> boundary;
  std::vector<std::size_t> all_src, all_tgt;
  std::map<std::pair<std::size_t, Path>, std::size_t> index;
  Mat reduction;  // dim x |all_paths|

  std::vector<Path> basis;
  std::vector<std::size_t> bsrc, btgt;
  std::vector<std::size_t> arrow_elem;
  std::vector<Mat> lmul, rmul;
  std::vector<std::vector<std::vector<std::size_t>>> between;  // [source][target]
};

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].label == label) return i;
  }
  return std::nullopt;
}

void Quiver::validate() const {
  if (vertices == 0) throw AlgebraError("quiver has no vertices");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    if (a.source >= vertices || a.target >= vertices) {
      throw AlgebraError("arrow '" + a.label + "' has an endpoint outside the vertex range");
    }
    if (a.label.empty()) throw AlgebraError("arrow with empty label");
    for (std::size_t j = 0; j < i; ++j) {
      if (arrows[j].label == a.label) throw AlgebraError("duplicate arrow label '" + a.label + "'");
    }
  }
}

namespace {

bool composable(const Quiver& q, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (q.arrows[p[i]].target != q.arrows[p[i + 1]].source) return false;
  }
  return true;
}

void validate_relations(const AlgebraPresentation& pres) {
  const auto& q = pres.quiver;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const auto& rel = pres.relations[r];
    const std::string where = "relation " + std::to_string(r + 1);
    if (rel.empty()) throw AlgebraError(where + " is empty");
    std::size_t s = 0, t = 0;
    for (std::size_t k = 0; k < rel.size(); ++k) {
      const auto& term = rel[k];
      if (term.path.size() < 2) throw AlgebraError(where + ": term of length < 2 (ideal would not be admissible)");
      for (auto a : term.path) {
        if (a >= q.arrows.size()) throw AlgebraError(where + ": unknown arrow index");
      }
      if (!composable(q, term.path)) throw AlgebraError(where + ": path is not composable");
      const std::size_t ts = q.arrows[term.path.front()].source;
      const std::size_t tt = q.arrows[term.path.back()].target;
      if (k == 0) {
        s = ts;
        t = tt;
      } else if (ts != s || tt != t) {
        throw AlgebraError(where + ": paths are not parallel");
      }
    }
  }
}

}  // namespace

Algebra Algebra::build(const AlgebraPresentation& pres, Field field) {
  pres.quiver.validate();
  validate_relations(pres);
  const std::size_t L = pres.nilpotency_bound;
  if (L < 2) throw AlgebraError("nilpotency bound must be at least 2");

  auto d = std::make_shared<AlgebraData>();
  d->pres = pres;
  d->field = field;
  const auto& q = pres.quiver;
  const std::size_t n = q.vertices;

  auto add_path = [&](std::size_t src, Path p) {
    const std::size_t tgt = p.empty() ? src : q.arrows[p.back()].target;
    d->index.emplace(std::make_pair(src, p), d->all_paths.size());
    d->all_paths.push_back(std::move(p));
    d->all_src.push_back(src);
    d->all_tgt.push_back(tgt);
  };

  for (std::size_t v = 0; v < n; ++v) add_path(v, {});
  std::vector<std::size_t> level;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    level.push_back(d->all_paths.size());
    add_path(q.arrows[a].source, {a});
  }
  for (std::size_t len = 2; len < L && !level.empty(); ++len) {
    std::vector<std::pair<Path, std::size_t>> next;
    for (auto idx : level) {
      const std::size_t end = d->all_tgt[idx];
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != end) continue;
        Path p = d->all_paths[idx];
        p.push_back(a);
        next.emplace_back(std::move(p), d->all_src[idx]);
      }
    }
    std::sort(next.begin(), next.end());
    level.clear();
    for (auto& [p, src] : next) {
      level.push_back(d->all_paths.size());
      add_path(src, std::move(p));
    }
  }

  for (auto idx : level) {
    if (d->all_paths[idx].size() + 1 != L) continue;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != d->all_tgt[idx]) continue;
      Path p = d->all_paths[idx];
      p.push_back(a);
      d->boundary.push_back(std::move(p));
    }
  }

  const std::size_t np = d->all_paths.size();
  // The ideal, truncated below length L: spanned by u*r*w.  Columns are laid
  // out in reverse preference order so that rref pivots land on the least
  // preferred paths, which then become the dependent ones.
  std::vector<Mat> rows;
  for (const auto& rel : pres.relations) {
    const std::size_t s = q.arrows[rel.front().path.front()].source;
    const std::size_t t = q.arrows[rel.front().path.back()].target;
    std::size_t min_len = L;
    for (const auto& term : rel) min_len = std::min(min_len, term.path.size());
    for (std::size_t w = 0; w < np; ++w) {
      if (d->all_tgt[w] != s) continue;
      for (std::size_t u = 0; u < np; ++u) {
        if (d->all_src[u] != t) continue;
        if (d->all_paths[w].size() + d->all_paths[u].size() + min_len >= L) continue;
        Mat row(field, 1, np);
        bool any = false;
        for (const auto& term : rel) {
          Path full = d->all_paths[w];
          full.insert(full.end(), term.path.begin(), term.path.end());
          full.insert(full.end(), d->all_paths[u].begin(), d->all_paths[u].end());
          if (full.size() >= L) continue;
          const std::size_t col = np - 1 - d->index.at({d->all_src[w], full});
          row.set(0, col, row.at(0, col) + Scalar(field, term.coeff));
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }

  std::vector<bool> dependent(np, false);
  RrefResult rr;
  if (!rows.empty()) {
    rr = rref(vstack(field, np, rows));
    for (auto c : rr.pivot_cols) dependent[np - 1 - c] = true;
  }
  std::vector<std::size_t> basis_pos(np, 0);
  std::vector<std::size_t> basis_to_all;
  for (std::size_t j = 0; j < np; ++j) {
    if (dependent[j]) continue;
    basis_pos[j] = basis_to_all.size();
    basis_to_all.push_back(j);
  }
  const std::size_t dim = basis_to_all.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (dependent[v]) throw AlgebraError("relations kill a vertex idempotent");
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (dependent[n + a]) throw AlgebraError("relations kill arrow '" + q.arrows[a].label + "'; ideal is not admissible");
  }

  d->reduction = Mat(field, dim, np);
  for (std::size_t j = 0; j < np; ++j) {
    if (!dependent[j]) d->reduction.set(basis_pos[j], j, 1L);
  }
  for (std::size_t i = 0; i < rr.rank; ++i) {
    const std::size_t pj = np - 1 - rr.pivot_cols[i];
    for (std::size_t c = 0; c < np; ++c) {
      const std::size_t j = np - 1 - c;
      if (dependent[j] || rr.matrix.entry_is_zero(i, c)) continue;
      d->reduction.set(basis_pos[j], pj, -rr.matrix.at(i, c));
    }
  }

  for (auto j : basis_to_all) {
    d->basis.push_back(d->all_paths[j]);
    d->bsrc.push_back(d->all_src[j]);
    d->btgt.push_back(d->all_tgt[j]);
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) d->arrow_elem.push_back(basis_pos[n + a]);

  d->between.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t b = 0; b < dim; ++b) d->between[d->bsrc[b]][d->btgt[b]].push_back(b);

  Algebra alg(d);
  // structure constants: column j of lmul[b] is b * basis_j
  auto product_coords = [&](std::size_t b, std::size_t c) {
    // b * c: c first, then b
    if (d->btgt[c] != d->bsrc[b]) return Mat(field, dim, 1);
    Path p = d->basis[c];
    p.insert(p.end(), d->basis[b].begin(), d->basis[b].end());
    if (p.size() >= L) return Mat(field, dim, 1);
    return d->reduction.column(d->index.at({d->bsrc[c], p}));
  };
  d->lmul.assign(dim, Mat(field, dim, dim));
  d->rmul.assign(dim, Mat(field, dim, dim));
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t c = 0; c < dim; ++c) {
      Mat bc = product_coords(b, c);
      d->lmul[b].set_block(0, c, bc);
      d->rmul[c].set_block(0, b, bc);
    }
  }
  return alg;
}

Field Algebra::field() const { return d_->field; }
std::size_t Algebra::dim() const { return d_->basis.size(); }
std::size_t Algebra::vertex_count() const { return d_->pres.quiver.vertices; }
std::size_t Algebra::arrow_count() const { return d_->pres.quiver.arrows.size(); }
const Quiver& Algebra::quiver() const { return d_->pres.quiver; }
const AlgebraPresentation& Algebra::presentation() const { return d_->pres; }
const std::vector<Path>& Algebra::basis_paths() const { return d_->basis; }
std::size_t Algebra::source(std::size_t b) const { return d_->bsrc.at(b); }
std::size_t Algebra::target(std::size_t b) const { return d_->btgt.at(b); }
std::size_t Algebra::arrow_element(std::size_t a) const { return d_->arrow_elem.at(a); }
const Mat& Algebra::left_mult(std::size_t b) const { return d_->lmul.at(b); }
const Mat& Algebra::right_mult(std::size_t b) const { return d_->rmul.at(b); }

const std::vector<Path>& Algebra::boundary_paths() const { return d_->boundary; }

const std::vector<std::size_t>& Algebra::paths_between(std::size_t v, std::size_t w) const { return d_->between.at(v).at(w); }

std::string Algebra::path_label(const Path& p, std::size_t start_vertex) const {
  if (p.empty()) return "e" + std::to_string(start_vertex + 1);
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += '.';
    s += d_->pres.quiver.arrows[*it].label;
  }
  return s;
}

std::string Algebra::basis_label(std::size_t b) const { return path_label(d_->basis.at(b), d_->bsrc.at(b)); }

Mat Algebra::coords(const Path& p) const {
  if (p.empty()) throw AlgebraError("coords: trivial paths are addressed by vertex_element");
  if (!composable(quiver(), p)) return Mat(field(), dim(), 1);
  if (p.size() >= d_->pres.nilpotency_bound) return Mat(field(), dim(), 1);
  const std::size_t src = quiver().arrows[p.front()].source;
  return d_->reduction.column(d_->index.at({src, p}));
}

Mat Algebra::multiply(const Mat& x, const Mat& y) const {
  Mat out(field(), dim(), 1);
  for (std::size_t b = 0; b < dim(); ++b) {
    if (x.entry_is_zero(b, 0)) continue;
    out.add_scaled(d_->lmul[b] * y, x.at(b, 0));
  }
  return out;
}

Algebra Algebra::opposite() const {
  AlgebraPresentation op = d_->pres;
  for (auto& a : op.quiver.arrows) std::swap(a.source, a.target);
  for (auto& rel : op.relations) {
    for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
  }
  return build(op, field());
}

// ------------------------------------------------------------ product

ProductAlgebra product_algebra(const Algebra& r, const Algebra& s) {
  if (!(r.field() == s.field())) throw FieldMismatchError("product_algebra: factors over different fields");
  ProductAlgebra out;
  out.left = r;
  out.right = s;
  AlgebraPresentation pres;
  const auto& qr = r.quiver();
  const auto& qs = s.quiver();
  pres.quiver.vertices = qr.vertices + qs.vertices;
  for (std::size_t v = 0; v < qr.vertices; ++v) out.left_vertex.push_back(v);
  for (std::size_t v = 0; v < qs.vertices; ++v) out.right_vertex.push_back(qr.vertices + v);
  for (std::size_t a = 0; a < qr.arrows.size(); ++a) {
    out.left_arrow.push_back(pres.quiver.arrows.size());
    pres.quiver.arrows.push_back(qr.arrows[a]);
  }
  for (std::size_t a = 0; a < qs.arrows.size(); ++a) {
    Arrow arr = qs.arrows[a];
    arr.source += qr.vertices;
    arr.target += qr.vertices;
    while (pres.quiver.arrow_index(arr.label)) arr.label += '\'';
    out.right_arrow.push_back(pres.quiver.arrows.size());
    pres.quiver.arrows.push_back(arr);
  }
  const std::size_t L = std::max(r.presentation().nilpotency_bound, s.presentation().nilpotency_bound);
  pres.nilpotency_bound = L;

  auto import = [&](const Algebra& f, const std::vector<std::size_t>& amap) {
    for (const auto& rel : f.presentation().relations) {
      Relation nr;
      for (const auto& term : rel) {
        Path p;
        for (auto a : term.path) p.push_back(amap[a]);
        nr.push_back({term.coeff, p});
      }
      pres.relations.push_back(nr);
    }
    // the factor's own truncation must survive a larger common bound
    const std::size_t lf = f.presentation().nilpotency_bound;
    if (lf >= L) return;
    std::vector<Path> level;
    for (std::size_t a = 0; a < f.arrow_count(); ++a) level.push_back({a});
    for (std::size_t len = 1; len < lf; ++len) {
      std::vector<Path> next;
      for (const auto& p : level) {
        for (std::size_t a = 0; a < f.arrow_count(); ++a) {
          if (f.quiver().arrows[a].source != f.quiver().arrows[p.back()].target) continue;
          Path np = p;
          np.push_back(a);
          next.push_back(np);
        }
      }
      level = std::move(next);
    }
    for (const auto& p : level) {
      Path mp;
      for (auto a : p) mp.push_back(amap[a]);
      pres.relations.push_back({{mpq_class(1), mp}});
    }
  };
  import(r, out.left_arrow);
  import(s, out.right_arrow);
  out.algebra = Algebra::build(pres, r.field());
  return out;
}

// ------------------------------------------------------------ bimodules

std::string to_string(BimoduleKind k) {
  switch (k) {
    case BimoduleKind::Regular: return "regular";
    case BimoduleKind::Dual: return "dual";
    case BimoduleKind::Zero: return "zero";
    case BimoduleKind::Triangular: return "triangular";
    case BimoduleKind::Custom: return "custom";
  }
  return "?";
}

void Bimodule::validate() const {
  const std::size_t d = algebra.dim();
  const Field f = algebra.field();
  if (left.size() != d || right.size() != d) throw AlgebraError("bimodule: one action matrix per algebra basis element required");
  for (std::size_t b = 0; b < d; ++b) {
    for (const Mat* m : {&left[b], &right[b]}) {
      if (!(m->field() == f)) throw FieldMismatchError("bimodule action over the wrong field");
      if (m->rows() != dim || m->cols() != dim) throw AlgebraError("bimodule: action matrix has the wrong shape");
    }
  }
  Mat lsum(f, dim, dim), rsum(f, dim, dim);
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
    lsum = lsum + left[v];
    rsum = rsum + right[v];
  }
  if (!lsum.is_identity()) throw AlgebraError("bimodule: left action is not unital");
  if (!rsum.is_identity()) throw AlgebraError("bimodule: right action is not unital");
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t c = 0; c < d; ++c) {
      const Mat bc = algebra.left_mult(b).column(c);
      Mat lexp(f, dim, dim), rexp(f, dim, dim);
      for (std::size_t k = 0; k < d; ++k) {
        if (bc.entry_is_zero(k, 0)) continue;
        lexp.add_scaled(left[k], bc.at(k, 0));
        rexp.add_scaled(right[k], bc.at(k, 0));
      }
      if (!(left[b] * left[c] == lexp)) {
        throw AlgebraError("bimodule: left action is not multiplicative at (" + algebra.basis_label(b) + ", " + algebra.basis_label(c) + ")");
      }
      if (!(right[c] * right[b] == rexp)) {
        throw AlgebraError("bimodule: right action is not multiplicative at (" + algebra.basis_label(b) + ", " + algebra.basis_label(c) + ")");
      }
      if (!(left[b] * right[c] == right[c] * left[b])) {
        throw AlgebraError("bimodule: left and right actions do not commute at (" + algebra.basis_label(b) + ", " + algebra.basis_label(c) + ")");
      }
    }
  }
}

std::string Bimodule::summary() const { return to_string(kind) + " (dim " + std::to_string(dim) + ")"; }

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m;
  m.algebra = a;
  m.dim = a.dim();
  m.kind = BimoduleKind::Regular;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    m.left.push_back(a.left_mult(b));
    m.right.push_back(a.right_mult(b));
  }
  return m;
}

Bimodule dual_bimodule(const Algebra& a) {
  // (b.f)(x) = f(x b) and (f.b)(x) = f(b x), in the dual basis
  Bimodule m;
  m.algebra = a;
  m.dim = a.dim();
  m.kind = BimoduleKind::Dual;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    m.left.push_back(transpose(a.right_mult(b)));
    m.right.push_back(transpose(a.left_mult(b)));
  }
  return m;
}

Bimodule zero_bimodule(const Algebra& a) {
  Bimodule m;
  m.algebra = a;
  m.dim = 0;
  m.kind = BimoduleKind::Zero;
  m.left.assign(a.dim(), Mat(a.field(), 0, 0));
  m.right.assign(a.dim(), Mat(a.field(), 0, 0));
  return m;
}

Bimodule custom_bimodule(const Algebra& a, const GeneratorActions& g) {
  const std::size_t n = a.vertex_count(), na = a.arrow_count();
  if (g.left_vertex.size() != n || g.right_vertex.size() != n || g.left_arrow.size() != na || g.right_arrow.size() != na) {
    throw AlgebraError("bimodule: action matrices must be given for every vertex and arrow on both sides");
  }
  auto check = [&](const Mat& m) {
    if (!(m.field() == a.field())) throw FieldMismatchError("bimodule action over the wrong field");
    if (m.rows() != g.dim || m.cols() != g.dim) {
      throw AlgebraError("bimodule: action matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(g.dim) + "x" + std::to_string(g.dim));
    }
  };
  for (const auto* v : {&g.left_vertex, &g.left_arrow, &g.right_vertex, &g.right_arrow}) {
    for (const auto& m : *v) check(m);
  }
  Bimodule m;
  m.algebra = a;
  m.dim = g.dim;
  m.kind = BimoduleKind::Custom;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const Path& p = a.basis_paths()[b];
    if (p.empty()) {
      m.left.push_back(g.left_vertex[a.source(b)]);
      m.right.push_back(g.right_vertex[a.source(b)]);
      continue;
    }
    Mat l = Mat::identity(a.field(), g.dim), r = Mat::identity(a.field(), g.dim);
    for (auto arrow : p) {
      l = g.left_arrow[arrow] * l;
      r = r * g.right_arrow[arrow];
    }
    m.left.push_back(l);
    m.right.push_back(r);
  }
  m.validate();
  return m;
}

TriangularSetup triangular_bimodule(const Algebra& r, const Algebra& s, const GeneratorActions& mg) {
  if (mg.left_vertex.size() != s.vertex_count() || mg.left_arrow.size() != s.arrow_count()) {
    throw AlgebraError("triangular bimodule: left action must be given on the generators of S");
  }
  if (mg.right_vertex.size() != r.vertex_count() || mg.right_arrow.size() != r.arrow_count()) {
    throw AlgebraError("triangular bimodule: right action must be given on the generators of R");
  }
  auto data = std::make_shared<TriangularData>();
  data->product = product_algebra(r, s);
  data->m_dim = mg.dim;
  const auto& pa = data->product;
  const Algebra& a = pa.algebra;
  const Mat zero(a.field(), mg.dim, mg.dim);
  GeneratorActions g;
  g.dim = mg.dim;
  g.left_vertex.assign(a.vertex_count(), zero);
  g.right_vertex.assign(a.vertex_count(), zero);
  g.left_arrow.assign(a.arrow_count(), zero);
  g.right_arrow.assign(a.arrow_count(), zero);
  for (std::size_t v = 0; v < s.vertex_count(); ++v) g.left_vertex[pa.right_vertex[v]] = mg.left_vertex[v];
  for (std::size_t x = 0; x < s.arrow_count(); ++x) g.left_arrow[pa.right_arrow[x]] = mg.left_arrow[x];
  for (std::size_t v = 0; v < r.vertex_count(); ++v) g.right_vertex[pa.left_vertex[v]] = mg.right_vertex[v];
  for (std::size_t x = 0; x < r.arrow_count(); ++x) g.right_arrow[pa.left_arrow[x]] = mg.right_arrow[x];
  TriangularSetup out;
  out.algebra = a;
  out.bimodule = custom_bimodule(a, g);
  out.bimodule.kind = BimoduleKind::Triangular;
  out.bimodule.triangular = data;
  return out;
}

namespace {

GeneratorActions generators_of(const Algebra& a, const Bimodule& m) {
  GeneratorActions g;
  g.dim = m.dim;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    g.left_vertex.push_back(m.left[a.vertex_element(v)]);
    g.right_vertex.push_back(m.right[a.vertex_element(v)]);
  }
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    g.left_arrow.push_back(m.left[a.arrow_element(x)]);
    g.right_arrow.push_back(m.right[a.arrow_element(x)]);
  }
  return g;
}

}  // namespace

TriangularSetup triangular_self(const Algebra& a) { return triangular_bimodule(a, a, generators_of(a, regular_bimodule(a))); }

TriangularSetup triangular_dual(const Algebra& a) { return triangular_bimodule(a, a, generators_of(a, dual_bimodule(a))); }

}  // namespace taucrest
