#include "taucrest/repcat.hpp"

#include <sstream>

namespace taucrest {

struct RepData {
  Algebra algebra;
  std::vector<std::size_t> dims;
  std::vector<Mat> arrows;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
};

namespace {

// eq[r][c] += sign * src[sr][sc]
void accumulate(Mat& eq, std::size_t r, std::size_t c, const Mat& src, std::size_t sr, std::size_t sc, bool negate) {
  if (eq.field().is_prime()) {
    const std::uint32_t p = eq.field().characteristic();
    std::uint32_t v = src.residues()[sr * src.cols() + sc];
    if (v == 0) return;
    if (negate) v = p - v;
    auto& e = eq.residues()[r * eq.cols() + c];
    e = static_cast<std::uint32_t>((std::uint64_t{e} + v) % p);
    return;
  }
  const mpq_class& v = src.rationals()[sr * src.cols() + sc];
  if (sgn(v) == 0) return;
  auto& e = eq.rationals()[r * eq.cols() + c];
  if (negate) e -= v;
  else e += v;
}

void check_same_algebra(const Rep& x, const Rep& y, const char* what) {
  if (!(x.algebra() == y.algebra())) throw RepError(std::string(what) + ": modules over different algebras");
}

}  // namespace

// ------------------------------------------------------------ Rep

Rep Rep::assemble(const Algebra& a, std::vector<std::size_t> dims, std::vector<Mat> arrows) {
  if (dims.size() != a.vertex_count()) throw RepError("dimension vector has the wrong length");
  if (arrows.size() != a.arrow_count()) throw RepError("one matrix per arrow is required");
  const auto& q = a.quiver();
  for (std::size_t x = 0; x < arrows.size(); ++x) {
    const Mat& m = arrows[x];
    if (!(m.field() == a.field())) throw FieldMismatchError("arrow matrix over the wrong field");
    if (m.rows() != dims[q.arrows[x].target] || m.cols() != dims[q.arrows[x].source]) {
      throw RepError("matrix for arrow '" + q.arrows[x].label + "' has shape " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(dims[q.arrows[x].target]) + "x" +
                     std::to_string(dims[q.arrows[x].source]));
    }
  }
  auto d = std::make_shared<RepData>();
  d->algebra = a;
  d->dims = std::move(dims);
  d->arrows = std::move(arrows);
  for (auto n : d->dims) {
    d->offsets.push_back(d->total);
    d->total += n;
  }
  Rep r;
  r.d_ = d;
  return r;
}

std::string Rep::relation_violation() const {
  const Algebra& a = algebra();
  const auto& q = a.quiver();
  const auto& rels = a.presentation().relations;
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const auto& rel = rels[k];
    const std::size_t s = q.arrows[rel.front().path.front()].source;
    const std::size_t t = q.arrows[rel.front().path.back()].target;
    Mat acc(a.field(), dim(t), dim(s));
    for (const auto& term : rel) acc.add_scaled(path_matrix(term.path, s), Scalar(a.field(), term.coeff));
    if (!acc.is_zero()) return "relation " + std::to_string(k + 1) + " does not act as zero";
  }
  for (const auto& p : a.boundary_paths()) {
    if (!path_matrix(p, q.arrows[p.front()].source).is_zero()) {
      return "path " + a.path_label(p, q.arrows[p.front()].source) + " of length " +
             std::to_string(a.presentation().nilpotency_bound) + " does not act as zero";
    }
  }
  return {};
}

Rep Rep::make(const Algebra& a, std::vector<std::size_t> dims, std::vector<Mat> arrows) {
  Rep r = assemble(a, std::move(dims), std::move(arrows));
  const std::string why = r.relation_violation();
  if (!why.empty()) throw RepError("representation violates the relations: " + why);
  return r;
}

std::optional<Rep> Rep::try_make(const Algebra& a, std::vector<std::size_t> dims, std::vector<Mat> arrows) {
  Rep r = assemble(a, std::move(dims), std::move(arrows));
  if (!r.relation_violation().empty()) return std::nullopt;
  return r;
}

Rep Rep::zero(const Algebra& a) {
  std::vector<Mat> arrows;
  for (std::size_t x = 0; x < a.arrow_count(); ++x) arrows.emplace_back(a.field(), 0, 0);
  return make(a, std::vector<std::size_t>(a.vertex_count(), 0), std::move(arrows));
}

const Algebra& Rep::algebra() const { return d_->algebra; }
Field Rep::field() const { return d_->algebra.field(); }
const std::vector<std::size_t>& Rep::dims() const { return d_->dims; }
std::size_t Rep::dim(std::size_t v) const { return d_->dims.at(v); }
std::size_t Rep::total_dim() const { return d_ ? d_->total : 0; }
std::size_t Rep::offset(std::size_t v) const { return d_->offsets.at(v); }
const Mat& Rep::arrow(std::size_t a) const { return d_->arrows.at(a); }

Mat Rep::path_matrix(const Path& p, std::size_t start) const {
  Mat m = Mat::identity(field(), dim(start));
  for (auto a : p) m = d_->arrows[a] * m;
  return m;
}

Mat Rep::element_matrix(std::size_t b) const {
  const Algebra& a = algebra();
  Mat out(field(), total_dim(), total_dim());
  const std::size_t s = a.source(b), t = a.target(b);
  out.set_block(offset(t), offset(s), path_matrix(a.basis_paths()[b], s));
  return out;
}

Mat Rep::action(const Mat& element) const {
  Mat out(field(), total_dim(), total_dim());
  for (std::size_t b = 0; b < algebra().dim(); ++b) {
    if (!element.entry_is_zero(b, 0)) out.add_scaled(element_matrix(b), element.at(b, 0));
  }
  return out;
}

std::string Rep::dims_string() const {
  std::string s = "(";
  for (std::size_t v = 0; v < d_->dims.size(); ++v) {
    if (v) s += ',';
    s += std::to_string(d_->dims[v]);
  }
  return s + ")";
}

std::string Rep::key() const {
  std::string s = dims_string();
  for (const auto& m : d_->arrows) s += m.to_string();
  return s;
}

// ------------------------------------------------------------ RepMap

RepMap RepMap::zero(const Rep& x, const Rep& y) {
  check_same_algebra(x, y, "RepMap::zero");
  RepMap f{x, y, {}};
  for (std::size_t v = 0; v < x.dims().size(); ++v) f.blocks.emplace_back(x.field(), y.dim(v), x.dim(v));
  return f;
}

RepMap RepMap::identity(const Rep& x) {
  RepMap f{x, x, {}};
  for (std::size_t v = 0; v < x.dims().size(); ++v) f.blocks.push_back(Mat::identity(x.field(), x.dim(v)));
  return f;
}

RepMap RepMap::from_total(const Rep& x, const Rep& y, const Mat& total) {
  RepMap f{x, y, {}};
  for (std::size_t v = 0; v < x.dims().size(); ++v) f.blocks.push_back(total.block(y.offset(v), x.offset(v), y.dim(v), x.dim(v)));
  return f;
}

Mat RepMap::total() const {
  Mat t(source.field(), target.total_dim(), source.total_dim());
  for (std::size_t v = 0; v < blocks.size(); ++v) t.set_block(target.offset(v), source.offset(v), blocks[v]);
  return t;
}

bool RepMap::is_zero() const {
  for (const auto& b : blocks) {
    if (!b.is_zero()) return false;
  }
  return true;
}

bool RepMap::intertwines() const {
  const auto& q = source.algebra().quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto i = q.arrows[a].source, j = q.arrows[a].target;
    if (!(blocks[j] * source.arrow(a) == target.arrow(a) * blocks[i])) return false;
  }
  return true;
}

bool RepMap::is_surjective() const {
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (rank(blocks[v]) != target.dim(v)) return false;
  }
  return true;
}

bool RepMap::is_injective() const {
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (rank(blocks[v]) != source.dim(v)) return false;
  }
  return true;
}

RepMap RepMap::operator+(const RepMap& o) const {
  RepMap r = *this;
  for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] + o.blocks[v];
  return r;
}

RepMap RepMap::operator-(const RepMap& o) const {
  RepMap r = *this;
  for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] - o.blocks[v];
  return r;
}

RepMap RepMap::scaled(const Scalar& s) const {
  RepMap r = *this;
  for (auto& b : r.blocks) b = b.scaled(s);
  return r;
}

bool RepMap::operator==(const RepMap& o) const { return blocks == o.blocks; }

RepMap compose(const RepMap& g, const RepMap& f) {
  if (g.source.total_dim() != f.target.total_dim()) throw RepError("compose: maps are not composable");
  RepMap h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

// ------------------------------------------------------------ sums, subs, quotients

DirectSum direct_sum(const Algebra& a, const std::vector<Rep>& parts) {
  const std::size_t n = a.vertex_count();
  const Field f = a.field();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (!(p.algebra() == a)) throw RepError("direct_sum: summand over a different algebra");
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  const auto& q = a.quiver();
  std::vector<Mat> arrows;
  for (std::size_t x = 0; x < q.arrows.size(); ++x) {
    const auto i = q.arrows[x].source, j = q.arrows[x].target;
    Mat m(f, dims[j], dims[i]);
    std::size_t ri = 0, rj = 0;
    for (const auto& p : parts) {
      m.set_block(rj, ri, p.arrow(x));
      ri += p.dim(i);
      rj += p.dim(j);
    }
    arrows.push_back(std::move(m));
  }
  DirectSum s;
  s.sum = Rep::make(a, dims, std::move(arrows));
  std::vector<std::size_t> off(n, 0);
  for (const auto& p : parts) {
    RepMap in{p, s.sum, {}}, pr{s.sum, p, {}};
    for (std::size_t v = 0; v < n; ++v) {
      Mat b(f, dims[v], p.dim(v));
      b.set_block(off[v], 0, Mat::identity(f, p.dim(v)));
      pr.blocks.push_back(transpose(b));
      in.blocks.push_back(std::move(b));
      off[v] += p.dim(v);
    }
    s.inj.push_back(std::move(in));
    s.proj.push_back(std::move(pr));
  }
  return s;
}

RepMap map_from_sum(const DirectSum& s, const std::vector<RepMap>& components, const Rep& target) {
  RepMap out = RepMap::zero(s.sum, target);
  for (std::size_t k = 0; k < components.size(); ++k) out = out + compose(components[k], s.proj[k]);
  return out;
}

RepMap map_to_sum(const DirectSum& s, const std::vector<RepMap>& components, const Rep& source) {
  RepMap out = RepMap::zero(source, s.sum);
  for (std::size_t k = 0; k < components.size(); ++k) out = out + compose(s.inj[k], components[k]);
  return out;
}

SubRep subrep(const Rep& x, const std::vector<Mat>& bases) {
  const Algebra& a = x.algebra();
  const auto& q = a.quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto i = q.arrows[k].source, j = q.arrows[k].target;
    auto m = solve(bases[j], x.arrow(k) * bases[i]);
    if (!m) throw RepError("subrep: subspace is not invariant under arrow '" + q.arrows[k].label + "'");
    arrows.push_back(std::move(*m));
  }
  SubRep s;
  s.rep = Rep::make(a, dims, std::move(arrows));
  s.inclusion = RepMap{s.rep, x, bases};
  return s;
}

QuotientRep quotient(const Rep& x, const std::vector<Mat>& spans) {
  const Algebra& a = x.algebra();
  const auto& q = a.quiver();
  QuotientRep out;
  std::vector<Mat> proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < spans.size(); ++v) {
    proj.push_back(quotient_map(spans[v], x.dim(v)));
    out.sections.push_back(right_inverse(proj.back()));
    dims.push_back(proj.back().rows());
  }
  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto i = q.arrows[k].source, j = q.arrows[k].target;
    arrows.push_back(proj[j] * x.arrow(k) * out.sections[i]);
  }
  out.rep = Rep::make(a, dims, std::move(arrows));
  out.projection = RepMap{x, out.rep, std::move(proj)};
  return out;
}

SubRep kernel(const RepMap& f) {
  std::vector<Mat> bases;
  for (const auto& b : f.blocks) bases.push_back(kernel_basis(b));
  return subrep(f.source, bases);
}

SubRep image(const RepMap& f) {
  std::vector<Mat> bases;
  for (const auto& b : f.blocks) bases.push_back(image_basis(b));
  return subrep(f.target, bases);
}

QuotientRep cokernel(const RepMap& f) { return quotient(f.target, f.blocks); }

namespace {

std::vector<Mat> radical_spans(const Rep& x) {
  const auto& q = x.algebra().quiver();
  std::vector<Mat> spans;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    std::vector<Mat> parts;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
      if (q.arrows[k].target != v) continue;
      parts.push_back(x.arrow(k));
    }
    spans.push_back(parts.empty() ? Mat(x.field(), x.dim(v), 0) : hstack(x.field(), x.dim(v), parts));
  }
  return spans;
}

}  // namespace

SubRep radical(const Rep& x) {
  auto spans = radical_spans(x);
  for (auto& s : spans) s = image_basis(s);
  return subrep(x, spans);
}

QuotientRep top(const Rep& x) { return quotient(x, radical_spans(x)); }

// ------------------------------------------------------------ distinguished modules

Rep projective_module(const Algebra& a, std::size_t i) {
  if (i >= a.vertex_count()) throw RepError("projective_module: vertex out of range");
  const auto& q = a.quiver();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) dims.push_back(a.paths_between(i, v).size());
  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto s = q.arrows[k].source, t = q.arrows[k].target;
    const auto& cols = a.paths_between(i, s);
    const auto& rows = a.paths_between(i, t);
    const Mat& lm = a.left_mult(a.arrow_element(k));
    Mat m(a.field(), rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (!lm.entry_is_zero(rows[r], cols[c])) m.set(r, c, lm.at(rows[r], cols[c]));
      }
    }
    arrows.push_back(std::move(m));
  }
  return Rep::make(a, dims, std::move(arrows));
}

Rep simple_module(const Algebra& a, std::size_t i) {
  if (i >= a.vertex_count()) throw RepError("simple_module: vertex out of range");
  std::vector<std::size_t> dims(a.vertex_count(), 0);
  dims[i] = 1;
  std::vector<Mat> arrows;
  for (const auto& arr : a.quiver().arrows) arrows.emplace_back(a.field(), dims[arr.target], dims[arr.source]);
  return Rep::make(a, dims, std::move(arrows));
}

Rep injective_module(const Algebra& a, std::size_t i) {
  if (i >= a.vertex_count()) throw RepError("injective_module: vertex out of range");
  const auto& q = a.quiver();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) dims.push_back(a.paths_between(v, i).size());
  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto s = q.arrows[k].source, t = q.arrows[k].target;
    // (a.f)(q) = f(q a): entry [q][p] is the coefficient of p in q*a
    const auto& cols = a.paths_between(s, i);
    const auto& rows = a.paths_between(t, i);
    const Mat& rm = a.right_mult(a.arrow_element(k));
    Mat m(a.field(), rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (!rm.entry_is_zero(cols[c], rows[r])) m.set(r, c, rm.at(cols[c], rows[r]));
      }
    }
    arrows.push_back(std::move(m));
  }
  return Rep::make(a, dims, std::move(arrows));
}

RepMap map_from_projective(const Algebra& a, std::size_t i, const Rep& y, const Mat& element) {
  const Rep p = projective_module(a, i);
  RepMap f{p, y, {}};
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const auto& paths = a.paths_between(i, v);
    Mat b(a.field(), y.dim(v), paths.size());
    for (std::size_t c = 0; c < paths.size(); ++c) b.set_block(0, c, y.path_matrix(a.basis_paths()[paths[c]], i) * element);
    f.blocks.push_back(std::move(b));
  }
  return f;
}

ProjectiveSum projective_sum(const Algebra& a, const std::vector<std::size_t>& vertices) {
  ProjectiveSum p;
  p.vertices = vertices;
  std::vector<Rep> parts;
  for (auto v : vertices) parts.push_back(projective_module(a, v));
  p.parts = direct_sum(a, parts);
  p.rep = p.parts.sum;
  return p;
}

RepMap map_from_projective_sum(const ProjectiveSum& p, const Rep& y, const std::vector<Mat>& images) {
  const Algebra& a = y.algebra();
  std::vector<RepMap> comps;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    RepMap c = map_from_projective(a, p.vertices[k], y, images[k]);
    c.source = p.parts.proj[k].target;
    comps.push_back(std::move(c));
  }
  return map_from_sum(p.parts, comps, y);
}

Mat generator_image(const ProjectiveSum& p, const RepMap& f, std::size_t k) {
  const std::size_t v = p.vertices[k];
  // e_v is the first basis path of P(v) at v
  return f.blocks[v] * p.parts.inj[k].blocks[v].column(0);
}

Cover projective_cover(const Rep& x) {
  const QuotientRep t = top(x);
  std::vector<std::size_t> vertices;
  std::vector<Mat> images;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    for (std::size_t j = 0; j < t.rep.dim(v); ++j) {
      vertices.push_back(v);
      images.push_back(t.sections[v].column(j));
    }
  }
  Cover c;
  c.source = projective_sum(x.algebra(), vertices);
  c.map = map_from_projective_sum(c.source, x, images);
  return c;
}

Presentation minimal_presentation(const Rep& x) {
  Cover c0 = projective_cover(x);
  SubRep k = kernel(c0.map);
  Cover c1 = projective_cover(k.rep);
  Presentation p;
  p.p0 = c0.source;
  p.p1 = c1.source;
  p.cover = c0.map;
  p.f = compose(k.inclusion, c1.map);
  return p;
}

// ------------------------------------------------------------ Hom

std::vector<RepMap> hom_basis(const Rep& x, const Rep& y) {
  check_same_algebra(x, y, "hom_basis");
  const Algebra& a = x.algebra();
  const auto& q = a.quiver();
  const std::size_t n = a.vertex_count();
  std::vector<std::size_t> base(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) base[v + 1] = base[v] + y.dim(v) * x.dim(v);
  const std::size_t unknowns = base[n];
  std::vector<RepMap> out;
  if (unknowns == 0) return out;

  std::size_t rows = 0;
  for (const auto& arr : q.arrows) rows += y.dim(arr.target) * x.dim(arr.source);
  Mat eq(a.field(), rows, unknowns);
  std::size_t r0 = 0;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto i = q.arrows[k].source, j = q.arrows[k].target;
    const Mat& xa = x.arrow(k);
    const Mat& ya = y.arrow(k);
    const std::size_t dxi = x.dim(i), dxj = x.dim(j), dyi = y.dim(i), dyj = y.dim(j);
    // f_j X_a - Y_a f_i = 0
    for (std::size_t r = 0; r < dyj; ++r) {
      for (std::size_t c = 0; c < dxi; ++c) {
        const std::size_t row = r0 + r * dxi + c;
        for (std::size_t t = 0; t < dxj; ++t) accumulate(eq, row, base[j] + r * dxj + t, xa, t, c, false);
        for (std::size_t t = 0; t < dyi; ++t) accumulate(eq, row, base[i] + t * dxi + c, ya, r, t, true);
      }
    }
    r0 += dyj * dxi;
  }
  const Mat ker = kernel_basis(eq);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RepMap f{x, y, {}};
    const Mat col = ker.column(c);
    for (std::size_t v = 0; v < n; ++v) f.blocks.push_back(unflatten(col.block(base[v], 0, base[v + 1] - base[v], 1), y.dim(v), x.dim(v)));
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Rep& x, const Rep& y) { return hom_basis(x, y).size(); }

std::vector<Mat> hom_totals(const Rep& x, const Rep& y) {
  std::vector<Mat> out;
  for (const auto& f : hom_basis(x, y)) out.push_back(f.total());
  return out;
}

bool is_projective(const Rep& x) { return projective_cover(x).source.rep.total_dim() == x.total_dim(); }

Rep RepTraits::kernel_of(const Rep& x, const Mat& endo) { return kernel(RepMap::from_total(x, x, endo)).rep; }
Rep RepTraits::image_of(const Rep& x, const Mat& endo) { return image(RepMap::from_total(x, x, endo)).rep; }

bool is_isomorphic(const Rep& x, const Rep& y) {
  check_same_algebra(x, y, "is_isomorphic");
  return RepKS::isomorphic(x, y);
}

RepKS::Decomposition decompose(const Rep& x) { return RepKS::decompose(x); }

bool is_indecomposable(const Rep& x) {
  if (x.is_zero()) throw RepError("is_indecomposable: the zero module is rejected");
  return RepKS::is_indecomposable(x);
}

std::size_t count_summands(const Rep& x) { return RepKS::count(x); }

// ------------------------------------------------------------ helpers

RebasedRep rep_from_action(const Algebra& a, const std::vector<Mat>& vertex_actions, const std::vector<Mat>& arrow_actions) {
  const Field f = a.field();
  const std::size_t total = vertex_actions.empty() ? 0 : vertex_actions.front().rows();
  std::vector<Mat> bases;
  std::vector<std::size_t> dims, offs;
  std::size_t off = 0;
  for (const auto& e : vertex_actions) {
    bases.push_back(image_basis(e));
    dims.push_back(bases.back().cols());
    offs.push_back(off);
    off += dims.back();
  }
  if (off != total) throw RepError("rep_from_action: vertex idempotents do not decompose the space");
  const Mat v = hstack(f, total, bases);
  const auto vinv = inverse(v);
  if (!vinv) throw RepError("rep_from_action: vertex idempotents do not decompose the space");
  const auto& q = a.quiver();
  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto i = q.arrows[k].source, j = q.arrows[k].target;
    const Mat m = *vinv * arrow_actions[k] * v;
    arrows.push_back(m.block(offs[j], offs[i], dims[j], dims[i]));
  }
  return {Rep::make(a, dims, std::move(arrows)), v};
}

Rep restrict_to_factor(const Rep& x, const Algebra& factor, const std::vector<std::size_t>& vertex_map,
                       const std::vector<std::size_t>& arrow_map) {
  std::vector<std::size_t> dims;
  for (auto v : vertex_map) dims.push_back(x.dim(v));
  std::vector<Mat> arrows;
  for (auto k : arrow_map) arrows.push_back(x.arrow(k));
  return Rep::make(factor, dims, std::move(arrows));
}

Rep extend_from_factor(const Rep& x, const Algebra& product, const std::vector<std::size_t>& vertex_map,
                       const std::vector<std::size_t>& arrow_map) {
  std::vector<std::size_t> dims(product.vertex_count(), 0);
  for (std::size_t v = 0; v < vertex_map.size(); ++v) dims[vertex_map[v]] = x.dim(v);
  std::vector<Mat> arrows;
  for (const auto& arr : product.quiver().arrows) arrows.emplace_back(product.field(), dims[arr.target], dims[arr.source]);
  for (std::size_t k = 0; k < arrow_map.size(); ++k) arrows[arrow_map[k]] = x.arrow(k);
  return Rep::make(product, dims, std::move(arrows));
}

Rep change_basis(const Rep& x, const std::vector<Mat>& g) {
  const auto& q = x.algebra().quiver();
  std::vector<Mat> inv;
  for (const auto& m : g) {
    auto i = inverse(m);
    if (!i) throw RepError("change_basis: singular matrix");
    inv.push_back(*i);
  }
  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    arrows.push_back(g[q.arrows[k].target] * x.arrow(k) * inv[q.arrows[k].source]);
  }
  return Rep::make(x.algebra(), x.dims(), std::move(arrows));
}

}  // namespace taucrest
