#include "taucrest/trivext.hpp"

#include <mutex>
#include <random>

namespace taucrest {

namespace {

// Generators of A as an algebra: vertex idempotents, then arrows.
std::vector<std::size_t> generator_elements(const Algebra& a) {
  std::vector<std::size_t> g;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) g.push_back(a.vertex_element(v));
  for (std::size_t k = 0; k < a.arrow_count(); ++k) g.push_back(a.arrow_element(k));
  return g;
}

// Columns span the balancing relations m.a (x) x - m (x) a.x in M (x)_K X.
Mat balancing_span(const Bimodule& m, const Rep& x) {
  const Field f = x.field();
  const std::size_t n = m.dim * x.total_dim();
  std::vector<Mat> parts;
  const Mat ix = Mat::identity(f, x.total_dim());
  const Mat im = Mat::identity(f, m.dim);
  for (auto g : generator_elements(m.algebra)) {
    parts.push_back(kron(m.right[g], ix) - kron(im, x.element_matrix(g)));
  }
  return hstack(f, n, parts);
}

PairMod raw_pair(const ExtPtr& ext, Rep x, RepMap alpha) {
  PairMod p;
  p.ext = ext;
  p.x = std::move(x);
  p.alpha = std::move(alpha);
  return p;
}

void check_same_ext(const PairMod& p, const PairMod& q, const char* what) {
  if (p.ext != q.ext) throw PairError(std::string(what) + ": modules over different trivial extensions");
}

}  // namespace

// ------------------------------------------------------------ tensor functor

ExtPtr TrivialExtension::create(Bimodule m) {
  m.validate();
  return ExtPtr(new TrivialExtension(std::move(m)));
}

std::shared_ptr<const TensorData> TrivialExtension::tensor(const Rep& x) const {
  if (!(x.algebra() == m_.algebra)) throw PairError("tensor: module over a different algebra");
  const std::string key = x.key();
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto t = compute_tensor(x);
  std::unique_lock lock(mutex_);
  return cache_.emplace(key, std::move(t)).first->second;
}

std::size_t TrivialExtension::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

std::shared_ptr<const TensorData> TrivialExtension::compute_tensor(const Rep& x) const {
  const Algebra& a = m_.algebra;
  const Field f = a.field();
  const std::size_t dm = m_.dim, dx = x.total_dim(), n = dm * dx;
  auto t = std::make_shared<TensorData>();
  if (n == 0) {
    t->fx = Rep::zero(a);
    t->q = Mat(f, 0, n);
    t->s = Mat(f, n, 0);
    return t;
  }
  const Mat q0 = quotient_map(balancing_span(m_, x), n);
  const Mat s0 = right_inverse(q0);
  const Mat ix = Mat::identity(f, dx);
  std::vector<Mat> vertex_actions, arrow_actions;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) vertex_actions.push_back(q0 * kron(m_.left[a.vertex_element(v)], ix) * s0);
  for (std::size_t k = 0; k < a.arrow_count(); ++k) arrow_actions.push_back(q0 * kron(m_.left[a.arrow_element(k)], ix) * s0);
  if (q0.rows() == 0) {
    t->fx = Rep::zero(a);
    t->q = q0;
    t->s = s0;
    return t;
  }
  RebasedRep rb = rep_from_action(a, vertex_actions, arrow_actions);
  const Mat vinv = *inverse(rb.basis);
  t->fx = std::move(rb.rep);
  t->q = vinv * q0;
  t->s = s0 * rb.basis;
  return t;
}

RepMap TrivialExtension::F(const RepMap& f) const {
  const auto tx = tensor(f.source);
  const auto ty = tensor(f.target);
  const std::size_t dx = f.source.total_dim(), dy = f.target.total_dim();
  const Field fld = m_.algebra.field();
  Mat total(fld, ty->fx.total_dim(), tx->fx.total_dim());
  if (ty->fx.total_dim() != 0 && tx->fx.total_dim() != 0) {
    // q_Y (I_M (x) f) s_X, one M-basis block at a time
    const Mat ft = f.total();
    for (std::size_t m = 0; m < m_.dim; ++m) {
      const Mat qm = ty->q.block(0, m * dy, ty->q.rows(), dy);
      const Mat sm = tx->s.block(m * dx, 0, dx, tx->s.cols());
      total = total + qm * ft * sm;
    }
  }
  return RepMap::from_total(tx->fx, ty->fx, total);
}

std::size_t tensor_dim_by_rank(const Bimodule& m, const Rep& x) {
  const std::size_t n = m.dim * x.total_dim();
  if (n == 0) return 0;
  return n - rank(balancing_span(m, x));
}

// ------------------------------------------------------------ pairs

PairMod PairMod::make(const ExtPtr& ext, const Rep& x, const RepMap& alpha) {
  const Rep fx = ext->F(x);
  if (alpha.source.dims() != fx.dims() || alpha.target.dims() != x.dims()) {
    throw PairError("pair: structure map has the wrong shape (" + alpha.source.dims_string() + " -> " +
                    alpha.target.dims_string() + ", expected " + fx.dims_string() + " -> " + x.dims_string() + ")");
  }
  RepMap a = RepMap{fx, x, alpha.blocks};
  if (!a.intertwines()) throw PairError("pair: structure map is not A-linear");
  if (!compose(a, ext->F(a)).is_zero()) throw PairError("pair: structure map is not nilpotent (alpha F(alpha) != 0)");
  return raw_pair(ext, x, std::move(a));
}

PairMod PairMod::make(const ExtPtr& ext, const Rep& x, const Mat& alpha_total) {
  return make(ext, x, RepMap::from_total(ext->F(x), x, alpha_total));
}

PairMod PairMod::zero(const ExtPtr& ext) { return functor_Z(ext, Rep::zero(ext->algebra())); }

std::string PairMod::key() const { return x.key() + "|" + alpha.total().to_string(); }

PairMap PairMap::make(const PairMod& p, const PairMod& q, const RepMap& f) {
  check_same_ext(p, q, "pair map");
  PairMap m{p, q, RepMap{p.x, q.x, f.blocks}};
  if (!m.f.intertwines()) throw PairError("pair map: not A-linear");
  if (!m.commutes()) throw PairError("pair map: f alpha != beta F(f)");
  return m;
}

PairMap PairMap::identity(const PairMod& p) { return PairMap{p, p, RepMap::identity(p.x)}; }
PairMap PairMap::zero(const PairMod& p, const PairMod& q) { return PairMap{p, q, RepMap::zero(p.x, q.x)}; }

bool PairMap::commutes() const {
  return compose(f, source.alpha) == compose(target.alpha, source.ext->F(f));
}

PairMap compose(const PairMap& g, const PairMap& f) { return PairMap{f.source, g.target, compose(g.f, f.f)}; }

// ------------------------------------------------------------ functors

DirectSum t_parts(const ExtPtr& ext, const Rep& n) { return direct_sum(ext->algebra(), {n, ext->F(n)}); }

namespace {

PairMod t_from_parts(const ExtPtr& ext, const DirectSum& ds) {
  return raw_pair(ext, ds.sum, compose(ds.inj[1], ext->F(ds.proj[0])));
}

}  // namespace

PairMod functor_T(const ExtPtr& ext, const Rep& n) { return t_from_parts(ext, t_parts(ext, n)); }

PairMap functor_T(const ExtPtr& ext, const RepMap& f) {
  const DirectSum a = t_parts(ext, f.source), b = t_parts(ext, f.target);
  RepMap g = compose(b.inj[0], compose(f, a.proj[0])) + compose(b.inj[1], compose(ext->F(f), a.proj[1]));
  return PairMap{t_from_parts(ext, a), t_from_parts(ext, b), std::move(g)};
}

Rep functor_U(const PairMod& p) { return p.x; }

PairMod functor_Z(const ExtPtr& ext, const Rep& n) { return raw_pair(ext, n, RepMap::zero(ext->F(n), n)); }

PairMap functor_Z(const ExtPtr& ext, const RepMap& f) {
  return PairMap{functor_Z(ext, f.source), functor_Z(ext, f.target), f};
}

QuotientRep functor_C(const PairMod& p) { return cokernel(p.alpha); }

PairMap unit_to_ZC(const PairMod& p) {
  const QuotientRep c = functor_C(p);
  return PairMap{p, functor_Z(p.ext, c.rep), c.projection};
}

PairMap t_to_z(const ExtPtr& ext, const Rep& n) {
  const DirectSum ds = t_parts(ext, n);
  return PairMap{t_from_parts(ext, ds), functor_Z(ext, n), ds.proj[0]};
}

// ------------------------------------------------------------ Hom

std::vector<PairMap> pair_hom_basis(const PairMod& p, const PairMod& q) {
  check_same_ext(p, q, "pair_hom_basis");
  const auto h = hom_basis(p.x, q.x);
  std::vector<PairMap> out;
  if (h.empty()) return out;
  const Field f = p.x.field();
  const std::size_t rows = q.x.total_dim() * p.ext->F(p.x).total_dim();
  if (rows == 0) {
    for (const auto& m : h) out.push_back(PairMap{p, q, m});
    return out;
  }
  // h alpha_p - alpha_q F(h) = 0
  const Mat ap = p.alpha.total(), aq = q.alpha.total();
  std::vector<Mat> cols;
  for (const auto& m : h) cols.push_back(flatten(m.total() * ap - aq * p.ext->F(m).total()));
  const Mat ker = kernel_basis(hstack(f, rows, cols));
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RepMap sum = RepMap::zero(p.x, q.x);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!ker.entry_is_zero(i, c)) sum = sum + h[i].scaled(ker.at(i, c));
    }
    out.push_back(PairMap{p, q, std::move(sum)});
  }
  return out;
}

std::size_t pair_hom_dim(const PairMod& p, const PairMod& q) { return pair_hom_basis(p, q).size(); }

DirectPairSum pair_direct_sum(const ExtPtr& ext, const std::vector<PairMod>& parts) {
  std::vector<Rep> xs;
  for (const auto& p : parts) xs.push_back(p.x);
  DirectPairSum out;
  out.parts = direct_sum(ext->algebra(), xs);
  const Rep& s = out.parts.sum;
  RepMap alpha = RepMap::zero(ext->F(s), s);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    alpha = alpha + compose(out.parts.inj[k], compose(parts[k].alpha, ext->F(out.parts.proj[k])));
  }
  out.sum = raw_pair(ext, s, std::move(alpha));
  return out;
}

SubPair sub_pair(const PairMod& p, const SubRep& s) {
  const RepMap fi = p.ext->F(s.inclusion);
  const Rep fs = fi.source;
  Mat as(p.x.field(), s.rep.total_dim(), fs.total_dim());
  if (as.rows() != 0 && as.cols() != 0) {
    auto sol = solve(s.inclusion.total(), compose(p.alpha, fi).total());
    if (!sol) throw PairError("sub_pair: submodule is not stable under the structure map");
    as = *sol;
  }
  SubPair out;
  out.pair = raw_pair(p.ext, s.rep, RepMap::from_total(fs, s.rep, as));
  out.inclusion = PairMap{out.pair, p, s.inclusion};
  return out;
}

SubPair pair_kernel(const PairMap& f) { return sub_pair(f.source, kernel(f.f)); }
SubPair pair_image(const PairMap& f) { return sub_pair(f.target, image(f.f)); }

QuotientPair pair_cokernel(const PairMap& f) {
  const PairMod& q = f.target;
  const QuotientRep c = cokernel(f.f);
  const RepMap fpi = q.ext->F(c.projection);  // surjective by right exactness
  const Rep fc = fpi.target;
  Mat beta(q.x.field(), c.rep.total_dim(), fc.total_dim());
  if (beta.rows() != 0 && beta.cols() != 0) {
    beta = c.projection.total() * q.alpha.total() * right_inverse(fpi.total());
  }
  QuotientPair out;
  out.pair = raw_pair(q.ext, c.rep, RepMap::from_total(fc, c.rep, beta));
  out.projection = PairMap{q, out.pair, c.projection};
  return out;
}

SubPair pair_radical(const PairMod& p) {
  const SubRep r = radical(p.x);
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < p.x.dims().size(); ++v) {
    bases.push_back(image_basis(hstack(p.x.field(), p.x.dim(v), {r.inclusion.blocks[v], p.alpha.blocks[v]})));
  }
  return sub_pair(p, subrep(p.x, bases));
}

bool is_minimal_epimorphism(const PairMap& f) {
  if (!f.f.is_surjective()) return false;
  const SubPair rad = pair_radical(f.source);
  for (std::size_t v = 0; v < f.f.blocks.size(); ++v) {
    const Mat k = kernel_basis(f.f.blocks[v]);
    if (k.cols() != 0 && !column_space_contains(rad.inclusion.f.blocks[v], k)) return false;
  }
  return true;
}

// ------------------------------------------------------------ projectives

PairCover pair_projective_cover(const PairMod& p) {
  const ExtPtr& ext = p.ext;
  const QuotientRep c = functor_C(p);
  const Cover cov = projective_cover(c.rep);
  // lift the cover of cok alpha along the quotient map using its sections
  std::vector<Mat> lifts;
  for (std::size_t k = 0; k < cov.source.vertices.size(); ++k) {
    const std::size_t v = cov.source.vertices[k];
    lifts.push_back(c.sections[v] * generator_image(cov.source, cov.map, k));
  }
  const RepMap q = map_from_projective_sum(cov.source, p.x, lifts);
  const DirectSum ds = t_parts(ext, cov.source.rep);
  PairCover out;
  out.base = cov.source;
  out.source = t_from_parts(ext, ds);
  RepMap w = compose(q, ds.proj[0]) + compose(p.alpha, compose(ext->F(q), ds.proj[1]));
  out.map = PairMap{out.source, p, std::move(w)};
  return out;
}

PairPresentation pair_minimal_presentation(const PairMod& p) {
  PairPresentation out;
  out.c0 = pair_projective_cover(p);
  const SubPair k = pair_kernel(out.c0.map);
  out.c1 = pair_projective_cover(k.pair);
  out.f = compose(k.inclusion, out.c1.map);
  return out;
}

bool presentations_isomorphic(const PairMap& f_a, const PairMap& cover_a, const PairMap& f_b, const PairMap& cover_b) {
  if (cover_a.target.key() != cover_b.target.key()) return false;
  const PairMod &t0a = cover_a.source, &t0b = cover_b.source, &t1a = f_a.source, &t1b = f_b.source;
  if (t0a.total_dim() != t0b.total_dim() || t1a.total_dim() != t1b.total_dim()) return false;
  if (t0a.total_dim() == 0) return t1a.total_dim() == 0;
  const Field fld = t0a.x.field();
  const auto h0 = pair_hom_basis(t0a, t0b);
  const auto h1 = pair_hom_basis(t1a, t1b);
  const std::size_t r1 = cover_a.target.total_dim() * t0a.total_dim();
  const std::size_t r2 = t0b.total_dim() * t1a.total_dim();
  // unknowns: coefficients of phi0 in h0, then of phi1 in h1
  std::vector<Mat> cols;
  for (const auto& h : h0) {
    cols.push_back(vstack(fld, 1, {flatten(compose(cover_b.f, h.f).total()), flatten(compose(h.f, f_a.f).total().scaled(Scalar(fld, -1L)))}));
  }
  for (const auto& k : h1) {
    cols.push_back(vstack(fld, 1, {Mat(fld, r1, 1), flatten(compose(f_b.f, k.f).total())}));
  }
  if (cols.empty()) return false;
  const Mat sys = hstack(fld, r1 + r2, cols);
  const Mat rhs = vstack(fld, 1, {flatten(cover_a.f.total()), Mat(fld, r2, 1)});
  const auto sol = solve(sys, rhs);
  if (!sol) return false;
  const Mat ker = kernel_basis(sys);
  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Mat x = *sol;
    if (attempt > 0) {
      for (std::size_t c = 0; c < ker.cols(); ++c) x = x + ker.column(c).scaled(Scalar(fld, static_cast<long>(rng() % 1000)));
    }
    RepMap phi0 = RepMap::zero(t0a.x, t0b.x), phi1 = RepMap::zero(t1a.x, t1b.x);
    for (std::size_t i = 0; i < h0.size(); ++i) {
      if (!x.entry_is_zero(i, 0)) phi0 = phi0 + h0[i].f.scaled(x.at(i, 0));
    }
    for (std::size_t j = 0; j < h1.size(); ++j) {
      if (!x.entry_is_zero(h0.size() + j, 0)) phi1 = phi1 + h1[j].f.scaled(x.at(h0.size() + j, 0));
    }
    if (phi0.is_iso() && phi1.is_iso()) return true;
    if (ker.cols() == 0) break;
  }
  return false;
}

ZPresentation z_presentation(const ExtPtr& ext, const Rep& x) {
  const Algebra& a = ext->algebra();
  ZPresentation z;
  z.base = minimal_presentation(x);
  const Rep fx = ext->F(x);
  z.q = projective_cover(fx);
  const RepMap fc = ext->F(z.base.cover);  // F(P0) -> F(X), onto
  std::vector<Mat> images;
  for (std::size_t k = 0; k < z.q.source.vertices.size(); ++k) {
    const std::size_t v = z.q.source.vertices[k];
    auto pre = solve(fc.blocks[v], generator_image(z.q.source, z.q.map, k));
    if (!pre) throw PairError("z_presentation: F of the cover is not onto");
    images.push_back(*pre);
  }
  z.r = map_from_projective_sum(z.q.source, fc.source, images);
  z.p1q = direct_sum(a, {z.base.p1.rep, z.q.source.rep});

  const DirectSum s = t_parts(ext, z.p1q.sum), t = t_parts(ext, z.base.p0.rep);
  const RepMap& pi_p1 = z.p1q.proj[0];
  const RepMap& pi_q = z.p1q.proj[1];
  RepMap g = compose(t.inj[0], compose(z.base.f, compose(pi_p1, s.proj[0])));
  g = g + compose(t.inj[1], compose(z.r, compose(pi_q, s.proj[0])));
  g = g + compose(t.inj[1], compose(ext->F(z.base.f), compose(ext->F(pi_p1), s.proj[1])));
  z.f = PairMap{t_from_parts(ext, s), t_from_parts(ext, t), std::move(g)};
  z.cover = PairMap{z.f.target, functor_Z(ext, x), compose(z.base.cover, t.proj[0])};
  return z;
}

bool pair_is_projective(const PairMod& p) {
  return pair_projective_cover(p).source.total_dim() == p.total_dim();
}

// ------------------------------------------------------------ tau

bool pair_hom_to_tau_vanishes(const PairMod& q, const PairMod& p) {
  check_same_ext(p, q, "pair_hom_to_tau_vanishes");
  if (p.is_zero() || q.is_zero()) return true;
  const PairPresentation pres = pair_minimal_presentation(p);
  if (pres.c1.source.is_zero()) return true;
  const std::size_t target = pair_hom_dim(pres.c1.source, q);
  if (target == 0) return true;
  std::vector<Mat> cols;
  for (const auto& h : pair_hom_basis(pres.c0.source, q)) cols.push_back(flatten(compose(h.f, pres.f.f).total()));
  if (cols.empty()) return false;
  return rank(hstack(q.x.field(), q.total_dim() * pres.c1.source.total_dim(), cols)) == target;
}

bool pair_is_tau_rigid(const PairMod& p) { return pair_hom_to_tau_vanishes(p, p); }

// ------------------------------------------------------------ decomposition

std::vector<Mat> PairTraits::end_basis(const PairMod& p) { return hom_totals(p, p); }

std::vector<Mat> PairTraits::hom_totals(const PairMod& p, const PairMod& q) {
  std::vector<Mat> out;
  for (const auto& h : pair_hom_basis(p, q)) out.push_back(h.f.total());
  return out;
}

PairMod PairTraits::kernel_of(const PairMod& p, const Mat& endo) {
  return pair_kernel(PairMap{p, p, RepMap::from_total(p.x, p.x, endo)}).pair;
}

PairMod PairTraits::image_of(const PairMod& p, const Mat& endo) {
  return pair_image(PairMap{p, p, RepMap::from_total(p.x, p.x, endo)}).pair;
}

std::string PairTraits::invariant(const PairMod& p) {
  return p.x.dims_string() + "/" + functor_C(p).rep.dims_string();
}

PairKS::Decomposition pair_decompose(const PairMod& p) { return PairKS::decompose(p); }

bool pair_is_indecomposable(const PairMod& p) {
  if (p.is_zero()) throw PairError("pair_is_indecomposable: the zero module is rejected");
  return PairKS::is_indecomposable(p);
}

bool pair_isomorphic(const PairMod& p, const PairMod& q) {
  check_same_ext(p, q, "pair_isomorphic");
  return PairKS::isomorphic(p, q);
}

std::size_t pair_count_summands(const PairMod& p) { return PairKS::count(p); }

// ------------------------------------------------------------ support tau-tilting

PairSttResult pair_support_tau_tilting(const PairMod& x, const PairMod& p) {
  check_same_ext(x, p, "pair_support_tau_tilting");
  PairSttResult r;
  r.tau_rigid = pair_is_tau_rigid(x);
  r.projective = pair_is_projective(p);
  r.hom_vanishes = pair_hom_dim(p, x) == 0;
  r.count_x = pair_count_summands(x);
  r.count_p = pair_count_summands(p);
  r.count_lambda = x.ext->vertex_count();
  if (!r.tau_rigid) r.witness = "X is not tau-rigid";
  else if (!r.projective) r.witness = "P is not projective";
  else if (!r.hom_vanishes) r.witness = "Hom(P,X) != 0";
  else if (r.count_x + r.count_p != r.count_lambda) {
    r.witness = "|X| + |P| = " + std::to_string(r.count_x + r.count_p) + " != |Lambda| = " + std::to_string(r.count_lambda);
  } else {
    r.accepted = true;
  }
  return r;
}

PairMod pair_vanishing_projective(const PairMod& p) {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < p.x.dims().size(); ++v) {
    if (p.x.dim(v) == 0) vs.push_back(v);
  }
  return functor_T(p.ext, projective_sum(p.ext->algebra(), vs).rep);
}

bool pair_is_support_tau_tilting_module(const PairMod& p) {
  if (!pair_is_tau_rigid(p)) return false;
  std::size_t zeros = 0;
  for (auto d : p.x.dims()) zeros += d == 0;
  return pair_count_summands(p) + zeros == p.ext->vertex_count();
}

// ------------------------------------------------------------ forms

PairMod regular_pair(const ExtPtr& ext) {
  const Algebra& a = ext->algebra();
  const Bimodule& m = ext->bimodule();
  const Field f = a.field();
  const std::size_t da = a.dim(), dm = m.dim, dw = da + dm;
  auto act = [&](std::size_t b) { return direct_sum_mat(a.left_mult(b), m.left[b]); };
  std::vector<Mat> vertex_actions, arrow_actions;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) vertex_actions.push_back(act(a.vertex_element(v)));
  for (std::size_t k = 0; k < a.arrow_count(); ++k) arrow_actions.push_back(act(a.arrow_element(k)));
  const RebasedRep rb = rep_from_action(a, vertex_actions, arrow_actions);
  const Rep& w = rb.rep;
  // mu(m (x) (b, m')) = (0, m.b) in the original coordinates of A + M
  Mat mu(f, dw, dm * dw);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t b = 0; b < da; ++b) {
      for (std::size_t r = 0; r < dm; ++r) {
        if (!m.right[b].entry_is_zero(r, i)) mu.set(da + r, i * dw + b, m.right[b].at(r, i));
      }
    }
  }
  const auto t = ext->tensor(w);
  Mat alpha(f, dw, t->fx.total_dim());
  if (alpha.cols() != 0) alpha = *inverse(rb.basis) * mu * kron(Mat::identity(f, dm), rb.basis) * t->s;
  return PairMod::make(ext, w, alpha);
}

bool is_T_form(const PairMod& p) { return pair_isomorphic(p, functor_T(p.ext, functor_C(p).rep)); }

bool is_Z_form(const PairMod& p) { return p.alpha.is_zero(); }

// ------------------------------------------------------------ lower triangular view

Rep triangular_module(const TriangularData& t, const Rep& x_r, const Rep& y_s) {
  const ProductAlgebra& pa = t.product;
  const Rep ex = extend_from_factor(x_r, pa.algebra, pa.left_vertex, pa.left_arrow);
  const Rep ey = extend_from_factor(y_s, pa.algebra, pa.right_vertex, pa.right_arrow);
  return direct_sum(pa.algebra, {ex, ey}).sum;
}

TriangularView triangular_view(const PairMod& p) {
  const auto& t = p.ext->bimodule().triangular;
  if (!t) throw PairError("triangular_view: the bimodule is not of triangular type");
  const ProductAlgebra& pa = t->product;
  TriangularView v;
  v.x = restrict_to_factor(p.x, pa.left, pa.left_vertex, pa.left_arrow);
  v.y = restrict_to_factor(p.x, pa.right, pa.right_vertex, pa.right_arrow);
  v.mx = restrict_to_factor(p.alpha.source, pa.right, pa.right_vertex, pa.right_arrow);
  std::vector<Mat> blocks;
  for (auto pv : pa.right_vertex) blocks.push_back(p.alpha.blocks[pv]);
  v.alpha = RepMap{v.mx, v.y, std::move(blocks)};
  return v;
}

}  // namespace taucrest
