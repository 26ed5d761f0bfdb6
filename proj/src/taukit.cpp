#include "taucrest/taukit.hpp"

#include <algorithm>

namespace taucrest {

std::vector<std::vector<Mat>> presentation_coefficients(const Presentation& p) {
  const Algebra& a = p.p0.rep.algebra();
  const auto& w = p.p0.vertices;
  const auto& v = p.p1.vertices;
  std::vector<std::vector<Mat>> c(w.size(), std::vector<Mat>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Mat img = generator_image(p.p1, p.f, k);  // in (P0)_{v_k}
    for (std::size_t l = 0; l < w.size(); ++l) {
      const Mat comp = p.p0.parts.proj[l].blocks[v[k]] * img;  // coordinates on paths w_l -> v_k
      const auto& paths = a.paths_between(w[l], v[k]);
      Mat elem(a.field(), a.dim(), 1);
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (!comp.entry_is_zero(j, 0)) elem.set(paths[j], 0, comp.at(j, 0));
      }
      c[l][k] = std::move(elem);
    }
  }
  return c;
}

namespace {

// Action of the element c in e_t A e_s on Y, as a map Y_s -> Y_t.
Mat element_block(const Rep& y, const Mat& c, std::size_t s, std::size_t t) {
  const Algebra& a = y.algebra();
  Mat out(y.field(), y.dim(t), y.dim(s));
  for (auto b : a.paths_between(s, t)) {
    if (!c.entry_is_zero(b, 0)) out.add_scaled(y.path_matrix(a.basis_paths()[b], s), c.at(b, 0));
  }
  return out;
}

}  // namespace

bool presentation_hom_surjective(const Presentation& p, const Rep& y) {
  const auto& w = p.p0.vertices;
  const auto& v = p.p1.vertices;
  std::size_t rows = 0, cols = 0;
  for (auto vk : v) rows += y.dim(vk);
  if (rows == 0) return true;
  for (auto wl : w) cols += y.dim(wl);
  // Hom(P0,Y) = sum of Y_{w_l}; Hom(P1,Y) = sum of Y_{v_k}; block (k,l) is the action of c_lk.
  const auto c = presentation_coefficients(p);
  Mat m(y.field(), rows, cols);
  std::size_t r = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::size_t col = 0;
    for (std::size_t l = 0; l < w.size(); ++l) {
      m.set_block(r, col, element_block(y, c[l][k], w[l], v[k]));
      col += y.dim(w[l]);
    }
    r += y.dim(v[k]);
  }
  return rank(m) == rows;
}

bool is_tau_rigid(const Rep& x) {
  if (x.is_zero()) return true;
  return presentation_hom_surjective(minimal_presentation(x), x);
}

bool hom_to_tau_vanishes(const Rep& y, const Rep& x) {
  if (x.is_zero() || y.is_zero()) return true;
  return presentation_hom_surjective(minimal_presentation(x), y);
}

Rep tau_oracle(const Rep& x) {
  const Algebra& a = x.algebra();
  if (x.is_zero()) return Rep::zero(a);
  const Presentation pres = minimal_presentation(x);
  if (pres.p1.vertices.empty()) return Rep::zero(a);
  const Algebra op = a.opposite();

  // Hom(-, A) turns P(w) into the right module e_w A = P^op(w) and the map
  // P1 -> P0 into  sum_l P^op(w_l) -> sum_k P^op(v_k),  generator l going to
  // sum_k reverse(c_lk).
  const auto c = presentation_coefficients(pres);
  const ProjectiveSum src = projective_sum(op, pres.p0.vertices);
  const ProjectiveSum dst = projective_sum(op, pres.p1.vertices);
  std::vector<Mat> images;
  for (std::size_t l = 0; l < pres.p0.vertices.size(); ++l) {
    const std::size_t wl = pres.p0.vertices[l];
    Mat img(op.field(), dst.rep.dim(wl), 1);
    for (std::size_t k = 0; k < pres.p1.vertices.size(); ++k) {
      const std::size_t vk = pres.p1.vertices[k];
      Mat rev(op.field(), op.dim(), 1);
      for (std::size_t b = 0; b < a.dim(); ++b) {
        if (c[l][k].entry_is_zero(b, 0)) continue;
        Path p = a.basis_paths()[b];
        std::reverse(p.begin(), p.end());
        Mat coords(op.field(), op.dim(), 1);
        if (p.empty()) coords.set(op.vertex_element(a.source(b)), 0, 1L);
        else coords = op.coords(p);
        rev.add_scaled(coords, c[l][k].at(b, 0));
      }
      const auto& paths = op.paths_between(vk, wl);
      Mat local(op.field(), paths.size(), 1);
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (!rev.entry_is_zero(paths[j], 0)) local.set(j, 0, rev.at(paths[j], 0));
      }
      img = img + dst.parts.inj[k].blocks[wl] * local;
    }
    images.push_back(std::move(img));
  }
  const RepMap g = map_from_projective_sum(src, dst.rep, images);
  const Rep tr = cokernel(g).rep;

  std::vector<Mat> arrows;
  for (std::size_t k = 0; k < a.arrow_count(); ++k) arrows.push_back(transpose(tr.arrow(k)));
  return Rep::make(a, tr.dims(), std::move(arrows));
}

TauRigidPair is_tau_rigid_pair(const Rep& x, const Rep& p) {
  TauRigidPair r{x, p, false, {}};
  if (!is_tau_rigid(x)) {
    r.witness = "X is not tau-rigid";
  } else if (!is_projective(p)) {
    r.witness = "P is not projective";
  } else if (hom_dim(p, x) != 0) {
    r.witness = "Hom(P,X) != 0";
  } else {
    r.certified = true;
  }
  return r;
}

SttPair is_support_tau_tilting_pair(const Rep& x, const Rep& p) {
  SttPair s;
  s.pair = is_tau_rigid_pair(x, p);
  s.count_x = count_summands(x);
  s.count_p = count_summands(p);
  s.count_a = x.algebra().vertex_count();
  s.accepted = s.pair.certified && s.count_x + s.count_p == s.count_a;
  if (s.pair.certified && !s.accepted) {
    s.pair.witness = "|X| + |P| = " + std::to_string(s.count_x + s.count_p) + " != |A| = " + std::to_string(s.count_a);
  }
  return s;
}

Rep vanishing_projective(const Rep& x) {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    if (x.dim(v) == 0) vs.push_back(v);
  }
  return projective_sum(x.algebra(), vs).rep;
}

bool is_support_tau_tilting_module(const Rep& x) {
  if (!is_tau_rigid(x)) return false;
  std::size_t zeros = 0;
  for (auto d : x.dims()) zeros += d == 0;
  return count_summands(x) + zeros == x.algebra().vertex_count();
}

}  // namespace taucrest
