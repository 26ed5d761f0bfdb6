#include "doctest.h"
#include "fixtures.hpp"

#include "taucrest/taukit.hpp"
#include "taucrest/trivext.hpp"

using namespace taucrest;

namespace {

ExtPtr a2_dual() { return TrivialExtension::create(dual_bimodule(fx::a2())); }

}  // namespace

TEST_CASE("tensor functor sizes") {
  const Algebra a = fx::a2();
  const ExtPtr d = TrivialExtension::create(dual_bimodule(a));
  const ExtPtr r = TrivialExtension::create(regular_bimodule(a));
  for (const Rep& x : {projective_module(a, 0), projective_module(a, 1), simple_module(a, 0), simple_module(a, 1)}) {
    CHECK(d->F(x).total_dim() == tensor_dim_by_rank(d->bimodule(), x));
    CHECK(is_isomorphic(r->F(x), x));
  }
  CHECK(d->F(Rep::zero(a)).is_zero());
  // D(A) (x) P(i) = D(A) e_i = D(e_i A)
  CHECK(is_isomorphic(d->F(projective_module(a, 0)), injective_module(a, 0)));
  CHECK(is_isomorphic(d->F(projective_module(a, 1)), injective_module(a, 1)));
  CHECK(d->F(simple_module(a, 0)).is_zero());
}

TEST_CASE("F is a functor") {
  std::mt19937_64 rng(2);
  const Algebra a = fx::nakayama2();
  const ExtPtr e = TrivialExtension::create(dual_bimodule(a));
  const Rep x = fx::scramble(direct_sum(a, {projective_module(a, 0), simple_module(a, 1)}).sum, rng);
  const Rep y = fx::scramble(direct_sum(a, {projective_module(a, 0), projective_module(a, 1)}).sum, rng);
  const auto hxy = hom_basis(x, y), hyx = hom_basis(y, x);
  REQUIRE(!hxy.empty());
  REQUIRE(!hyx.empty());
  for (const auto& f : hxy)
    for (const auto& g : hyx) {
      CHECK(e->F(compose(g, f)) == compose(e->F(g), e->F(f)));
      CHECK(functor_T(e, compose(g, f)).f == compose(functor_T(e, g), functor_T(e, f)).f);
    }
  CHECK(e->F(RepMap::identity(x)) == RepMap::identity(e->F(x)));
}

TEST_CASE("T, U, C, Z on objects") {
  std::mt19937_64 rng(4);
  const ExtPtr e = a2_dual();
  const Algebra& a = e->algebra();
  const Rep n = fx::scramble(direct_sum(a, {projective_module(a, 0), simple_module(a, 0), simple_module(a, 1)}).sum, rng);
  const PairMod t = functor_T(e, n);
  CHECK_NOTHROW(PairMod::make(e, t.x, t.alpha));
  CHECK(t.total_dim() == n.total_dim() + e->F(n).total_dim());
  CHECK(is_isomorphic(functor_C(t).rep, n));
  CHECK(functor_U(functor_Z(e, n)).key() == n.key());
  CHECK(functor_C(functor_Z(e, n)).rep.total_dim() == n.total_dim());
  CHECK(is_minimal_epimorphism(t_to_z(e, n)));
  CHECK(is_minimal_epimorphism(unit_to_ZC(t)));
  CHECK(PairMod::zero(e).is_zero());
}

TEST_CASE("pair structure maps are validated") {
  const ExtPtr e = TrivialExtension::create(regular_bimodule(fx::a2()));
  const Rep p1 = projective_module(e->algebra(), 0);
  // alpha = identity on F(P1) = P1 is not nilpotent
  const RepMap id = RepMap::from_total(e->F(p1), p1, Mat::identity(e->algebra().field(), 2));
  CHECK_THROWS_AS(PairMod::make(e, p1, id), PairError);
}

TEST_CASE("pair Hom and the adjunction with T") {
  const ExtPtr e = a2_dual();
  const Algebra& a = e->algebra();
  const Rep p1 = projective_module(a, 0), s2 = simple_module(a, 1);
  const PairMod t1 = functor_T(e, p1);
  const PairMod q = functor_T(e, direct_sum(a, {p1, s2}).sum);
  CHECK(pair_hom_dim(t1, q) == hom_dim(p1, q.x));
  CHECK(pair_hom_dim(t1, functor_Z(e, s2)) == hom_dim(p1, s2));
  for (const auto& h : pair_hom_basis(q, q)) CHECK(h.commutes());
}

TEST_CASE("regular module is T(A)") {
  for (const ExtPtr& e : {a2_dual(), TrivialExtension::create(regular_bimodule(fx::nakayama2()))}) {
    const Algebra& a = e->algebra();
    std::vector<std::size_t> all;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) all.push_back(v);
    const PairMod lam = regular_pair(e);
    CHECK(lam.total_dim() == e->dim());
    CHECK(pair_isomorphic(lam, functor_T(e, projective_sum(a, all).rep)));
    CHECK(pair_count_summands(lam) == a.vertex_count());
  }
}

TEST_CASE("trivial extension of A_2 by D(A)") {
  const ExtPtr e = a2_dual();
  const Algebra& a = e->algebra();
  const Rep p1 = projective_module(a, 0), p2 = projective_module(a, 1), s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  const PairMod tp1 = functor_T(e, p1), tp2 = functor_T(e, p2), ts1 = functor_T(e, s1), zs2 = functor_Z(e, s2);
  CHECK(pair_is_projective(tp1));
  CHECK(pair_is_projective(tp2));
  CHECK(pair_is_indecomposable(tp1));
  CHECK(pair_is_indecomposable(zs2));
  CHECK(pair_isomorphic(ts1, functor_Z(e, s1)));
  CHECK_FALSE(pair_is_projective(zs2));
  CHECK(pair_is_tau_rigid(ts1));
  CHECK(pair_is_tau_rigid(zs2));
  CHECK(pair_is_tau_rigid(tp1));

  const PairMod mixed = pair_direct_sum(e, {tp2, zs2}).sum;
  CHECK(pair_is_support_tau_tilting_module(mixed));
  CHECK_FALSE(is_T_form(mixed));
  CHECK_FALSE(is_Z_form(mixed));
  CHECK(is_T_form(tp1));
  CHECK(is_Z_form(zs2));
  const PairSttResult r = pair_support_tau_tilting(pair_direct_sum(e, {tp1, tp2}).sum, PairMod::zero(e));
  CHECK(r.accepted);
  CHECK(r.count_x == 2);
}

TEST_CASE("pair presentation of T(S(1))") {
  const ExtPtr e = a2_dual();
  const Algebra& a = e->algebra();
  const PairPresentation p = pair_minimal_presentation(functor_T(e, simple_module(a, 0)));
  CHECK(p.c0.base.vertices == std::vector<std::size_t>{0});
  CHECK(p.c1.base.vertices == std::vector<std::size_t>{1});
  CHECK(p.f.commutes());
  CHECK(compose(p.c0.map, p.f).is_zero());
}

TEST_CASE("presentation closed forms") {
  std::mt19937_64 rng(8);
  const ExtPtr e = TrivialExtension::create(dual_bimodule(fx::nakayama2()));
  const Algebra& a = e->algebra();
  const Rep x = fx::scramble(direct_sum(a, {simple_module(a, 0), radical(projective_module(a, 1)).rep}).sum, rng);
  // T
  const Presentation ap = minimal_presentation(x);
  const PairPresentation tp = pair_minimal_presentation(functor_T(e, x));
  CHECK(presentations_isomorphic(tp.f, tp.c0.map, functor_T(e, ap.f), functor_T(e, ap.cover)));
  // Z
  const ZPresentation z = z_presentation(e, x);
  CHECK(z.f.commutes());
  CHECK(z.cover.commutes());
  CHECK(compose(z.cover, z.f).is_zero());
  const PairPresentation zp = pair_minimal_presentation(functor_Z(e, x));
  CHECK(presentations_isomorphic(zp.f, zp.c0.map, z.f, z.cover));
}

TEST_CASE("triangular view") {
  const TriangularSetup t = triangular_self(fx::a2());
  const ExtPtr e = TrivialExtension::create(t.bimodule);
  const Algebra& r = t.bimodule.triangular->product.left;
  const Algebra& s = t.bimodule.triangular->product.right;
  const Rep x = projective_module(r, 0), y = simple_module(s, 1);
  const Rep xy = triangular_module(*t.bimodule.triangular, x, y);
  const TriangularView v = triangular_view(functor_T(e, xy));
  CHECK(is_isomorphic(v.x, x));
  // T((X, Y)) = (X, Y + M (x) X) with M = A: Y + X
  CHECK(is_isomorphic(v.y, direct_sum(s, {y, restrict_to_factor(extend_from_factor(x, t.algebra, t.bimodule.triangular->product.right_vertex, t.bimodule.triangular->product.right_arrow), s, t.bimodule.triangular->product.right_vertex, t.bimodule.triangular->product.right_arrow)}).sum));
  CHECK(v.mx.total_dim() == 2);
}
