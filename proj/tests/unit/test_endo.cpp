#include "doctest.h"
#include "fixtures.hpp"

#include "taucrest/endo.hpp"

using namespace taucrest;

namespace {

// Every element of span(basis) over F_p, as matrices.
std::vector<Mat> all_elements(const std::vector<Mat>& basis, std::uint32_t p) {
  std::vector<Mat> out;
  const std::size_t d = basis.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    Mat m(basis[0].field(), basis[0].rows(), basis[0].cols());
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= p) {
      if (c % p) m.add_scaled(basis[i], Scalar(basis[0].field(), static_cast<long>(c % p)));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// rad E = {x : x y nilpotent for every y in E}; returns its size.
std::size_t brute_radical_size(const std::vector<Mat>& basis, std::uint32_t p) {
  const auto elems = all_elements(basis, p);
  std::size_t count = 0;
  for (const auto& x : elems) {
    bool in = true;
    for (const auto& y : elems) {
      if (!is_nilpotent(x * y)) {
        in = false;
        break;
      }
    }
    count += in;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("radical agrees with brute force on endomorphism rings") {
  const Algebra a2 = fx::a2();
  const Algebra n2 = fx::nakayama2();
  const std::vector<Rep> mods = {
      direct_sum(a2, {projective_module(a2, 0), simple_module(a2, 0)}).sum,
      direct_sum(a2, {projective_module(a2, 0), simple_module(a2, 1)}).sum,
      direct_sum(n2, {projective_module(n2, 0)}).sum,
      direct_sum(n2, {simple_module(n2, 0), simple_module(n2, 0)}).sum,
      direct_sum(n2, {projective_module(n2, 1), simple_module(n2, 1)}).sum,
  };
  for (const auto& x : mods) {
    const auto basis = hom_totals(x, x);
    const std::size_t r = radical_coords(basis).cols();
    CHECK(ipow(2, r) == brute_radical_size(basis, 2));
  }
}

TEST_CASE("radical over F_3 and F_5 (small characteristic iteration)") {
  for (auto p : {3u, 5u}) {
    const Field f = Field::prime(p);
    const Algebra a = fx::a2(f);
    const Rep x = direct_sum(a, {projective_module(a, 0), simple_module(a, 0)}).sum;
    const auto basis = hom_totals(x, x);
    CHECK(radical_coords(basis).cols() == 1);
    CHECK(ipow(p, 1) == brute_radical_size(basis, p));
  }
  // upper triangular 3x3 over F_3: radical is the strictly upper part
  const Field f3 = Field::prime(3);
  std::vector<Mat> ut;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Mat e(f3, 3, 3);
      e.set(i, j, 1L);
      ut.push_back(e);
    }
  CHECK(radical_coords(ut).cols() == 3);
}

TEST_CASE("locality of semisimple quotients") {
  const Field f2 = Field::prime(2);
  // F_4 inside M_2(F_2): local, nothing to split
  const std::vector<Mat> f4 = {Mat::identity(f2, 2), fx::m(f2, {{0, 1}, {1, 1}})};
  EndoInfo i = analyze_endomorphisms(f4);
  CHECK(i.local);
  CHECK(i.radical_dim == 0);
  // F_2 x F_2: not local, splitter found
  const std::vector<Mat> prod = {fx::m(f2, {{1, 0}, {0, 0}}), fx::m(f2, {{0, 0}, {0, 1}})};
  i = analyze_endomorphisms(prod);
  CHECK_FALSE(i.local);
  REQUIRE(i.splitter.has_value());
  CHECK_FALSE(is_nilpotent(*i.splitter));
  CHECK(rank(*i.splitter) < 2);
  // odd characteristic: F_3 x F_3 hidden behind a non-idempotent basis
  const Field f3 = Field::prime(3);
  const std::vector<Mat> p3 = {Mat::identity(f3, 2), fx::m(f3, {{2, 0}, {0, 1}})};
  i = analyze_endomorphisms(p3);
  CHECK_FALSE(i.local);
  // M_2(F_2) is not local (noncommutative semisimple)
  std::vector<Mat> m2;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      Mat e(f2, 2, 2);
      e.set(r, c, 1L);
      m2.push_back(e);
    }
  CHECK_FALSE(analyze_endomorphisms(m2).local);
}

TEST_CASE("locality over Q") {
  const Field q = Field::rationals();
  const std::vector<Mat> gauss = {Mat::identity(q, 2), fx::m(q, {{0, -1}, {1, 0}})};
  const EndoInfo i = analyze_endomorphisms(gauss);
  CHECK(i.local);
  CHECK(i.nonsplit);
  const std::vector<Mat> split = {Mat::identity(q, 2), fx::m(q, {{0, 2}, {2, 0}})};
  CHECK_FALSE(analyze_endomorphisms(split).local);
}

TEST_CASE("rational roots and minimal polynomials") {
  const auto roots = rational_roots({mpq_class(-2), mpq_class(1), mpq_class(3)});  // 3x^2 + x - 2
  CHECK(roots.size() == 2);
  const Field q = Field::rationals();
  const Mat m = fx::m(q, {{0, 1}, {0, 0}});
  CHECK(min_poly_on(m, fx::m(q, {{0}, {1}})).size() == 3);
}
