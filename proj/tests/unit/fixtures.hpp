#pragma once

#include "taucrest/algebra.hpp"
#include "taucrest/repcat.hpp"

#include <random>
#include <string>
#include <vector>

namespace fx {

using namespace taucrest;

inline Quiver quiver(std::size_t n, const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& arrows) {
  Quiver q;
  q.vertices = n;
  for (const auto& [label, s, t] : arrows) q.arrows.push_back({s, t, label});
  return q;
}

// 1 -> 2
inline Algebra a2(Field f = Field::prime(2)) {
  AlgebraPresentation p;
  p.quiver = quiver(2, {{"a", 0, 1}});
  p.nilpotency_bound = 2;
  return Algebra::build(p, f);
}

// 1 -> 2 -> 3, no relations
inline Algebra a3(Field f = Field::prime(2)) {
  AlgebraPresentation p;
  p.quiver = quiver(3, {{"a", 0, 1}, {"b", 1, 2}});
  p.nilpotency_bound = 3;
  return Algebra::build(p, f);
}

// 1 <-> 2 with all paths of length 3 zero
inline Algebra nakayama2(Field f = Field::prime(2)) {
  AlgebraPresentation p;
  p.quiver = quiver(2, {{"a", 0, 1}, {"b", 1, 0}});
  p.nilpotency_bound = 3;
  return Algebra::build(p, f);
}

// K[x]/(x^2)
inline Algebra dual_numbers(Field f = Field::prime(2)) {
  AlgebraPresentation p;
  p.quiver = quiver(1, {{"x", 0, 0}});
  p.nilpotency_bound = 2;
  return Algebra::build(p, f);
}

inline Algebra semisimple(std::size_t n, Field f = Field::prime(2)) {
  AlgebraPresentation p;
  p.quiver = quiver(n, {});
  p.nilpotency_bound = 2;
  return Algebra::build(p, f);
}

// Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with d.a = c.b... written as a relation
inline Algebra commutative_square(Field f = Field::rationals()) {
  AlgebraPresentation p;
  p.quiver = quiver(4, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}});
  p.relations.push_back({{mpq_class(1), {0, 2}}, {mpq_class(-1), {1, 3}}});
  p.nilpotency_bound = 3;
  return Algebra::build(p, f);
}

inline Mat m(Field f, std::vector<std::vector<long>> rows) { return Mat::from_rows(f, rows); }

// A uniformly random invertible n x n matrix.
inline Mat random_invertible(Field f, std::size_t n, std::mt19937_64& rng) {
  const long p = f.is_prime() ? static_cast<long>(f.characteristic()) : 7;
  for (;;) {
    Mat g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.set(i, j, static_cast<long>(rng() % p) - (f.is_prime() ? 0 : 3));
    if (rank(g) == n) return g;
  }
}

inline Rep scramble(const Rep& x, std::mt19937_64& rng) {
  std::vector<Mat> g;
  for (auto d : x.dims()) g.push_back(random_invertible(x.field(), d, rng));
  return change_basis(x, g);
}

}  // namespace fx
