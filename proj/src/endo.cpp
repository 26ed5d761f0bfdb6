#include "taucrest/endo.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace taucrest {

namespace {

using u128 = unsigned __int128;

// Integer lift of a residue matrix raised to the power e, modulo m, followed
// by the trace.
std::uint64_t lifted_power_trace(const Mat& a, std::uint64_t e, std::uint64_t m) {
  const std::size_t n = a.rows();
  std::vector<std::uint64_t> base(a.residues().begin(), a.residues().end());
  for (auto& x : base) x %= m;
  std::vector<std::uint64_t> result(n * n, 0), tmp(n * n);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1 % m;
  auto mul = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        u128 s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<u128>(x[i * n + k]) * y[k * n + j];
        tmp[i * n + j] = static_cast<std::uint64_t>(s % m);
      }
    }
    return tmp;
  };
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  u128 tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += result[i * n + i];
  return static_cast<std::uint64_t>(tr % m);
}

Scalar trace_of_product(const Mat& x, const Mat& y) {
  Scalar s = Scalar::zero(x.field());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (!x.entry_is_zero(i, j) && !y.entry_is_zero(j, i)) s = s + x.at(i, j) * y.at(j, i);
    }
  }
  return s;
}

Mat combine(const std::vector<Mat>& basis, const Mat& coeffs, std::size_t col) {
  const Field f = basis.front().field();
  Mat out(f, basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!coeffs.entry_is_zero(j, col)) out.add_scaled(basis[j], coeffs.at(j, col));
  }
  return out;
}

}  // namespace

bool is_nilpotent(const Mat& m) {
  if (m.rows() == 0) return true;
  Mat x = m;
  for (std::size_t e = 1; e < m.rows(); e *= 2) x = x * x;
  return x.is_zero();
}

Mat radical_coords(const std::vector<Mat>& basis) {
  if (basis.empty()) throw DimensionError("radical_coords: empty basis");
  const Field f = basis.front().field();
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().rows();

  if (f.is_rational()) {
    Mat g(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) g.set(i, j, trace_of_product(basis[i], basis[j]));
    }
    return kernel_basis(g);
  }

  const std::uint64_t p = f.characteristic();
  std::size_t l = 0;
  for (std::uint64_t q = p; q <= n; q *= p) ++l;

  Mat c = Mat::identity(f, d);
  std::uint64_t pi = 1;  // p^i
  for (std::size_t i = 0; i <= l && c.cols() > 0; ++i, pi *= p) {
    const std::uint64_t m = pi * p;
    const std::size_t r = c.cols();
    Mat g(f, d, r);
    for (std::size_t k = 0; k < r; ++k) {
      const Mat ck = combine(basis, c, k);
      for (std::size_t j = 0; j < d; ++j) {
        if (i == 0) {
          g.set(j, k, trace_of_product(ck, basis[j]));
          continue;
        }
        const std::uint64_t t = lifted_power_trace(ck * basis[j], pi, m);
        if (t % pi != 0) throw std::logic_error("radical_coords: trace not divisible; basis does not span an algebra");
        g.set(j, k, static_cast<long>(t / pi));
      }
    }
    c = c * kernel_basis(g);
  }
  return c;
}

std::vector<Scalar> min_poly_on(const Mat& m, const Mat& v) {
  const Field f = m.field();
  std::vector<Mat> krylov{v};
  while (true) {
    Mat next = m * krylov.back();
    Mat span = hstack(f, v.rows(), krylov);
    auto c = solve(span, next);
    if (c) {
      std::vector<Scalar> poly;
      for (std::size_t i = 0; i < krylov.size(); ++i) poly.push_back(-c->at(i, 0));
      poly.push_back(Scalar::one(f));
      return poly;
    }
    krylov.push_back(std::move(next));
  }
}

std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
  std::vector<mpz_class> a;
  mpz_class den = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  for (const auto& c : coeffs) {
    mpq_class scaled = c * den;
    a.push_back(scaled.get_num());
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<mpq_class> roots;
  if (a.size() <= 1) return roots;
  if (a.front() == 0) {
    roots.emplace_back(0);
    while (!a.empty() && a.front() == 0) a.erase(a.begin());
  }
  const mpz_class limit = 1000000;
  const mpz_class a0 = abs(a.front()), am = abs(a.back());
  if (a.size() <= 1 || a0 > limit || am > limit) return roots;

  auto divisors = [](unsigned long x) {
    std::vector<unsigned long> ds;
    for (unsigned long k = 1; k * k <= x; ++k) {
      if (x % k) continue;
      ds.push_back(k);
      if (k * k != x) ds.push_back(x / k);
    }
    return ds;
  };
  auto eval = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
  };
  for (auto num : divisors(a0.get_ui())) {
    for (auto dd : divisors(am.get_ui())) {
      for (int sign : {1, -1}) {
        mpq_class cand(static_cast<long>(num) * sign, dd);
        cand.canonicalize();
        if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

EndoInfo analyze_endomorphisms(const std::vector<Mat>& basis, std::uint64_t seed) {
  if (basis.empty()) throw DimensionError("analyze_endomorphisms: empty basis");
  const Field f = basis.front().field();
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().rows();

  EndoInfo info;
  info.dim = d;
  const Mat jac = radical_coords(basis);
  info.radical_dim = jac.cols();
  const std::size_t k = d - jac.cols();
  if (k == 1) {
    info.local = true;
    return info;
  }

  std::vector<Mat> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  const Mat linv = left_inverse(hstack(f, n * n, flat));
  const Mat qb = quotient_map(jac, d);
  const Mat sb = right_inverse(qb);
  auto to_mat = [&](const Mat& x) { return combine(basis, sb * x, 0); };
  auto to_b = [&](const Mat& m) { return qb * (linv * flatten(m)); };

  std::vector<Mat> unit(k);
  for (std::size_t i = 0; i < k; ++i) {
    unit[i] = Mat(f, k, 1);
    unit[i].set(i, 0, 1L);
  }
  std::vector<Mat> lam(k, Mat(f, k, k));
  std::vector<Mat> bmats;
  for (std::size_t i = 0; i < k; ++i) bmats.push_back(to_mat(unit[i]));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) lam[i].set_block(0, j, to_b(bmats[i] * bmats[j]));
  }
  const Mat one = to_b(Mat::identity(f, n));
  auto lambda = [&](const Mat& x) {
    Mat out(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      if (!x.entry_is_zero(i, 0)) out.add_scaled(lam[i], x.at(i, 0));
    }
    return out;
  };
  bool commutative = true;
  for (std::size_t i = 0; i < k && commutative; ++i) {
    for (std::size_t j = 0; j < i && commutative; ++j) commutative = lam[i].column(j) == lam[j].column(i);
  }

  auto accept = [&](const Mat& x) {
    const Mat l = lambda(x);
    if (rank(l) == k || is_nilpotent(l)) return false;
    info.splitter = to_mat(x);
    return true;
  };

  std::mt19937_64 rng(seed);
  if (f.is_prime()) {
    const std::uint64_t p = f.characteristic();
    if (commutative) {
      Mat frob(f, k, k);
      for (std::size_t i = 0; i < k; ++i) frob.set_block(0, i, power(lam[i], p) * one);
      const Mat fixed = kernel_basis(frob - Mat::identity(f, k));
      if (fixed.cols() == 1) {
        info.local = true;
        return info;
      }
      Mat w;
      for (std::size_t c = 0; c < fixed.cols(); ++c) {
        if (rank(hstack(f, k, {one, fixed.column(c)})) == 2) {
          w = fixed.column(c);
          break;
        }
      }
      // w generates a split semisimple subalgebra; pull out an idempotent.
      if (p == 2) {
        info.splitter = to_mat(w);
        return info;
      }
      const Scalar half = Scalar(f, 2L).inverse();
      for (std::uint64_t t = 0; t < 4096; ++t) {
        const std::uint64_t c = p <= 4096 ? t : rng() % p;
        if (p <= 4096 && t >= p) break;
        const Mat y = w + one.scaled(Scalar(f, static_cast<long>(c)));
        const Mat z = power(lambda(y), (p - 1) / 2) * one;
        const Mat z2 = lambda(z) * z;
        for (const Mat& e : {Mat((z2 + z).scaled(half)), z2}) {
          if (!e.is_zero() && !(e == one)) {
            info.splitter = to_mat(e);
            return info;
          }
        }
      }
      throw std::runtime_error("analyze_endomorphisms: failed to split a commutative semisimple quotient");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (accept(unit[i])) return info;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (accept(unit[i] + unit[j])) return info;
      }
    }
    for (int t = 0; t < 512; ++t) {
      Mat x(f, k, 1);
      for (std::size_t i = 0; i < k; ++i) x.set(i, 0, static_cast<long>(rng() % p));
      if (accept(x)) return info;
    }
    throw std::runtime_error("analyze_endomorphisms: no zero divisor found in a noncommutative semisimple quotient");
  }

  // Q: look for zero divisors among basis elements, sums, small random
  // combinations, and shifts by rational eigenvalues.
  std::vector<Mat> candidates;
  for (std::size_t i = 0; i < k; ++i) candidates.push_back(unit[i]);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      candidates.push_back(unit[i] + unit[j]);
      candidates.push_back(unit[i] - unit[j]);
    }
  }
  std::uniform_int_distribution<long> small(-3, 3);
  for (int t = 0; t < 32; ++t) {
    Mat x(f, k, 1);
    for (std::size_t i = 0; i < k; ++i) x.set(i, 0, small(rng));
    candidates.push_back(x);
  }
  for (const auto& x : candidates) {
    if (accept(x)) return info;
    const auto poly = min_poly_on(lambda(x), one);
    if (poly.size() <= 2) continue;
    std::vector<mpq_class> q;
    for (const auto& s : poly) q.push_back(s.rational());
    for (const auto& root : rational_roots(q)) {
      if (accept(x - one.scaled(Scalar(f, root)))) return info;
    }
  }
  info.local = true;
  info.nonsplit = true;
  return info;
}

}  // namespace taucrest
