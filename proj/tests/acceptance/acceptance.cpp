// Acceptance harness: one PASS/FAIL line per criterion, exact arithmetic
// throughout.  Exit status is the number of failed criteria.

#include "taucrest/classify.hpp"
#include "taucrest/config_io.hpp"
#include "taucrest/report.hpp"

#include "fixtures.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

using namespace taucrest;

namespace {

const std::string kData = TAUCREST_DATA_DIR;
const std::vector<std::string> kConfigs = {"a2_dual", "a2_lower_triangular", "a2_regular", "nakayama2_regular", "nakayama2_dual"};

struct Loaded {
  std::string name;
  Configuration c;
  EnumConfig cfg;
};

Loaded load(const std::string& name) {
  const InputFile in = load_input(kData + "/" + name + ".alg");
  Loaded l{name, instantiate(in, Field::prime(2)), {}};
  l.cfg.max_total_dim = in.enumeration.max_dim.value_or(4);
  l.cfg.seed = in.enumeration.seed.value_or(0);
  return l;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Collects failure notes; the criterion passes when there are none.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && notes_.size() < 5) notes_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool ok() const { return !failed_; }
  std::string notes() const {
    std::string s;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> notes_;
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Check&, std::string&)>& body) {
  Check c;
  std::string detail;
  try {
    body(c, detail);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << number << ". " << title;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  if (!c.ok()) std::cout << "  -- " << c.notes();
  std::cout << std::endl;
  failures += !c.ok();
}

template <class T, class Iso>
bool same_up_to_iso(const std::vector<T>& got, const std::vector<T>& expected, Iso iso) {
  if (got.size() != expected.size()) return false;
  for (const auto& e : expected) {
    std::size_t hits = 0;
    for (const auto& g : got) hits += iso(g, e);
    if (hits != 1) return false;
  }
  return true;
}

bool rep_iso(const Rep& x, const Rep& y) { return x.dims() == y.dims() && is_isomorphic(x, y); }
bool pair_iso(const PairMod& p, const PairMod& q) { return p.x.dims() == q.x.dims() && pair_isomorphic(p, q); }

// A random sum of enumerated indecomposables of total dimension <= bound, in
// a random basis.
Rep random_module(const Algebra& a, const std::vector<Rep>& ind, std::size_t bound, std::mt19937_64& rng) {
  std::vector<Rep> parts;
  std::size_t total = 0;
  const std::size_t want = 1 + rng() % bound;
  for (int tries = 0; tries < 32 && total < want; ++tries) {
    const Rep& x = ind[rng() % ind.size()];
    if (total + x.total_dim() > want) continue;
    parts.push_back(x);
    total += x.total_dim();
  }
  return fx::scramble(direct_sum(a, parts).sum, rng);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TAUCREST_CLI + "\" " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

}  // namespace

int main() {
  std::vector<Loaded> configs;
  for (const auto& n : kConfigs) configs.push_back(load(n));
  std::vector<VerificationReport> reports;
  std::vector<double> times;
  for (const auto& l : configs) {
    const auto t0 = std::chrono::steady_clock::now();
    reports.push_back(verify_theorems(l.c.ext, l.cfg));
    times.push_back(seconds_since(t0));
  }

  // ---------------------------------------------------------------- 1
  report(1, "trivial extension of K(1->2) by D(A): tau-rigid and support tau-tilting lists", [&](Check& c, std::string& d) {
    const VerificationReport& r = reports[0];
    const Classification& k = r.classification;
    const Algebra& a = k.algebra;
    const ExtPtr& e = k.ext;
    const Rep p1 = projective_module(a, 0), p2 = projective_module(a, 1), s1 = simple_module(a, 0), s2 = simple_module(a, 1);
    const auto sum = [&](std::vector<Rep> v) { return direct_sum(a, v).sum; };

    c.expect(same_up_to_iso(k.a_tau_rigid, {p1, p2, s1}, rep_iso), "A tau-rigid indecomposables");
    std::vector<Rep> a_modules;
    for (const auto& s : k.a_support)
      if (!s.module.is_zero()) a_modules.push_back(s.module);
    c.expect(same_up_to_iso(a_modules, {sum({p1, p2}), sum({p1, s1}), s1, s2}, rep_iso), "non-zero support tau-tilting A-modules");

    const PairMod tp1 = functor_T(e, p1), tp2 = functor_T(e, p2), ts1 = functor_T(e, s1), zs2 = functor_Z(e, s2);
    c.expect(pair_iso(ts1, functor_Z(e, s1)), "T(S(1)) = Z(S(1))");
    c.expect(pair_is_projective(tp1) && pair_is_projective(tp2), "T(P(i)) projective");
    c.expect(same_up_to_iso(k.lambda_tau_rigid, {tp1, tp2, ts1, zs2}, pair_iso), "Lambda tau-rigid indecomposables");

    const auto psum = [&](std::vector<PairMod> v) { return pair_direct_sum(e, v).sum; };
    const PairMod neither = psum({tp2, zs2});
    std::vector<PairMod> lam;
    for (const auto& s : k.lambda_support)
      if (!s.module.is_zero()) lam.push_back(s.module);
    c.expect(same_up_to_iso(lam, {psum({tp1, tp2}), psum({tp1, ts1}), ts1, zs2, neither}, pair_iso),
             "non-zero support tau-tilting Lambda-modules");
    std::size_t flagged = 0;
    for (const auto& s : k.lambda_support) {
      const bool is_neither = pair_iso(s.module, neither);
      flagged += is_neither;
      c.expect(is_neither == (!s.t_form && !s.z_form), "form flag of " + pair_label(s.module, Labeler(a)));
    }
    c.expect(flagged == 1, "T(P(2)) + Z(S(2)) listed once");
    c.expect(times[0] < 10.0, "runtime");
    std::ostringstream o;
    o.precision(3);
    o << times[0] << " s";
    d = o.str();
  });

  // ---------------------------------------------------------------- 2
  report(2, "lower triangular algebra over K(1->2): T/Z status claims", [&](Check& c, std::string& d) {
    const VerificationReport& r = reports[1];
    const TriangularData& t = *r.classification.ext->bimodule().triangular;
    c.expect(r.triangular, "triangular input recognized");
    c.expect(r.all_verified(), "all verdicts verified");
    const auto named = [](const Algebra& a) {
      const Rep p1 = projective_module(a, 0), p2 = projective_module(a, 1), s1 = simple_module(a, 0), s2 = simple_module(a, 1);
      return std::vector<Rep>{Rep::zero(a), direct_sum(a, {p1, p2}).sum, direct_sum(a, {p1, s1}).sum, s1, s2};
    };
    const std::vector<Rep> R = named(t.product.left), S = named(t.product.right);  // index 0 is the zero module
    std::size_t checked = 0;
    const auto claim = [&](char functor, std::size_t i, std::size_t j, bool expected) {
      std::size_t hits = 0;
      for (const auto& e : r.triangular_table) {
        if (e.functor != functor || !rep_iso(e.x, R[i]) || !rep_iso(e.y, S[j])) continue;
        ++hits;
        c.expect(e.support_tau_tilting == expected,
                 std::string(1, functor) + "((A" + std::to_string(i) + ", A" + std::to_string(j) + "))");
      }
      c.expect(hits == 1, std::string(1, functor) + " entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      ++checked;
    };
    for (std::size_t i = 1; i <= 4; ++i) {
      claim('T', i, 0, false);
      claim('T', i, i, true);
      claim('Z', i, 0, true);
      claim('Z', 0, i, true);
      claim('T', 0, i, true);  // Z(0, A_i) = T(0, A_i)
    }
    for (std::size_t i : {2, 3, 4}) claim('T', i, 1, true);
    claim('T', 3, 2, true);
    claim('T', 2, 3, false);
    for (std::size_t i : {1, 2, 3}) claim('T', i, 4, false);
    claim('Z', 4, 3, true);
    for (std::size_t i : {2, 3}) claim('Z', i, 4, true);
    c.expect(times[1] < 60.0, "runtime");
    std::ostringstream o;
    o.precision(3);
    o << checked << " claims, " << times[1] << " s";
    d = o.str();
  });

  const auto verdict_everywhere = [&](Check& c, std::string& d, const std::vector<std::string>& names) {
    std::size_t instances = 0;
    for (std::size_t i = 0; i < configs.size(); ++i)
      for (const auto& n : names) {
        const Verdict& v = reports[i].verdict(n);
        c.expect(v.status == VerdictStatus::Verified && v.failures == 0 && v.instances > 0,
                 configs[i].name + ": " + n + " " + to_string(v.status) + " " + v.counterexample);
        instances += v.instances;
      }
    d = std::to_string(configs.size()) + " configurations, " + std::to_string(instances) + " instances";
  };

  // ---------------------------------------------------------------- 3
  report(3, "T(X)+T(P) and Z(X)+T(P) support tau-tilting iff (X,P) is, both directions", [&](Check& c, std::string& d) {
    verdict_everywhere(c, d, {"T-pair-support-tau-tilting", "Z-pair-support-tau-tilting"});
  });

  // ---------------------------------------------------------------- 4
  report(4, "cokernel of the structure map of a tau-rigid pair is tau-rigid", [&](Check& c, std::string& d) {
    verdict_everywhere(c, d, {"cokernel-tau-rigid"});
    std::size_t direct = 0;
    for (const auto& r : reports)
      for (const auto& p : r.classification.lambda_tau_rigid) {
        c.expect(is_tau_rigid(functor_C(p).rep), "cok alpha of " + p.key());
        ++direct;
      }
    d += ", " + std::to_string(direct) + " indecomposables rechecked";
  });

  // ---------------------------------------------------------------- 5
  report(5, "presentation criterion agrees with Hom(-, D Tr -) on all modules of dimension <= 5", [&](Check& c, std::string& d) {
    const std::vector<std::pair<std::string, Algebra>> algebras = {
        {"A2", fx::a2()},
        {"A3", fx::a3()},
        {"Nakayama", fx::nakayama2()},
        {"K[x]/x^2", fx::dual_numbers()},
        {"A2xA2", product_algebra(fx::a2(), fx::a2()).algebra},
        {"square", fx::commutative_square(Field::prime(2))},
    };
    EnumConfig cfg;
    cfg.max_total_dim = 5;
    std::size_t modules = 0, pairs = 0;
    for (const auto& [name, a] : algebras) {
      const Enumeration en = enumerate_indecomposables(a, cfg);
      c.expect(en.warnings.empty(), name + ": enumeration incomplete");
      const std::vector<Rep> all = modules_up_to(a, en.modules, 5);
      std::vector<Rep> taus;
      for (const auto& x : all) taus.push_back(tau_oracle(x));
      for (std::size_t i = 0; i < all.size(); ++i) {
        c.expect(is_tau_rigid(all[i]) == (hom_dim(all[i], taus[i]) == 0), name + ": is_tau_rigid " + all[i].key());
        c.expect(is_projective(all[i]) == taus[i].is_zero(), name + ": tau vanishes exactly on projectives");
        for (std::size_t j = 0; j < all.size(); ++j) {
          c.expect(hom_to_tau_vanishes(all[j], all[i]) == (hom_dim(all[j], taus[i]) == 0), name + ": Hom(Y, tau X)");
          ++pairs;
        }
      }
      modules += all.size();
    }
    d = std::to_string(modules) + " modules, " + std::to_string(pairs) + " ordered pairs";
  });

  // ---------------------------------------------------------------- 6
  report(6, "CT = Id, UZ = Id, (1,0): T(N) -> Z(N) minimal epi, covers of T(N) and Z(N) agree", [&](Check& c, std::string& d) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const ExtPtr& e = configs[i].c.ext;
      const Algebra& a = e->algebra();
      const auto& ind = reports[i].classification.a_indecomposables;
      std::mt19937_64 rng(configs[i].cfg.seed * 1000 + 6);
      for (int k = 0; k < 100; ++k, ++n) {
        const Rep x = random_module(a, ind, configs[i].cfg.max_total_dim, rng);
        const std::string where = configs[i].name + " " + x.key();
        c.expect(rep_iso(functor_C(functor_T(e, x)).rep, x), "CT " + where);
        c.expect(functor_U(functor_Z(e, x)).key() == x.key(), "UZ " + where);
        c.expect(is_minimal_epimorphism(t_to_z(e, x)), "minimal epi " + where);
        c.expect(pair_iso(pair_projective_cover(functor_T(e, x)).source, pair_projective_cover(functor_Z(e, x)).source),
                 "covers " + where);
      }
    }
    d = std::to_string(n) + " random modules";
  });

  // ---------------------------------------------------------------- 7
  report(7, "minimal presentations of T(X) and Z(X) in closed form", [&](Check& c, std::string& d) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const ExtPtr& e = configs[i].c.ext;
      const Algebra& a = e->algebra();
      const auto& ind = reports[i].classification.a_indecomposables;
      std::mt19937_64 rng(configs[i].cfg.seed * 1000 + 7);
      for (int k = 0; k < 50; ++k, ++n) {
        const Rep x = random_module(a, ind, configs[i].cfg.max_total_dim, rng);
        const std::string where = configs[i].name + " " + x.key();

        const Presentation ap = minimal_presentation(x);
        const PairPresentation tp = pair_minimal_presentation(functor_T(e, x));
        c.expect(presentations_isomorphic(tp.f, tp.c0.map, functor_T(e, ap.f), functor_T(e, ap.cover)), "T " + where);

        // T(P1 + Q) -> T(P0) with blocks [[f, 0, 0, 0], [0, r, F(f), 0]] over (P1, Q, F(P1), F(Q))
        const ZPresentation z = z_presentation(e, x);
        const DirectSum src = t_parts(e, z.p1q.sum), dst = t_parts(e, z.base.p0.rep);
        c.expect(src.sum.key() == z.f.source.x.key() && dst.sum.key() == z.f.target.x.key(), "Z shape " + where);
        const RepMap& m = z.f.f;
        const auto block = [&](std::size_t row, std::size_t col) {
          const RepMap into = col < 2 ? compose(src.inj[0], z.p1q.inj[col]) : compose(src.inj[1], e->F(z.p1q.inj[col - 2]));
          return compose(dst.proj[row], compose(m, into));
        };
        c.expect(block(0, 0) == z.base.f, "Z block f " + where);
        c.expect(block(0, 1).is_zero() && block(0, 2).is_zero() && block(0, 3).is_zero(), "Z zero blocks, row 1 " + where);
        c.expect(block(1, 0).is_zero() && block(1, 3).is_zero(), "Z zero blocks, row 2 " + where);
        c.expect(block(1, 1) == z.r, "Z block r " + where);
        c.expect(block(1, 2) == e->F(z.base.f), "Z block F(f) " + where);
        c.expect(compose(e->F(z.base.cover), z.r) == z.q.map, "F(c) r is the cover of F(X) " + where);
        c.expect(z.f.commutes() && z.cover.commutes() && compose(z.cover, z.f).is_zero(), "Z complex " + where);
        const PairPresentation zp = pair_minimal_presentation(functor_Z(e, x));
        c.expect(presentations_isomorphic(zp.f, zp.c0.map, z.f, z.cover), "Z minimal " + where);
      }
    }
    d = std::to_string(n) + " random modules";
  });

  // ---------------------------------------------------------------- 8
  report(8, "|T(X)| = |X| = |Z(X)| and Lambda = T(A)", [&](Check& c, std::string& d) {
    verdict_everywhere(c, d, {"T-summand-count", "Z-summand-count", "regular-module-is-T(A)"});
    for (const auto& l : configs) {
      const ExtPtr& e = l.c.ext;
      const Rep a = projective_sum(e->algebra(), [&] {
                      std::vector<std::size_t> v(e->vertex_count());
                      for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
                      return v;
                    }()).rep;
      c.expect(pair_count_summands(regular_pair(e)) == count_summands(a), l.name + ": |Lambda| = |A|");
    }
  });

  // ---------------------------------------------------------------- 9
  report(9, "identical verify runs give byte-identical machine reports", [&](Check& c, std::string& d) {
    for (std::size_t i = 0; i < 2; ++i) {
      const RunInfo info{"verify", configs[i].name, configs[i].c.description};
      const std::string first = machine_report(reports[i], info);
      const Loaded again = load(configs[i].name);
      c.expect(machine_report(verify_theorems(again.c.ext, again.cfg), info) == first, configs[i].name + ": library rerun");
      EnumConfig par = again.cfg;
      par.parallel = true;
      c.expect(machine_report(verify_theorems(again.c.ext, par), info) == first, configs[i].name + ": parallel run");
      const std::string args = "verify \"" + kData + "/" + configs[i].name + ".alg\" --format machine --seed 5";
      const std::string one = run_cli(args), two = run_cli(args);
      c.expect(!one.empty() && one == two, configs[i].name + ": CLI runs differ");
      c.expect(one.find("\"seed\": 5") != std::string::npos, configs[i].name + ": seed recorded");
    }
    d = "library, parallel and CLI";
  });

  return failures;
}
