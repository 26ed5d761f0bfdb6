#include "taucrest/report.hpp"

#include "json.hpp"

#include <sstream>

namespace taucrest {

using ojson = nlohmann::ordered_json;

bool ModuleAnalysis::consistent() const {
  return t_tau_rigid == (tau_rigid && fx_to_tau_vanishes) && z_tau_rigid == (tau_rigid && cover_hom_vanishes) && t_count == count &&
         z_count == count;
}

ModuleAnalysis analyze_module(const ExtPtr& ext, const Rep& x) {
  ModuleAnalysis m;
  const Labeler labels(ext->algebra());
  m.x = x;
  m.label = labels(x);
  if (!x.is_zero()) {
    for (const auto& s : decompose(x).summands) {
      m.summands.push_back((s.multiplicity > 1 ? std::to_string(s.multiplicity) + "*" : "") + labels.indecomposable(s.obj));
    }
  }
  m.presentation = minimal_presentation(x);
  m.tau = tau_oracle(x);
  m.tau_rigid = is_tau_rigid(x);
  m.support_tau_tilting = is_support_tau_tilting_module(x);
  m.fx = ext->F(x);
  m.fx_to_tau_vanishes = hom_to_tau_vanishes(m.fx, x);
  m.cover_hom_vanishes = hom_dim(projective_cover(m.fx).source.rep, x) == 0;
  const PairMod t = functor_T(ext, x), z = functor_Z(ext, x);
  m.t_tau_rigid = pair_is_tau_rigid(t);
  m.z_tau_rigid = pair_is_tau_rigid(z);
  m.count = count_summands(x);
  m.t_count = pair_count_summands(t);
  m.z_count = pair_count_summands(z);
  const PairPresentation pp = pair_minimal_presentation(t);
  m.t_presentation_p0 = pp.c0.base.vertices.size();
  m.t_presentation_p1 = pp.c1.base.vertices.size();
  return m;
}

namespace {

std::string projective_name(const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return "0";
  std::string s;
  for (auto v : vertices) s += (s.empty() ? "" : " + ") + std::string("P(") + std::to_string(v + 1) + ")";
  return s;
}

ojson header(const RunInfo& info, const Algebra& a, const ExtPtr& ext, const EnumConfig* cfg) {
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = info.command;
  j["input"] = info.input;
  j["field"] = a.field().name();
  if (cfg) {
    j["max_dim"] = cfg->max_total_dim;
    j["seed"] = cfg->seed;
  }
  j["algebra"] = {{"vertices", a.vertex_count()}, {"arrows", a.arrow_count()}, {"dim", a.dim()}};
  j["bimodule"] = {{"kind", to_string(ext->bimodule().kind)}, {"dim", ext->bimodule().dim}};
  j["extension_dim"] = ext->dim();
  return j;
}

ojson module_entry(const Rep& x, const Labeler& labels) { return {{"label", labels(x)}, {"dims", x.dims()}}; }

ojson classification_body(const Classification& c) {
  const Labeler labels(c.algebra);
  ojson j;
  j["warnings"] = c.warnings;
  ojson a;
  a["indecomposables"] = ojson::array();
  for (const auto& x : c.a_indecomposables) a["indecomposables"].push_back(module_entry(x, labels));
  a["tau_rigid"] = ojson::array();
  for (const auto& x : c.a_tau_rigid) a["tau_rigid"].push_back(module_entry(x, labels));
  a["support_tau_tilting"] = ojson::array();
  for (const auto& s : c.a_support) a["support_tau_tilting"].push_back({{"module", labels(s.module)}, {"projective", projective_name(s.p)}});
  j["A"] = a;
  ojson l;
  l["indecomposables"] = ojson::array();
  for (const auto& p : c.lambda_indecomposables) l["indecomposables"].push_back({{"label", pair_label(p, labels)}, {"dims", p.x.dims()}});
  l["tau_rigid"] = ojson::array();
  for (const auto& p : c.lambda_tau_rigid) l["tau_rigid"].push_back({{"label", pair_label(p, labels)}, {"dims", p.x.dims()}});
  l["support_tau_tilting"] = ojson::array();
  for (const auto& s : c.lambda_support) {
    std::string proj;
    for (auto v : s.p) proj += (proj.empty() ? "" : " + ") + std::string("T(P(") + std::to_string(v + 1) + "))";
    l["support_tau_tilting"].push_back(
        {{"module", pair_label(s.module, labels)}, {"projective", proj.empty() ? "0" : proj}, {"form", form_name(s.t_form, s.z_form)}});
  }
  j["Lambda"] = l;
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void text_classification_body(std::ostringstream& o, const Classification& c) {
  const Labeler labels(c.algebra);
  for (const auto& w : c.warnings) o << "warning: " << w << "\n";
  o << "\nA-modules\n";
  o << "  indecomposables (" << c.a_indecomposables.size() << "):";
  for (const auto& x : c.a_indecomposables) o << "  " << labels(x);
  o << "\n  tau-rigid (" << c.a_tau_rigid.size() << "):";
  for (const auto& x : c.a_tau_rigid) o << "  " << labels(x);
  o << "\n  support tau-tilting pairs (" << c.a_support.size() << "):\n";
  for (const auto& s : c.a_support) o << "    (" << labels(s.module) << ", " << projective_name(s.p) << ")\n";
  o << "\nLambda-modules\n";
  o << "  indecomposables: " << c.lambda_indecomposables.size() << "\n";
  o << "  tau-rigid indecomposables (" << c.lambda_tau_rigid.size() << "):";
  for (const auto& p : c.lambda_tau_rigid) o << "  " << pair_label(p, labels);
  o << "\n  support tau-tilting pairs (" << c.lambda_support.size() << "):\n";
  for (const auto& s : c.lambda_support) {
    std::string proj;
    for (auto v : s.p) proj += (proj.empty() ? "" : " + ") + std::string("T(P(") + std::to_string(v + 1) + "))";
    o << "    (" << pair_label(s.module, labels) << ", " << (proj.empty() ? "0" : proj) << ")  form: " << form_name(s.t_form, s.z_form) << "\n";
  }
}

}  // namespace

std::string machine_classification(const Classification& c, const RunInfo& info) {
  ojson j = header(info, c.algebra, c.ext, &c.config);
  const ojson body = classification_body(c);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return dump(j);
}

std::string text_classification(const Classification& c, const RunInfo& info) {
  std::ostringstream o;
  o << info.command << " " << info.input << "\n" << info.description << "\n";
  o << "enumeration: field " << c.algebra.field().name() << ", max-dim " << c.config.max_total_dim << "\n";
  text_classification_body(o, c);
  return o.str();
}

std::string machine_report(const VerificationReport& r, const RunInfo& info) {
  const Classification& c = r.classification;
  ojson j = header(info, c.algebra, c.ext, &c.config);
  const ojson body = classification_body(c);
  for (const auto& [k, v] : body.items()) j[k] = v;
  j["verdicts"] = ojson::array();
  for (const auto& v : r.verdicts) {
    ojson e;
    e["name"] = v.name;
    e["statement"] = v.statement;
    e["status"] = to_string(v.status);
    e["instances"] = v.instances;
    e["failures"] = v.failures;
    if (v.status == VerdictStatus::Counterexample) e["counterexample"] = v.counterexample;
    j["verdicts"].push_back(e);
  }
  if (r.triangular) {
    j["triangular_table"] = ojson::array();
    for (const auto& e : r.triangular_table) {
      j["triangular_table"].push_back(
          {{"functor", std::string(1, e.functor)}, {"X", e.x_label}, {"Y", e.y_label}, {"support_tau_tilting", e.support_tau_tilting}});
    }
  }
  j["all_verified"] = r.all_verified();
  return dump(j);
}

std::string text_report(const VerificationReport& r, const RunInfo& info) {
  const Classification& c = r.classification;
  std::ostringstream o;
  o << info.command << " " << info.input << "\n" << info.description << "\n";
  o << "enumeration: field " << c.algebra.field().name() << ", max-dim " << c.config.max_total_dim << ", seed " << c.config.seed << "\n";
  text_classification_body(o, c);
  o << "\nverdicts\n";
  std::size_t width = 0;
  for (const auto& v : r.verdicts) width = std::max(width, v.name.size());
  for (const auto& v : r.verdicts) {
    o << "  " << v.name << std::string(width - v.name.size() + 2, ' ') << to_string(v.status);
    if (v.status != VerdictStatus::NotApplicable) o << " (" << v.instances << " instances)";
    o << "\n";
    if (v.status == VerdictStatus::Counterexample) o << "      " << v.failures << " failing, first: " << v.counterexample << "\n";
  }
  if (r.triangular) {
    o << "\nT and Z of (X, Y), X over R and Y over S support tau-tilting:\n";
    for (const auto& e : r.triangular_table) {
      o << "  " << e.functor << "((" << e.x_label << ", " << e.y_label << "))  " << (e.support_tau_tilting ? "support tau-tilting" : "not support tau-tilting")
        << "\n";
    }
  }
  o << "\n" << (r.all_verified() ? "all verified" : "COUNTEREXAMPLE FOUND") << "\n";
  return o.str();
}

std::string machine_analysis(const ModuleAnalysis& m, const RunInfo& info) {
  const Algebra& a = m.x.algebra();
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = info.command;
  j["input"] = info.input;
  j["field"] = a.field().name();
  j["module"] = {{"label", m.label}, {"dims", m.x.dims()}, {"summands", m.summands}};
  ojson pres;
  std::vector<std::size_t> p0, p1;
  for (auto v : m.presentation.p0.vertices) p0.push_back(v + 1);
  for (auto v : m.presentation.p1.vertices) p1.push_back(v + 1);
  pres["P0"] = p0;
  pres["P1"] = p1;
  j["minimal_presentation"] = pres;
  j["tau"] = {{"dims", m.tau.dims()}};
  j["tau_rigid"] = m.tau_rigid;
  j["support_tau_tilting"] = m.support_tau_tilting;
  j["tensor"] = {{"dims", m.fx.dims()}, {"hom_to_tau_vanishes", m.fx_to_tau_vanishes}, {"cover_hom_vanishes", m.cover_hom_vanishes}};
  j["T"] = {{"tau_rigid", m.t_tau_rigid}, {"summands", m.t_count}, {"presentation_P0", m.t_presentation_p0}, {"presentation_P1", m.t_presentation_p1}};
  j["Z"] = {{"tau_rigid", m.z_tau_rigid}, {"summands", m.z_count}};
  j["summands"] = m.count;
  j["consistent"] = m.consistent();
  return dump(j);
}

std::string text_analysis(const ModuleAnalysis& m, const RunInfo& info) {
  std::ostringstream o;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  o << info.command << " " << info.input << "\n" << info.description << "\n\n";
  o << "X = " << m.label << "  dims " << m.x.dims_string() << "\n";
  o << "minimal presentation: " << projective_name(m.presentation.p1.vertices) << " -> " << projective_name(m.presentation.p0.vertices) << " -> X -> 0\n";
  o << "tau X dims " << m.tau.dims_string() << "\n";
  o << "tau-rigid: " << yes(m.tau_rigid) << "   support tau-tilting module: " << yes(m.support_tau_tilting) << "\n";
  o << "M (x) X dims " << m.fx.dims_string() << "; Hom(M(x)X, tau X) = 0: " << yes(m.fx_to_tau_vanishes)
    << "; Hom(Q, X) = 0 for the cover Q of M(x)X: " << yes(m.cover_hom_vanishes) << "\n";
  o << "T(X) tau-rigid: " << yes(m.t_tau_rigid) << "  |T(X)| = " << m.t_count << "  minimal presentation " << m.t_presentation_p1 << " -> "
    << m.t_presentation_p0 << " indecomposable projectives\n";
  o << "Z(X) tau-rigid: " << yes(m.z_tau_rigid) << "  |Z(X)| = " << m.z_count << "\n";
  o << "|X| = " << m.count << "\n";
  o << (m.consistent() ? "consistent with the T/Z criteria" : "COUNTEREXAMPLE to the T/Z criteria") << "\n";
  return o.str();
}

}  // namespace taucrest
