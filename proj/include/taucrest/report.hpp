#pragma once

// Text and machine renderings of classifications, verification reports and
// single-module analyses.  Machine output is JSON with a fixed key order
// (schema "taucrest-report/1"); identical inputs give identical bytes.

#include "taucrest/classify.hpp"

#include <string>

namespace taucrest {

inline constexpr const char* kReportSchema = "taucrest-report/1";

/// Everything `analyze` says about one module X.
struct ModuleAnalysis {
  Rep x;
  std::string label;
  std::vector<std::string> summands;
  Presentation presentation;
  Rep tau;  // D Tr X
  bool tau_rigid = false;
  bool support_tau_tilting = false;
  Rep fx;
  bool fx_to_tau_vanishes = false;  // Hom(M(x)X, tau X) = 0
  bool cover_hom_vanishes = false;  // Hom(Q, X) = 0, Q the cover of M(x)X
  bool t_tau_rigid = false, z_tau_rigid = false;
  std::size_t count = 0, t_count = 0, z_count = 0;
  std::size_t t_presentation_p0 = 0, t_presentation_p1 = 0;  // summand counts of the minimal pair presentation of T(X)

  /// The per-module instances of the T/Z tau-rigidity and counting statements.
  bool consistent() const;
};
ModuleAnalysis analyze_module(const ExtPtr& ext, const Rep& x);

struct RunInfo {
  std::string command;
  std::string input;  // as named on the command line
  std::string description;
};

std::string text_report(const VerificationReport& r, const RunInfo& info);
std::string machine_report(const VerificationReport& r, const RunInfo& info);
std::string text_classification(const Classification& c, const RunInfo& info);
std::string machine_classification(const Classification& c, const RunInfo& info);
std::string text_analysis(const ModuleAnalysis& m, const RunInfo& info);
std::string machine_analysis(const ModuleAnalysis& m, const RunInfo& info);

}  // namespace taucrest
