// taucrest: classify tau-rigid and support tau-tilting modules of A and of
// the trivial extension A |x M, and check the transfer criteria.
//
// Exit status: 0 all verified, 1 counterexample found, 2 usage or input error.

#include "taucrest/classify.hpp"
#include "taucrest/config_io.hpp"
#include "taucrest/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace taucrest;

namespace {

struct Options {
  std::string file;
  std::string field;
  std::optional<std::size_t> max_dim;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  bool parallel = false;
};

Field field_of(const Options& o, const InputFile& in) {
  if (!o.field.empty()) return parse_field(o.field);
  if (in.enumeration.field) return parse_field(*in.enumeration.field);
  return Field::prime(2);
}

EnumConfig config_of(const Options& o, const InputFile& in, Field f) {
  EnumConfig c;
  c.field = f;
  if (in.enumeration.max_dim) c.max_total_dim = *in.enumeration.max_dim;
  if (o.max_dim) c.max_total_dim = *o.max_dim;
  if (in.enumeration.seed) c.seed = *in.enumeration.seed;
  if (o.seed) c.seed = *o.seed;
  c.parallel = o.parallel;
  if (c.max_total_dim == 0) throw InputError("--max-dim must be at least 1");
  return c;
}

bool machine(const Options& o) { return o.format == "machine"; }

int run_verify(const Options& o, const InputFile& in, const std::string& name, std::string& out) {
  const Field f = field_of(o, in);
  const Configuration c = instantiate(in, f);
  const EnumConfig cfg = config_of(o, in, f);
  const VerificationReport r = verify_theorems(c.ext, cfg);
  const RunInfo info{"verify", name, c.description};
  out = machine(o) ? machine_report(r, info) : text_report(r, info);
  return r.all_verified() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  std::string out;
  const int code = run_verify(o, load_input(o.file), o.file, out);
  std::cout << out;
  return code;
}

int cmd_classify(const Options& o) {
  const InputFile in = load_input(o.file);
  const Field f = field_of(o, in);
  const Configuration c = instantiate(in, f);
  const Classification cl = classify(c.ext, config_of(o, in, f));
  const RunInfo info{"classify", o.file, c.description};
  std::cout << (machine(o) ? machine_classification(cl, info) : text_classification(cl, info));
  return 0;
}

int cmd_analyze(const Options& o) {
  const InputFile in = load_input(o.file);
  if (!in.module.present) throw InputError(o.file + ": analyze needs a [module] section");
  const Configuration c = instantiate(in, field_of(o, in));
  const ModuleAnalysis m = analyze_module(c.ext, *c.module);
  const RunInfo info{"analyze", o.file, c.description};
  std::cout << (machine(o) ? machine_analysis(m, info) : text_analysis(m, info));
  return m.consistent() ? 0 : 1;
}

int cmd_examples(const Options& o) {
  int code = 0;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& name : builtin_names()) {
    std::string out;
    code = std::max(code, run_verify(o, parse_input(builtin_input(name), "builtin:" + name), "builtin:" + name, out));
    if (machine(o)) all.push_back(nlohmann::ordered_json::parse(out));
    else std::cout << out << "\n";
  }
  if (machine(o)) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = "examples";
    j["reports"] = all;
    std::cout << j.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support tau-tilting modules over trivial extensions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool enumerates) {
    s->add_option("--field", o.field, "prime p or Q (overrides [enum] field; default 2)");
    s->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    if (enumerates) {
      s->add_option("--max-dim", o.max_dim, "largest total dimension enumerated");
      s->add_option("--seed", o.seed, "seed recorded in the report");
      s->add_flag("--parallel", o.parallel, "enumerate on several threads");
    }
  };
  auto* analyze = app.add_subcommand("analyze", "tau-rigidity and presentations of the module in [module]");
  analyze->add_option("file", o.file)->required();
  common(analyze, false);
  auto* cls = app.add_subcommand("classify", "enumerate indecomposables, tau-rigid modules and support tau-tilting pairs");
  cls->add_option("file", o.file)->required();
  common(cls, true);
  auto* verify = app.add_subcommand("verify", "check the T/Z transfer criteria on every enumerated instance");
  verify->add_option("file", o.file)->required();
  common(verify, true);
  auto* examples = app.add_subcommand("examples", "run verify on the built-in configurations");
  common(examples, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*cls) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*examples) return cmd_examples(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EnumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
