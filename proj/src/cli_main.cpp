#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "frobforge/cli.hpp"
#include "frobforge/errors.hpp"

namespace frobforge::cli {

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius closure and homological checks over F_p", kTool};
  Options o;
  std::string verbs;
  for (const auto& v : command_verbs()) verbs += (verbs.empty() ? "" : ", ") + v;
  app.add_option("verb", o.verb, "one of: " + verbs)->required();
  app.add_option("--input", o.input, "task file");
  app.add_option("--json", o.json_out, "write the JSON report here");
  app.add_option("--seed", o.seed, "base seed");
  app.add_option("--max-e", o.max_e, "largest Frobenius level")->capture_default_str();
  app.add_option("--window", o.window, "stabilization window")->capture_default_str();
  app.add_option("--max-t", o.max_t, "largest thickening exponent")->capture_default_str();
  app.add_option("--degree-cap", o.degree_cap, "Groebner degree cap")->capture_default_str();
  app.add_option("--budget-ms", o.budget_ms, "wall-clock budget per task")->envname("FROBFORGE_BUDGET_MS");
  app.add_option("--theorem", o.theorem, "theorem id for verify");
  app.set_version_flag("--version", kVersion);

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  TaskFile file;
  if (o.input) {
    std::ifstream in(*o.input);
    if (!in) {
      err << "cannot read " << *o.input << '\n';
      return kExitUsage;
    }
    std::stringstream text;
    text << in.rdbuf();
    try {
      file = parse_taskfile(text.str());
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (auto at = msg.rfind(" at "); at != std::string::npos) msg.resize(at);
      err << *o.input << ":" << e.line() << ":" << e.column() << ": " << msg << '\n';
      return kExitUsage;
    }
  } else if (o.verb != "suite") {
    err << "--input is required for " << o.verb << '\n';
    return kExitUsage;
  }

  Outcome outcome;
  try {
    outcome = run_command(o, file);
  } catch (const InvalidArgument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  out << outcome.summary;
  if (o.json_out) {
    std::ofstream js(*o.json_out);
    js << emit_report(outcome.report);
    if (!js) {
      err << "cannot write " << *o.json_out << '\n';
      return kExitInternal;
    }
  }
  return outcome.exit_code;
}

}  // namespace frobforge::cli
