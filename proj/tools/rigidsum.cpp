#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "rigidsum/report.hpp"

using namespace rigidsum;

namespace {

// Exit codes: 0 success, 2 bad input, 3 computation failure, 4 a check or
// identification failed.
int run(const std::string& cmd, const std::string& path, const std::string& out,
        bool timings) {
  nlohmann::json spec_json;
  {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "rigidsum: cannot open " << path << "\n";
      return 2;
    }
    try {
      in >> spec_json;
    } catch (const std::exception& e) {
      std::cerr << "rigidsum: " << path << ": " << e.what() << "\n";
      return 2;
    }
  }

  nlohmann::json report;
  try {
    JobSpec s = parse_spec(spec_json);
    if (cmd == "lfunction")
      report = lfunction_report(s, timings);
    else if (cmd == "fourier")
      report = fourier_report(s, timings);
    else
      report = verify_report(s, timings);
  } catch (const SpecError& e) {
    std::cerr << "rigidsum: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rigidsum: computation failed: " << e.what() << "\n";
    return 3;
  }

  std::string text = render_report(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out, std::ios::binary);
    if (!o) {
      std::cerr << "rigidsum: cannot write " << out << "\n";
      return 2;
    }
    o << text;
  }
  return report_ok(report) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified L-polynomials of exponential sums on the affine line"};
  app.require_subcommand(1);

  std::string path, out;
  bool timings = false;
  const std::pair<const char*, const char*> cmds[] = {
      {"lfunction", "certified characteristic polynomial of Frobenius on H^1"},
      {"fourier", "fiber-by-fiber Fourier transform of the twist"},
      {"verify", "consistency battery for the job's modules"},
  };
  for (const auto& [name, help] : cmds) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("job", path, "job file (json)")->required();
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->add_flag("--timings", timings, "include wall-clock timings");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, help] : cmds)
    if (app.got_subcommand(name)) return run(name, path, out, timings);
  return 2;
}
