#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <iostream>
#include <string>
#include <vector>

#include "vortex/cohomring.hpp"
#include "vortex/errors.hpp"
#include "vortex/model_io.hpp"
#include "vortex/report.hpp"
#include "vortex/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAnalysisFailure = 1;
constexpr int kParseError = 2;

struct Options {
  std::string file = "-";
  bool pretty = false;
  unsigned digits = 12;
};

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.file, "model file (JSON); - reads standard input")->required();
  cmd->add_flag("--pretty", o.pretty, "human-readable text instead of JSON");
  cmd->add_option("--digits", o.digits, "decimal digits of approximations")->check(CLI::Range(1U, 200U));
}

int print_parse_error(const std::string& file, const vortex::Error& e) {
  std::cerr << "vortexctl: " << file;
  if (const auto* p = dynamic_cast<const vortex::ParseError*>(&e); p && p->line() > 0) {
    std::cerr << ":" << p->line() << ":" << p->column();
  }
  std::cerr << ": " << e.kind() << ": " << e.what() << "\n";
  return kParseError;
}

// A single-section command fails unless its section is ok; `report` fails
// only on sections that errored.
int run_analysis(const Options& o, const std::vector<vortex::Section>* only) {
  vortex::ModelFile file;
  try {
    file = vortex::load_model_file(o.file);
  } catch (const vortex::ParseError& e) {
    return print_parse_error(o.file, e);
  } catch (const vortex::InconsistentModel& e) {
    return print_parse_error(o.file, e);
  }

  std::vector<vortex::Section> sections;
  if (only) {
    sections = *only;
  } else if (file.analysis.empty()) {
    sections = vortex::all_sections();
  } else {
    for (const auto& name : file.analysis) sections.push_back(*vortex::section_from_name(name));
  }

  const auto rep = vortex::build_report(file, sections, vortex::ReportOptions{o.digits});
  std::cout << (o.pretty ? vortex::render_text(rep.json) : rep.json);
  if (only) return rep.all_ok() ? kOk : kAnalysisFailure;
  return rep.any_error() ? kAnalysisFailure : kOk;
}

int run_selftest(const std::string& filter, bool inject_fault) {
  vortex::fault::set_series_fault(inject_fault);
  std::vector<vortex::SelftestResult> results;
  try {
    results = vortex::run_selftest(filter);
  } catch (const vortex::PreconditionError& e) {
    std::cerr << "vortexctl: " << e.what() << "\n";
    return kParseError;
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.failures.empty() ? "ok   " : "FAIL ") << r.suite << " (" << r.checks << " checks";
    if (!r.failures.empty()) std::cout << ", " << r.failures.size() << " failed";
    std::cout << ")\n";
    for (const auto& f : r.failures) std::cout << "  failed: " << f << "\n";
    failed += static_cast<int>(r.failures.size());
  }
  return failed == 0 ? kOk : kAnalysisFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of abelian vortex moduli spaces"};
  app.require_subcommand(1);

  Options opts;
  int status = kOk;

  for (vortex::Section s : vortex::all_sections()) {
    auto* cmd = app.add_subcommand(vortex::section_name(s), std::string("run the ") + vortex::section_name(s) +
                                                                " analysis");
    add_output_flags(cmd, opts);
    cmd->callback([&opts, &status, s] {
      const std::vector<vortex::Section> only{s};
      status = run_analysis(opts, &only);
    });
  }

  auto* report = app.add_subcommand("report", "run every analysis listed in the file (all when absent)");
  add_output_flags(report, opts);
  report->callback([&] { status = run_analysis(opts, nullptr); });

  std::string filter;
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "run the bundled identity checks");
  selftest->add_option("--filter", filter, "run only the named suite");
  selftest->add_flag("--inject-fault", inject_fault, "corrupt the exp series coefficient")->group("");
  selftest->callback([&] { status = run_selftest(filter, inject_fault); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  } catch (const vortex::Error& e) {
    std::cerr << "vortexctl: " << e.kind() << ": " << e.what() << "\n";
    return kAnalysisFailure;
  }
  return status;
}
