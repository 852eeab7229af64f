#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hgl/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit_run(const hgl::RunReport& report, const std::string& format) {
  if (format == "json")
    std::cout << hgl::report_json(report);
  else
    std::cout << hgl::report_csv(report);
  std::cerr << "# elapsed: " << report.elapsed_seconds << "s\n";
  return 0;
}

hgl::LengthSequence read_csv_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  hgl::LengthSequence seq;
  bool first = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n,", 0) == 0) continue;  // header
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed csv line: " + line);
    long long n = std::stoll(line.substr(0, comma));
    std::string v = line.substr(comma + 1);
    if (first) {
      seq.n0 = n;
      first = false;
    } else if (n != seq.n0 + static_cast<long long>(seq.values.size())) {
      throw std::runtime_error("csv rows must be contiguous in n");
    }
    if (v == "INFINITE")
      seq.values.push_back(std::nullopt);
    else
      seq.values.push_back(std::stoll(v));
  }
  if (seq.values.empty()) throw std::runtime_error("csv contains no rows");
  seq.provenance = path;
  return seq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hgl: length growth of Ext/Tor along ideal powers"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  int max_period = -1;
  app.add_option("--max-period", max_period, "override the fitter's period search bound");

  auto* sc_scenario = app.add_subcommand("scenario", "run a built-in scenario by name");
  std::string scenario_name;
  sc_scenario->add_option("name", scenario_name, "built-in scenario name")->required();

  auto* sc_run = app.add_subcommand("run", "run a scenario file");
  std::string run_path;
  sc_run->add_option("file", run_path, "scenario file (.hgl)")->required();

  auto* sc_fit = app.add_subcommand("fit", "fit an n,length csv sequence");
  std::string fit_path;
  int fit_max_degree = 6;
  sc_fit->add_option("file", fit_path, "csv file with n,length rows")->required();
  sc_fit->add_option("--max-degree", fit_max_degree, "degree search bound");

  auto* sc_gb = app.add_subcommand("gb", "print reduced Groebner bases of the ideals in a file");
  std::string gb_path;
  sc_gb->add_option("file", gb_path, "scenario file (.hgl)")->required();

  auto* sc_list = app.add_subcommand("list", "list built-in scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    hgl::RunOptions opts;
    if (max_period > 0) opts.max_period_override = max_period;

    if (sc_list->parsed()) {
      for (const auto& n : hgl::builtin_scenario_names()) std::cout << n << "\n";
      return 0;
    }

    if (sc_scenario->parsed()) {
      if (scenario_name == "artin-rees-probe") {
        hgl::ArtinReesProbeReport rep = hgl::run_artin_rees_probe();
        std::cout << (format == "json" ? hgl::probe_json(rep) : hgl::probe_csv(rep));
        return 0;
      }
      auto text = hgl::builtin_scenario_text(scenario_name);
      if (!text) {
        std::cerr << "error: unknown scenario '" << scenario_name
                  << "' (see `hgl list`)\n";
        return 1;
      }
      hgl::ScenarioSpec spec = hgl::parse_scenario(*text);
      spec.name = scenario_name;
      return emit_run(hgl::run_scenario(spec, opts), format);
    }

    if (sc_run->parsed()) {
      hgl::ScenarioSpec spec = hgl::parse_scenario(read_file(run_path));
      spec.name = run_path;
      return emit_run(hgl::run_scenario(spec, opts), format);
    }

    if (sc_fit->parsed()) {
      hgl::LengthSequence seq = read_csv_sequence(fit_path);
      hgl::RunReport report;
      report.seq = seq;
      report.spec.n0 = seq.n0;
      report.spec.n1 = seq.n0 + static_cast<long long>(seq.values.size()) - 1;
      report.spec.max_period = max_period > 0 ? max_period : 6;
      report.fit_attempted = true;
      report.fit = hgl::fit_quasipolynomial(seq, report.spec.max_period, fit_max_degree);
      if (format == "json")
        std::cout << hgl::report_json(report);
      else
        std::cout << hgl::report_csv(report);
      return 0;
    }

    if (sc_gb->parsed()) {
      hgl::ScenarioSpec spec = hgl::parse_scenario(read_file(gb_path));
      hgl::ResolvedScenario res = hgl::resolve_scenario(spec);
      for (const auto& [name, ideal] : res.ideals) {
        std::cout << name << ":\n";
        for (const auto& g : ideal.groebner().gens)
          std::cout << "  " << g.comp(0).str() << "\n";
      }
      return 0;
    }
  } catch (const hgl::ScenarioParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
