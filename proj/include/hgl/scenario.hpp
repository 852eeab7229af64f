#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgl/growth.hpp"
#include "hgl/spread.hpp"

namespace hgl {

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct ScenarioParseError : std::runtime_error {
  ScenarioParseError(SourcePos pos_, const std::string& msg)
      : std::runtime_error(std::to_string(pos_.line) + ":" + std::to_string(pos_.col) +
                           ": " + msg),
        pos(pos_) {}
  SourcePos pos;
};

struct PolySrc {
  std::string text;
  SourcePos pos;
};

struct IdealDecl {
  std::string name;
  std::vector<PolySrc> gens;
  SourcePos pos;
};

struct ModuleDecl {
  std::string name;
  int rows = 0, cols = 0;
  std::vector<PolySrc> entries;  // row-major
  SourcePos pos;
};

struct ExprAst {
  enum class Kind { Name, QuotPower };
  Kind kind = Kind::Name;
  std::string name;        // module or ring name (Name); optional module (QuotPower)
  std::string ideal;       // QuotPower only
  SourcePos pos;

  std::string str() const;
};

struct FunctorDecl {
  std::string kind;  // ext | tor | ext-swapped | h0m
  int i = 0;
  std::optional<ExprAst> first, second;
  SourcePos pos;
};

struct ComposeDecl {
  std::string kind;  // ext | tor
  int j = 0;
  std::string with;
  SourcePos pos;
};

/// Parsed scenario file: the line-oriented DSL of the lab CLI.
struct ScenarioSpec {
  std::string name;  // registry name when built-in

  long long characteristic = kDefaultCharacteristic;
  bool char_set = false;

  std::string ring_name;
  std::vector<std::string> vars;
  std::vector<int> weights;
  SourcePos ring_pos;
  std::vector<PolySrc> relations;

  std::vector<IdealDecl> ideals;
  std::vector<ModuleDecl> modules;

  std::optional<FunctorDecl> functor;
  std::optional<ComposeDecl> compose;

  long long n0 = 0, n1 = 0;
  bool has_range = false;
  int max_period = 6;
  bool audit_dim = false, audit_spread = false;
  bool oracle = false;
};

ScenarioSpec parse_scenario(const std::string& text);
std::string print_scenario(const ScenarioSpec& spec);

struct ResolvedScenario {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Submodule> modules;  // cokernel form
};

/// Build the ring and all declared objects; throws ScenarioParseError on
/// unresolved names or malformed data.
ResolvedScenario resolve_scenario(const ScenarioSpec& spec);

struct RunOptions {
  std::optional<int> max_period_override;
  bool parallel = true;
};

struct OracleComparison {
  std::vector<long long> values;
  bool match = true;
  std::vector<long long> mismatch_n;
};

struct RunReport {
  ScenarioSpec spec;
  LengthSequence seq;
  bool fit_attempted = false;
  std::optional<GrowthReport> fit;  // nullopt after attempt = NO_FIT
  std::optional<BoundAudit> audit;
  int dim_value = 0, spread_value = 0;
  std::optional<OracleComparison> oracle;
  double elapsed_seconds = 0.0;  // reported on stderr only, never in the files
};

RunReport run_scenario(const ScenarioSpec& spec, const RunOptions& opts = {});

/// Monomial count for the squares-Veronese family: pairs (a, b) with
/// a + b even, a >= n, not covered by the staircase of I^n.
LengthSequence run_oracle_veronese(long long n0, long long n1);

std::string report_json(const RunReport& report);
std::string report_csv(const RunReport& report);

// --- built-in scenario registry ---------------------------------------------

const std::vector<std::string>& builtin_scenario_names();
/// DSL text for the built-ins expressible in the DSL; nullopt for the
/// native artin-rees probe.
std::optional<std::string> builtin_scenario_text(const std::string& name);

struct ArtinReesProbeTriple {
  std::string label;
  ArtinReesResult result;
};

struct ArtinReesProbeReport {
  std::vector<ArtinReesProbeTriple> triples;
};

ArtinReesProbeReport run_artin_rees_probe();
std::string probe_json(const ArtinReesProbeReport& report);
std::string probe_csv(const ArtinReesProbeReport& report);

/// HGL_MAX_DEGREE cap for degreewise brute-force checks.
int env_max_degree(int fallback);

}  // namespace hgl
