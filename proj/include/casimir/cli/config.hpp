#pragma once

// Run configuration for the command-line tool. Precedence: command-line
// flags, then values from --config <file> (INI or TOML), then defaults.

#include <string>
#include <vector>

#include "casimir/dielectric.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/thermo.hpp"

namespace casimir::cli {

enum class Verb { Compute, Sweep, CompareAsymptotics, Decompose, BoundCheck, TableIII, MaterialsList };
const char* to_string(Verb v);

enum class Format { Csv, Json };

/// "start:stop:count" (linear) or "start:stop:lin|log:count".
struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;
  bool log = false;

  static SweepSpec parse(const std::string& text);
  /// Grid points, increasing; throws ParseError when start >= stop (count > 1),
  /// count == 0, or a log sweep includes a value <= 0.
  std::vector<double> values() const;
};

struct OutputSet {
  bool free_energy = false;
  bool pressure = false;
  bool entropy = false;
  bool decomposition = false;
  bool asymptotics = false;
  bool bound_check = false;

  /// Comma-separated subset of free_energy, pressure, entropy, decomposition, asymptotics, bound_check.
  static OutputSet parse(const std::string& text);
};

struct RunConfig {
  Verb verb = Verb::Compute;
  std::string material = "gold";
  std::vector<dielectric::ModelKind> models{dielectric::ModelKind::Plasma};
  std::vector<double> a_values;  // m
  std::vector<double> T_values;  // K
  std::vector<double> omega_p_tilde_values{1.0, 5.0, 15.0};  // table-III
  OutputSet outputs;
  Format format = Format::Csv;
  lifshitz::QuadratureConfig quad;
  thermo::DiffConfig diff;
  std::string out_path;  // empty: standard output

  /// Throws ParseError describing the first violated constraint.
  void validate() const;
};

/// Parses argv (verb first: compute, sweep, compare-asymptotics, decompose,
/// bound-check, table-III, materials list). Throws ParseError on invalid
/// input; returns false if only help or version output was requested.
bool parse_command_line(int argc, const char* const* argv, RunConfig& cfg, std::string& help_text);

}  // namespace casimir::cli
