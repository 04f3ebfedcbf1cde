#include "casimir/cli/config.hpp"

#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "casimir/errors.hpp"

namespace casimir::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + ": expected a number, got '" + text + "'");
  }
}

}  // namespace

const char* to_string(Verb v) {
  switch (v) {
    case Verb::Compute: return "compute";
    case Verb::Sweep: return "sweep";
    case Verb::CompareAsymptotics: return "compare-asymptotics";
    case Verb::Decompose: return "decompose";
    case Verb::BoundCheck: return "bound-check";
    case Verb::TableIII: return "table-III";
    case Verb::MaterialsList: return "materials list";
  }
  return "?";
}

SweepSpec SweepSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  SweepSpec s;
  std::string count;
  if (parts.size() == 3) {
    count = parts[2];
  } else if (parts.size() == 4) {
    if (parts[2] == "log") {
      s.log = true;
    } else if (parts[2] != "lin") {
      throw ParseError("sweep '" + text + "': scale must be 'lin' or 'log'");
    }
    count = parts[3];
  } else {
    throw ParseError("sweep '" + text + "': expected start:stop:count or start:stop:lin|log:count");
  }
  s.start = parse_double(parts[0], "sweep start");
  s.stop = parse_double(parts[1], "sweep stop");
  const double n = parse_double(count, "sweep count");
  if (!(n >= 1.0) || n != std::floor(n)) throw ParseError("sweep '" + text + "': count must be a positive integer");
  s.count = static_cast<std::size_t>(n);
  return s;
}

std::vector<double> SweepSpec::values() const {
  if (count == 0) throw ParseError("sweep: count must be >= 1");
  if (count > 1 && !(start < stop)) throw ParseError("sweep: start must be < stop");
  if (log && !(start > 0.0)) throw ParseError("sweep: log scale requires start > 0");
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(log ? start * std::pow(stop / start, f) : start + (stop - start) * f);
  }
  out.back() = stop;
  return out;
}

OutputSet OutputSet::parse(const std::string& text) {
  OutputSet o;
  for (const auto& raw : split(text, ',')) {
    const std::string item = raw;
    if (item == "free_energy") o.free_energy = true;
    else if (item == "pressure") o.pressure = true;
    else if (item == "entropy") o.entropy = true;
    else if (item == "decomposition") o.decomposition = true;
    else if (item == "asymptotics") o.asymptotics = true;
    else if (item == "bound_check") o.bound_check = true;
    else throw ParseError("--outputs: unknown output '" + item + "'");
  }
  return o;
}

void RunConfig::validate() const {
  try {
    quad.validate();
    diff.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (verb == Verb::MaterialsList) return;
  if (verb == Verb::TableIII) {
    if (omega_p_tilde_values.empty()) throw ParseError("table-III: no --omega-p-tilde values");
    for (double w : omega_p_tilde_values) {
      if (!(w > 0.0)) throw ParseError("table-III: --omega-p-tilde values must be > 0");
    }
    return;
  }
  if (a_values.empty()) throw ParseError(std::string(to_string(verb)) + ": thickness required (--a or --a-sweep)");
  if (T_values.empty()) throw ParseError(std::string(to_string(verb)) + ": temperature required (--T or --T-sweep)");
  for (double a : a_values) {
    if (!(a > 0.0)) throw ParseError("thickness values must be > 0");
  }
  for (double T : T_values) {
    if (!(T >= 0.0)) throw ParseError("temperature values must be >= 0");
  }
  if (verb == Verb::Compute && (a_values.size() > 1 || T_values.size() > 1)) {
    throw ParseError("compute: single point only; use 'sweep' for grids");
  }
  if (models.empty()) throw ParseError("no dielectric model selected");
}

bool parse_command_line(int argc, const char* const* argv, RunConfig& cfg, std::string& help_text) {
  CLI::App app{"Casimir free energy, pressure and entropy of a free-standing metallic film"};
  app.name("casimir");
  app.set_config("--config", "", "Read options from an INI/TOML file; command-line flags take precedence");
  app.require_subcommand(1);

  std::string material = cfg.material, model = "plasma", outputs, format = "csv";
  std::string a_sweep, T_sweep;
  std::vector<double> a_list, T_list, w_list;
  double rel_tol = cfg.quad.rel_tol, abs_tol = cfg.quad.abs_tol, tail_tol = cfg.quad.matsubara_tail_tol;
  std::size_t max_l = cfg.quad.max_l;
  double rel_step = cfg.diff.rel_step;
  int levels = cfg.diff.richardson_levels;

  app.add_option("--material", material, "Material name on the search path, or a materials file")
      ->capture_default_str();
  app.add_option("--model", model, "Dielectric model: plasma, drude or both")
      ->check(CLI::IsMember({"plasma", "drude", "both"}))
      ->capture_default_str();
  app.add_option("--a", a_list, "Film thickness(es), m")->delimiter(',');
  app.add_option("--T", T_list, "Temperature(s), K")->delimiter(',');
  app.add_option("--a-sweep", a_sweep, "Thickness sweep start:stop:[lin|log:]count, m");
  app.add_option("--T-sweep", T_sweep, "Temperature sweep start:stop:[lin|log:]count, K");
  app.add_option("--outputs", outputs,
                 "Comma-separated: free_energy, pressure, entropy, decomposition, asymptotics, bound_check");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--rel-tol", rel_tol, "Relative quadrature tolerance")->capture_default_str();
  app.add_option("--abs-tol", abs_tol, "Absolute quadrature tolerance")->capture_default_str();
  app.add_option("--tail-tol", tail_tol, "Relative Matsubara tail tolerance")->capture_default_str();
  app.add_option("--max-l", max_l, "Maximum number of Matsubara terms")->capture_default_str();
  app.add_option("--rel-step", rel_step, "Relative finite-difference step")->capture_default_str();
  app.add_option("--richardson-levels", levels, "Richardson extrapolation levels")->capture_default_str();
  app.add_option("--omega-p-tilde", w_list, "table-III: dimensionless plasma frequencies 2 a omega_p / c")
      ->delimiter(',');
  app.add_option("--out", cfg.out_path, "Write the table to this file instead of standard output");

  struct VerbEntry {
    Verb verb;
    CLI::App* app;
  };
  std::vector<VerbEntry> verbs = {
      {Verb::Compute, app.add_subcommand("compute", "Single (a, T) point")},
      {Verb::Sweep, app.add_subcommand("sweep", "Grid over a and/or T, one row per (a, T, model)")},
      {Verb::CompareAsymptotics,
       app.add_subcommand("compare-asymptotics", "Direct plasma thermal corrections against closed forms")},
      {Verb::Decompose, app.add_subcommand("decompose", "Drude free-energy decomposition")},
      {Verb::BoundCheck, app.add_subcommand("bound-check", "F^(gamma) against its upper bound X(a, T)")},
      {Verb::TableIII, app.add_subcommand("table-III", "I_1, I_2 and C at selected omega_p_tilde")},
  };
  CLI::App* materials = app.add_subcommand("materials", "Materials on the search path");
  CLI::App* materials_list = materials->add_subcommand("list", "List resolvable materials");
  materials->require_subcommand(1);
  for (auto& v : verbs) v.app->fallthrough();
  materials->fallthrough();
  materials_list->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_text = app.help();
    return false;
  } catch (const CLI::CallForAllHelp&) {
    help_text = app.help("", CLI::AppFormatMode::All);
    return false;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  bool found = false;
  for (const auto& v : verbs) {
    if (v.app->parsed()) {
      cfg.verb = v.verb;
      found = true;
    }
  }
  if (materials_list->parsed()) {
    cfg.verb = Verb::MaterialsList;
    found = true;
  }
  if (!found) throw ParseError("no verb given");

  cfg.material = material;
  if (model == "plasma") cfg.models = {dielectric::ModelKind::Plasma};
  else if (model == "drude") cfg.models = {dielectric::ModelKind::Drude};
  else cfg.models = {dielectric::ModelKind::Plasma, dielectric::ModelKind::Drude};
  if (!a_list.empty() && !a_sweep.empty()) throw ParseError("give either --a or --a-sweep, not both");
  if (!T_list.empty() && !T_sweep.empty()) throw ParseError("give either --T or --T-sweep, not both");
  cfg.a_values = a_sweep.empty() ? a_list : SweepSpec::parse(a_sweep).values();
  cfg.T_values = T_sweep.empty() ? T_list : SweepSpec::parse(T_sweep).values();
  if (!w_list.empty()) cfg.omega_p_tilde_values = w_list;
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  if (!outputs.empty()) {
    cfg.outputs = OutputSet::parse(outputs);
  } else {
    cfg.outputs.free_energy = true;
  }
  cfg.quad.rel_tol = rel_tol;
  cfg.quad.abs_tol = abs_tol;
  cfg.quad.matsubara_tail_tol = tail_tol;
  cfg.quad.max_l = max_l;
  cfg.diff.rel_step = rel_step;
  cfg.diff.richardson_levels = levels;
  cfg.validate();
  return true;
}

}  // namespace casimir::cli
