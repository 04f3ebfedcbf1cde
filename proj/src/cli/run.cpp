#include "casimir/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "casimir/thermo.hpp"

namespace casimir::cli {

namespace {

using dielectric::DielectricModel;
using dielectric::FilmState;
using dielectric::Material;
using dielectric::ModelKind;

class MaterialNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double ratio(double num, double den) { return den == 0.0 ? std::nan("") : num / den; }

std::string point_label(const FilmState& s, const char* model) {
  std::ostringstream out;
  out << "a = " << format_real(s.a) << " m, T = " << format_real(s.T) << " K";
  if (model) out << ", model = " << model;
  return out.str();
}

// Runs `body` and prefixes any failure with the grid point.
template <class F>
void at_point(const FilmState& s, const char* model, F&& body) {
  try {
    body();
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(point_label(s, model) + ": " + e.what(), e.achieved_error());
  } catch (const DomainError& e) {
    throw DomainError(point_label(s, model) + ": " + e.what());
  }
}

std::vector<Column> point_columns() {
  return {{"a_m", "m"}, {"T_K", "K"}, {"omega_p_tilde", "1"}, {"tau", "1"}};
}

std::vector<Cell> point_cells(const Material& mat, const FilmState& s) {
  const auto p = dielectric::dimensionless_params(mat, s);
  return {s.a, s.T, static_cast<double>(p.omega_p_tilde), static_cast<double>(p.tau)};
}

void append(std::vector<Column>& a, std::vector<Column> b) { a.insert(a.end(), b.begin(), b.end()); }
void append(std::vector<Cell>& a, std::vector<Cell> b) { a.insert(a.end(), b.begin(), b.end()); }

Table grid_table(const RunConfig& cfg, const Material& mat) {
  const OutputSet& o = cfg.outputs;
  Table t;
  t.columns = point_columns();
  append(t.columns, {{"model", ""},
                     {"validity_flag", ""},
                     {"window_ratio", "1"},
                     {"F_J_per_m2", "J/m^2"},
                     {"F_err", "J/m^2"},
                     {"n_matsubara", "1"},
                     {"P_Pa", "Pa"},
                     {"P_err", "Pa"},
                     {"S_J_per_m2K", "J/(m^2 K)"},
                     {"S_err", "J/(m^2 K)"},
                     {"dF_thermal", "J/m^2"},
                     {"dF_err", "J/m^2"},
                     {"dF_method", ""},
                     {"sign_ok", ""}});
  if (o.asymptotics) {
    append(t.columns, {{"dF_closed_form", "J/m^2"},
                       {"dF_expansion", "J/m^2"},
                       {"dP_closed_form", "Pa"},
                       {"S_closed_form", "J/(m^2 K)"},
                       {"S0_drude", "J/(m^2 K)"}});
  }
  if (o.decomposition) {
    append(t.columns, {{"f_plasma", "J/m^2"},
                       {"f0_drude", "J/m^2"},
                       {"f0_plasma", "J/m^2"},
                       {"f_gamma", "J/m^2"},
                       {"decomposition_total", "J/m^2"}});
  }
  if (o.bound_check) {
    append(t.columns, {{"f_gamma_first_order", "J/m^2"}, {"x_bound", "J/m^2"}, {"within_bound", ""}});
  }

  thermo::Outputs what;
  what.free_energy = o.free_energy;
  what.pressure = o.pressure;
  what.entropy = o.entropy;
  what.thermal_correction = o.asymptotics;

  for (double a : cfg.a_values) {
    for (double T : cfg.T_values) {
      for (ModelKind kind : cfg.models) {
        const FilmState s{a, T};
        const DielectricModel model{kind, mat};
        std::vector<Cell> row = point_cells(mat, s);
        at_point(s, dielectric::to_string(kind), [&] {
          const thermo::ThermoResult r = thermo::evaluate(model, s, what, cfg.quad, cfg.diff);
          auto value = [](const std::optional<thermo::Estimate>& e) { return e ? Cell{e->value} : Cell{}; };
          auto error = [](const std::optional<thermo::Estimate>& e) { return e ? Cell{e->error} : Cell{}; };
          append(row, {std::string(dielectric::to_string(kind)), r.window.inside, r.window.ratio,
                       value(r.free_energy), error(r.free_energy),
                       r.free_energy && T > 0.0 ? Cell{static_cast<long long>(r.n_matsubara)} : Cell{},
                       value(r.pressure), error(r.pressure), value(r.entropy), error(r.entropy)});
          if (r.thermal_correction) {
            append(row, {r.thermal_correction->value, r.thermal_correction->error,
                         std::string(thermo::to_string(r.thermal_correction->method))});
          } else {
            append(row, {Cell{}, Cell{}, Cell{}});
          }
          row.push_back(r.sign_ok);
          if (o.asymptotics) {
            const bool plasma = kind == ModelKind::Plasma;
            append(row, {asymptotics::delta_f_plasma(s, mat), asymptotics::delta_f_plasma_expansion(s, mat),
                         asymptotics::delta_p_plasma(s, mat),
                         plasma ? Cell{asymptotics::entropy_plasma_asymptotic(s, mat)} : Cell{},
                         plasma ? Cell{} : Cell{asymptotics::entropy_drude_zero(s, mat).s0}});
          }
          const bool drude_finite_T = kind == ModelKind::Drude && T > 0.0;
          if (o.decomposition) {
            if (drude_finite_T) {
              const auto d = asymptotics::drude_decompose(s, mat, cfg.quad);
              append(row, {d.f_plasma, d.f0_drude, d.f0_plasma, d.f_gamma, d.total});
            } else {
              append(row, {Cell{}, Cell{}, Cell{}, Cell{}, Cell{}});
            }
          }
          if (o.bound_check) {
            if (drude_finite_T) {
              const auto fg = asymptotics::f_gamma(s, mat, cfg.quad);
              const auto xb = asymptotics::x_bound(s, mat);
              append(row, {fg.first_order, xb.value, fg.exact < 0.0 && std::fabs(fg.exact) < xb.value});
            } else {
              append(row, {Cell{}, Cell{}, Cell{}});
            }
          }
        });
        t.add_row(std::move(row));
      }
    }
  }
  return t;
}

Table compare_table(const RunConfig& cfg, const Material& mat) {
  Table t;
  t.columns = point_columns();
  append(t.columns, {{"validity_flag", ""},
                     {"window_ratio", "1"},
                     {"dF_thermal", "J/m^2"},
                     {"dF_err", "J/m^2"},
                     {"dF_method", ""},
                     {"dF_closed_form", "J/m^2"},
                     {"ratio_closed_form", "1"},
                     {"dF_expansion", "J/m^2"},
                     {"ratio_expansion", "1"},
                     {"S_J_per_m2K", "J/(m^2 K)"},
                     {"S_closed_form", "J/(m^2 K)"},
                     {"S_ratio_closed_form", "1"},
                     {"dP_thermal", "Pa"},
                     {"dP_closed_form", "Pa"},
                     {"dP_ratio_closed_form", "1"}});
  const DielectricModel model{ModelKind::Plasma, mat};
  for (double a : cfg.a_values) {
    for (double T : cfg.T_values) {
      const FilmState s{a, T};
      std::vector<Cell> row = point_cells(mat, s);
      at_point(s, "plasma", [&] {
        const auto window = thermo::validate_window(s);
        append(row, {window.inside, window.ratio});
        if (T == 0.0) {
          append(row, {0.0, 0.0, std::string("closed_form"), 0.0, Cell{}, 0.0, Cell{}, 0.0, 0.0, Cell{}, 0.0, 0.0,
                       Cell{}});
          return;
        }
        const auto tc = thermo::thermal_correction(model, s, cfg.quad);
        const double df_closed = asymptotics::delta_f_plasma(s, mat);
        const double df_exp = asymptotics::delta_f_plasma_expansion(s, mat);
        const auto S = thermo::entropy(model, s, cfg.quad, cfg.diff);
        const double S_closed = asymptotics::entropy_plasma_asymptotic(s, mat);
        const auto dP = thermo::thermal_pressure(model, s, cfg.quad, cfg.diff);
        const double dP_closed = asymptotics::delta_p_plasma(s, mat);
        append(row, {tc.value, tc.error, std::string(thermo::to_string(tc.method)), df_closed,
                     ratio(tc.value, df_closed), df_exp, ratio(tc.value, df_exp), S.value, S_closed,
                     ratio(S.value, S_closed), dP.value, dP_closed, ratio(dP.value, dP_closed)});
      });
      t.add_row(std::move(row));
    }
  }
  return t;
}

Table decompose_table(const RunConfig& cfg, const Material& mat) {
  Table t;
  t.columns = point_columns();
  append(t.columns, {{"delta_1", "1"},
                     {"f_plasma", "J/m^2"},
                     {"f0_drude", "J/m^2"},
                     {"f0_plasma", "J/m^2"},
                     {"f0_plasma_closed_form", "J/m^2"},
                     {"f_gamma", "J/m^2"},
                     {"total", "J/m^2"},
                     {"F_drude_direct", "J/m^2"},
                     {"identity_rel_dev", "1"},
                     {"c_bracket", "1"},
                     {"S0_drude", "J/(m^2 K)"}});
  for (double a : cfg.a_values) {
    for (double T : cfg.T_values) {
      const FilmState s{a, T};
      std::vector<Cell> row = point_cells(mat, s);
      at_point(s, "drude", [&] {
        if (!(T > 0.0)) throw DomainError("decomposition requires T > 0");
        const auto d = asymptotics::drude_decompose(s, mat, cfg.quad);
        const auto direct = lifshitz::free_energy({ModelKind::Drude, mat}, s, cfg.quad);
        const auto f0p = asymptotics::f0_plasma(s, mat, cfg.quad);
        const auto s0 = asymptotics::entropy_drude_zero(s, mat);
        append(row, {dielectric::delta_l(mat, T, 1), d.f_plasma, d.f0_drude, d.f0_plasma, f0p.closed_form,
                     d.f_gamma, d.total, direct.value, std::fabs(d.total - direct.value) / std::fabs(direct.value),
                     static_cast<double>(s0.c_bracket), s0.s0});
      });
      t.add_row(std::move(row));
    }
  }
  return t;
}

Table bound_table(const RunConfig& cfg, const Material& mat) {
  Table t;
  t.columns = point_columns();
  append(t.columns, {{"delta_1", "1"},
                     {"f_gamma_exact", "J/m^2"},
                     {"f_gamma_first_order", "J/m^2"},
                     {"f_gamma_q_kernel", "J/m^2"},
                     {"first_order_rel_dev", "1"},
                     {"x_bound", "J/m^2"},
                     {"x_bound_series", "J/m^2"},
                     {"C1", "1"},
                     {"C2", "1"},
                     {"log_linear_ok", ""},
                     {"f_gamma_negative", ""},
                     {"within_bound", ""}});
  for (double a : cfg.a_values) {
    for (double T : cfg.T_values) {
      const FilmState s{a, T};
      std::vector<Cell> row = point_cells(mat, s);
      at_point(s, "drude", [&] {
        if (!(T > 0.0)) throw DomainError("bound check requires T > 0");
        const auto fg = asymptotics::f_gamma(s, mat, cfg.quad);
        const auto xb = asymptotics::x_bound(s, mat);
        append(row, {dielectric::delta_l(mat, T, 1), fg.exact, fg.first_order, fg.first_order_q_kernel,
                     fg.first_order_deviation(), xb.value, xb.series_value, static_cast<double>(xb.c1),
                     static_cast<double>(xb.c2), xb.log_linear_ok, fg.exact < 0.0,
                     std::fabs(fg.exact) < xb.value});
      });
      t.add_row(std::move(row));
    }
  }
  return t;
}

Table table_iii(const RunConfig& cfg) {
  Table t;
  t.columns = {{"omega_p_tilde", "1"}, {"I1", "1"},         {"I2", "1"},     {"C", "1"},
               {"I1_quadrature", "1"}, {"I2_exact", "1"},   {"C_exact", "1"}, {"i2_closed_valid", ""}};
  for (double w : cfg.omega_p_tilde_values) {
    const auto c = asymptotics::entropy_bracket(w);
    const real i2x = asymptotics::i2_exact(w, cfg.quad);
    t.add_row({w, static_cast<double>(c.i1), static_cast<double>(c.i2), static_cast<double>(c.c_bracket),
               static_cast<double>(asymptotics::i1_quadrature(w, cfg.quad)), static_cast<double>(i2x),
               static_cast<double>(constants::zeta3 + c.i1 + i2x), c.i2_valid});
  }
  return t;
}

Table materials_table() {
  Table t;
  t.columns = {{"name", ""}, {"source", ""}};
  for (const auto& e : materials::list()) t.add_row({e.name, e.source});
  return t;
}

Material resolve_material(const std::string& name) {
  try {
    return materials::resolve(name);
  } catch (const ParseError& e) {
    throw MaterialNotFound(e.what());
  } catch (const DomainError& e) {
    throw MaterialNotFound(e.what());
  }
}

std::string to_text(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

Table build_table(const RunConfig& cfg) {
  cfg.validate();
  Table t;
  if (cfg.verb == Verb::MaterialsList) {
    t = materials_table();
  } else if (cfg.verb == Verb::TableIII) {
    t = table_iii(cfg);
  } else {
    const Material mat = resolve_material(cfg.material);
    switch (cfg.verb) {
      case Verb::CompareAsymptotics: t = compare_table(cfg, mat); break;
      case Verb::Decompose: t = decompose_table(cfg, mat); break;
      case Verb::BoundCheck: t = bound_table(cfg, mat); break;
      default: t = grid_table(cfg, mat); break;
    }
    t.meta.emplace_back("material", mat.name);
  }
  t.verb = to_string(cfg.verb);
  t.meta.emplace_back("rel_tol", to_text(cfg.quad.rel_tol));
  t.meta.emplace_back("abs_tol", to_text(cfg.quad.abs_tol));
  t.meta.emplace_back("matsubara_tail_tol", to_text(cfg.quad.matsubara_tail_tol));
  t.meta.emplace_back("rel_step", to_text(cfg.diff.rel_step));
  t.meta.emplace_back("richardson_levels", std::to_string(cfg.diff.richardson_levels));
  return t;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Table t = build_table(cfg);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary);
      if (!file) {
        err << "error: config: cannot open output file '" << cfg.out_path << "'\n";
        return kConfigError;
      }
      sink = &file;
    }
    if (cfg.format == Format::Json) {
      write_json(t, *sink);
    } else {
      write_csv(t, *sink);
    }
    return kOk;
  } catch (const MaterialNotFound& e) {
    err << "error: material: " << e.what() << '\n';
    return kMaterialError;
  } catch (const ParseError& e) {
    err << "error: config: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConvergenceError& e) {
    err << "error: convergence: " << e.what() << " (achieved error " << e.achieved_error() << ")\n";
    return kNumericalError;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return kDomainError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string help;
  try {
    if (!parse_command_line(argc, argv, cfg, help)) {
      out << help;
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: config: " << e.what() << '\n';
    return kConfigError;
  }
  return run(cfg, out, err);
}

}  // namespace casimir::cli
