#include "casimir/materials.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "casimir/errors.hpp"

#ifndef CASIMIR_DEFAULT_MATERIALS_DIR
#define CASIMIR_DEFAULT_MATERIALS_DIR "materials"
#endif

namespace casimir::materials {

namespace fs = std::filesystem;
using dielectric::Material;

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_number(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("materials file line " + std::to_string(line) + ": '" + key +
                     "' expects a number, got '" + value + "'");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Material parse(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::map<std::string, int> key_line;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string stripped = trim(raw);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError("materials file line " + std::to_string(line) + ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    key_line[key] = line;
    if (!kv.emplace(key, value).second) {
      throw ParseError("materials file line " + std::to_string(line) + ": duplicate key '" + key + "'");
    }
  }

  static const std::set<std::string> known = {"name",      "omega_p_rad_s", "gamma_ref_rad_s",
                                              "T_ref_K",   "T_debye_K",     "beta_low",
                                              "T_cross_K", "comment"};
  for (const auto& [key, _] : kv) {
    if (!known.count(key)) throw ParseError("materials file: unknown key '" + key + "'");
  }
  for (const char* required : {"name", "omega_p_rad_s", "gamma_ref_rad_s", "T_ref_K", "T_debye_K"}) {
    if (!kv.count(required)) throw ParseError(std::string("materials file: missing key '") + required + "'");
  }

  Material m;
  m.name = kv["name"];
  m.omega_p = to_number("omega_p_rad_s", kv["omega_p_rad_s"], key_line["omega_p_rad_s"]);
  m.gamma_ref = to_number("gamma_ref_rad_s", kv["gamma_ref_rad_s"], key_line["gamma_ref_rad_s"]);
  m.T_ref = to_number("T_ref_K", kv["T_ref_K"], key_line["T_ref_K"]);
  m.T_debye = to_number("T_debye_K", kv["T_debye_K"], key_line["T_debye_K"]);
  if (kv.count("beta_low")) m.beta_low = to_number("beta_low", kv["beta_low"], key_line["beta_low"]);
  if (kv.count("T_cross_K")) m.T_cross = to_number("T_cross_K", kv["T_cross_K"], key_line["T_cross_K"]);
  if (kv.count("comment")) m.comment = kv["comment"];
  m.validate();
  return m;
}

std::string serialize(const Material& m) {
  std::ostringstream out;
  out << "name = " << m.name << '\n'
      << "omega_p_rad_s = " << format_double(m.omega_p) << '\n'
      << "gamma_ref_rad_s = " << format_double(m.gamma_ref) << '\n'
      << "T_ref_K = " << format_double(m.T_ref) << '\n'
      << "T_debye_K = " << format_double(m.T_debye) << '\n'
      << "beta_low = " << format_double(m.beta_low) << '\n';
  if (m.T_cross > 0.0) out << "T_cross_K = " << format_double(m.T_cross) << '\n';
  if (!m.comment.empty()) out << "comment = " << m.comment << '\n';
  return out.str();
}

Material load(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open materials file '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

std::vector<fs::path> search_path() {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv(kSearchPathEnv)) {
    std::string s = env;
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto colon = s.find(':', start);
      const std::string part = s.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
      if (!part.empty()) dirs.emplace_back(part);
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
  }
  dirs.emplace_back(CASIMIR_DEFAULT_MATERIALS_DIR);
  return dirs;
}

Material resolve(const std::string& name_or_path, const std::vector<fs::path>& dirs) {
  std::error_code ec;
  if (name_or_path.find('/') != std::string::npos || fs::is_regular_file(name_or_path, ec)) {
    if (fs::is_regular_file(name_or_path, ec)) return load(name_or_path);
    throw ParseError("material file '" + name_or_path + "' not found");
  }
  for (const auto& dir : dirs) {
    for (const fs::path& candidate : {dir / name_or_path, dir / (name_or_path + ".txt")}) {
      if (fs::is_regular_file(candidate, ec)) return load(candidate);
    }
  }
  if (name_or_path == "gold") return dielectric::gold();
  throw ParseError("material '" + name_or_path + "' not found on the materials search path");
}

std::vector<Entry> list(const std::vector<fs::path>& dirs) {
  std::vector<Entry> out;
  std::set<std::string> seen;
  for (const auto& dir : dirs) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) continue;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir, ec)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        const Material m = load(f);
        if (seen.insert(m.name).second) out.push_back({m.name, f.string()});
      } catch (const std::exception&) {
        // Not a materials file; skip.
      }
    }
  }
  if (!seen.count("gold")) out.push_back({"gold", "built-in"});
  return out;
}

}  // namespace casimir::materials
