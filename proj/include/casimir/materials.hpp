#pragma once

// Materials files: one material per file, `key = value` lines, `#` starts a
// comment. Recognised keys: name, omega_p_rad_s, gamma_ref_rad_s, T_ref_K,
// T_debye_K, beta_low, T_cross_K (optional), comment (optional).

#include <filesystem>
#include <string>
#include <vector>

#include "casimir/dielectric.hpp"

namespace casimir::materials {

inline constexpr const char* kSearchPathEnv = "CASIMIR_MATERIALS_PATH";

dielectric::Material parse(const std::string& text);
std::string serialize(const dielectric::Material& mat);

dielectric::Material load(const std::filesystem::path& file);

/// Directories searched for materials: entries of $CASIMIR_MATERIALS_PATH
/// (':'-separated) first, then the repository's materials/ directory.
std::vector<std::filesystem::path> search_path();

/// Resolves a material by file path or by name on the search path; the
/// built-in gold definition is used when no file named "gold" is found.
/// Throws ParseError when nothing matches.
dielectric::Material resolve(const std::string& name_or_path,
                             const std::vector<std::filesystem::path>& dirs = search_path());

struct Entry {
  std::string name;
  std::string source;  // file path or "built-in"
};
std::vector<Entry> list(const std::vector<std::filesystem::path>& dirs = search_path());

}  // namespace casimir::materials
