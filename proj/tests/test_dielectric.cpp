#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

using namespace casimir;
using namespace casimir::dielectric;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("casimir_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_SUITE("dielectric") {
  TEST_CASE("Matsubara frequencies") {
    CHECK(matsubara_xi(300.0, 0) == 0.0);
    CHECK(matsubara_xi(300.0, 1) == doctest::Approx(2.5e14).epsilon(0.02));
    CHECK(matsubara_xi(300.0, 3) == doctest::Approx(3.0 * matsubara_xi(300.0, 1)).epsilon(1e-15));
    CHECK_THROWS_AS(matsubara_xi(0.0, 1), DomainError);
    CHECK_THROWS_AS(matsubara_xi(10.0, -1), DomainError);
  }

  TEST_CASE("gamma(T) anchors, branches and continuity") {
    const Material au = gold();
    CHECK(gamma_of_T(au, 300.0) == doctest::Approx(5.3e13).epsilon(1e-15));
    CHECK(gamma_of_T(au, 0.0) == 0.0);
    const auto joins = gamma_branch_joins(au);
    CHECK(joins.low == doctest::Approx(165.0 / 20.0));
    CHECK(joins.high == doctest::Approx(165.0 / 4.0));
    for (double join : {joins.low, joins.high}) {
      const double below = gamma_of_T(au, join * (1.0 - 1e-9));
      const double above = gamma_of_T(au, join * (1.0 + 1e-9));
      CHECK(above == doctest::Approx(below).epsilon(1e-7));
    }
    CHECK(gamma_branch(au, 5.0) == 0);
    CHECK(gamma_branch(au, 20.0) == 1);
    CHECK(gamma_branch(au, 100.0) == 2);
    // Local power laws.
    CHECK(gamma_of_T(au, 4.0) / gamma_of_T(au, 2.0) == doctest::Approx(4.0));
    CHECK(gamma_of_T(au, 30.0) / gamma_of_T(au, 15.0) == doctest::Approx(32.0));
    CHECK(gamma_of_T(au, 200.0) / gamma_of_T(au, 100.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(gamma_of_T(au, -1.0), DomainError);
  }

  TEST_CASE("delta_1 for gold at 30 K and 10 K, within a factor of 3") {
    const Material au = gold();
    const double d30 = delta_l(au, 30.0, 1);
    const double d10 = delta_l(au, 10.0, 1);
    CHECK(d30 > 5e-2 / 3.0);
    CHECK(d30 < 5e-2 * 3.0);
    CHECK(d10 > 2e-3 / 3.0);
    CHECK(d10 < 2e-3 * 3.0);
    CHECK(delta_l(au, 30.0, 2) == doctest::Approx(d30 / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(delta_l(au, 10.0, 0), DomainError);
    CHECK_THROWS_AS(delta_l(au, 0.0, 1), DomainError);
  }

  TEST_CASE("delta_1 vanishes as T -> 0") {
    const Material au = gold();
    double prev = delta_l(au, 8.0, 1);
    for (double T : {4.0, 2.0, 1.0, 0.5, 0.1}) {
      const double d = delta_l(au, T, 1);
      CHECK(d < prev);
      prev = d;
    }
    CHECK(prev < 1e-5);
  }

  TEST_CASE("permittivities") {
    const Material au = gold();
    CHECK(epsilon_plasma(au, au.omega_p) == doctest::Approx(2.0));
    CHECK(epsilon_plasma(au, 1e14) - 1.0 == doctest::Approx(1.8769e4).epsilon(1e-12));
    CHECK(epsilon_plasma(au, 1e30) == doctest::Approx(1.0));
    Material lossless = au;
    lossless.gamma_ref = 0.0;
    CHECK(epsilon_drude(lossless, 300.0, 1e14) == doctest::Approx(epsilon_plasma(au, 1e14)).epsilon(1e-15));
    double prev_p = 1e300, prev_d = 1e300;
    for (double xi = 1e11; xi < 1e18; xi *= 3.0) {
      const double ep = epsilon_plasma(au, xi);
      const double ed = epsilon_drude(au, 300.0, xi);
      CHECK(ed < ep);
      CHECK(ed > 1.0);
      CHECK(ep < prev_p);
      CHECK(ed < prev_d);
      prev_p = ep;
      prev_d = ed;
    }
    CHECK_THROWS_AS(epsilon_plasma(au, 0.0), DomainError);
    CHECK_THROWS_AS(epsilon_drude(au, 10.0, 0.0), DomainError);
  }

  TEST_CASE("first-order expansion of the Drude permittivity in delta") {
    const Material au = gold();
    const FilmState s{100e-9, 10.0};
    const auto p = dimensionless_params(au, s);
    const double xi = matsubara_xi(s.T, 1);
    Material m = au;
    // Choose gamma so that delta_1 = 1e-3.
    m.gamma_ref = au.gamma_ref * 1e-3 / delta_l(au, s.T, 1);
    const double delta = delta_l(m, s.T, 1);
    CHECK(delta == doctest::Approx(1e-3).epsilon(1e-12));
    const double zeta = static_cast<double>(p.tau);
    const double w = static_cast<double>(p.omega_p_tilde);
    const double first_order = epsilon_plasma(m, xi) - w * w / (zeta * zeta) * delta;
    const double exact = epsilon_drude(m, s.T, xi);
    const double second_order = w * w / (zeta * zeta) * delta * delta;
    CHECK(std::fabs(exact - first_order) < 2.0 * second_order);
    CHECK(std::fabs(exact - first_order) > 0.5 * second_order);
  }

  TEST_CASE("dimensionless parameters") {
    const Material au = gold();
    CHECK(static_cast<double>(dimensionless_params(au, {5.4e-9, 1.0}).omega_p_tilde) ==
          doctest::Approx(0.5).epsilon(0.02));
    CHECK(static_cast<double>(dimensionless_params(au, {55e-9, 1.0}).omega_p_tilde) ==
          doctest::Approx(5.0).epsilon(0.02));
    const auto p0 = dimensionless_params(au, {100e-9, 0.0});
    CHECK(p0.tau == 0.0L);
    CHECK(p0.gamma_tilde == 0.0L);
    const auto p = dimensionless_params(au, {100e-9, 300.0});
    const double expected_tau = 4.0 * M_PI * constants::k_B * 300.0 * 100e-9 / (constants::hbar * constants::c);
    CHECK(static_cast<double>(p.tau) == doctest::Approx(expected_tau).epsilon(1e-14));
    CHECK(omega_c(100e-9) == doctest::Approx(constants::c / 200e-9));
    CHECK_THROWS_AS(dimensionless_params(au, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(dimensionless_params(au, {1e-7, -1.0}), DomainError);
  }

  TEST_CASE("material invariants") {
    CHECK_NOTHROW(gold().validate());
    Material m = gold();
    m.beta_low = 1.0;
    CHECK_THROWS_AS(m.validate(), DomainError);
    m = gold();
    m.omega_p = 0.0;
    CHECK_THROWS_AS(m.validate(), DomainError);
    m = gold();
    m.T_cross = 50.0;
    CHECK_THROWS_AS(m.validate(), DomainError);
    CHECK(parse_model_kind("drude") == ModelKind::Drude);
    CHECK_THROWS_AS(parse_model_kind("lorentz"), DomainError);
  }
}

TEST_SUITE("materials") {
  TEST_CASE("shipped gold file equals the built-in definition") {
    const Material from_file = materials::load(fs::path(CASIMIR_SOURCE_DIR) / "materials" / "gold");
    Material builtin = gold();
    builtin.comment = from_file.comment;
    CHECK(from_file == builtin);
  }

  TEST_CASE("parse, serialize, parse is the identity") {
    Material m = gold();
    m.name = "test metal";
    m.T_cross = 7.5;
    m.comment = "value with = sign";
    const Material back = materials::parse(materials::serialize(m));
    CHECK(back == m);
    CHECK(materials::parse(materials::serialize(back)) == back);
  }

  TEST_CASE("parse errors carry line numbers and keys") {
    const std::string base =
        "name = x\nomega_p_rad_s = 1e16\ngamma_ref_rad_s = 1e13\nT_ref_K = 300\nT_debye_K = 200\nbeta_low = 2\n";
    CHECK_NOTHROW(materials::parse(base));
    CHECK_THROWS_AS(materials::parse(base + "colour = red\n"), ParseError);
    CHECK_THROWS_AS(materials::parse(base + "beta_low = 3\n"), ParseError);
    CHECK_THROWS_AS(materials::parse("name = x\n"), ParseError);
    CHECK_THROWS_AS(materials::parse(base + "no separator\n"), ParseError);
    try {
      materials::parse("# header\nname = x\nomega_p_rad_s = fast\ngamma_ref_rad_s = 1e13\nT_ref_K = 300\nT_debye_K = 200\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("line 3") != std::string::npos);
      CHECK(msg.find("omega_p_rad_s") != std::string::npos);
    }
    CHECK_THROWS_AS(materials::parse(base + "T_cross_K = 100\n"), DomainError);
  }

  TEST_CASE("search path resolution and listing") {
    const fs::path dir = scratch_dir("materials");
    Material m = gold();
    m.name = "silver";
    m.omega_p = 1.35e16;
    write_file(dir / "silver", materials::serialize(m));
    const std::vector<fs::path> dirs{dir};
    CHECK(materials::resolve("silver", dirs).omega_p == 1.35e16);
    CHECK(materials::resolve((dir / "silver").string(), dirs).name == "silver");
    CHECK(materials::resolve("gold", dirs) == gold());
    CHECK_THROWS_AS(materials::resolve("unobtainium", dirs), ParseError);
    CHECK_THROWS_AS(materials::resolve((dir / "missing").string(), dirs), ParseError);
    const auto entries = materials::list(dirs);
    bool has_silver = false, has_gold = false;
    for (const auto& e : entries) {
      has_silver = has_silver || e.name == "silver";
      has_gold = has_gold || e.name == "gold";
    }
    CHECK(has_silver);
    CHECK(has_gold);
    fs::remove_all(dir);
  }

  TEST_CASE("environment variable extends the search path") {
    const fs::path dir = scratch_dir("materials_env");
    Material m = gold();
    m.name = "copper";
    write_file(dir / "copper", materials::serialize(m));
    ::setenv(materials::kSearchPathEnv, dir.c_str(), 1);
    const auto dirs = materials::search_path();
    ::unsetenv(materials::kSearchPathEnv);
    REQUIRE(!dirs.empty());
    CHECK(dirs.front() == dir);
    CHECK(materials::resolve("copper", dirs).name == "copper");
    fs::remove_all(dir);
  }
}
