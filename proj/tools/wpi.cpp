#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpi/group_analysis.hpp"
#include "wpi/hl.hpp"
#include "wpi/lattice.hpp"
#include "wpi/numerology.hpp"
#include "wpi/polyalg.hpp"
#include "wpi/presentation.hpp"
#include "wpi/verify.hpp"

namespace {

wpi::SerialFormat serial_format(const std::string& s) {
  if (s == "json") return wpi::SerialFormat::Json;
  if (s == "gap") return wpi::SerialFormat::Gap;
  if (s == "magma") return wpi::SerialFormat::Magma;
  if (s == "text") return wpi::SerialFormat::Text;
  throw std::invalid_argument("unknown format: " + s);
}

wpi::Presentation build_from_args(int n, int d, const std::string& variant,
                                  int pact_exponent, bool allow_odd_d,
                                  const std::string& fixture_case, int l) {
  if (variant == "elliptic") return wpi::build_elliptic();
  if (variant == "zariski") return wpi::build_zariski(l);
  if (variant == "fixture") return wpi::special_fixture(fixture_case);
  std::optional<int> pact;
  if (pact_exponent > 0) pact = pact_exponent;
  return wpi::build_presentation(n, d, wpi::variant_from_name(variant), pact, allow_odd_d);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wpi: presentations, lattice graphs, degree formulas and critical-value"
               " checks for Weierstrass discriminant complements"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML file");

  int n = 1, d = 1, l = 3, pact_exponent = 0, max_cosets = 100000;
  int n_max = 6, d_max = 6;
  bool allow_odd_d = false;
  std::string variant = "discriminant", format = "json", fixture_case = "n1d1";
  std::string file = "-";
  std::uint64_t seed = 1;
  double v0 = 1.0, ratio = 0.01, tol = 1e-9;

  auto* present = app.add_subcommand("present", "emit a presentation");
  present->add_option("--n", n);
  present->add_option("--d", d);
  present->add_option("--variant", variant,
                      "singularity|discriminant|moduli|zariski|elliptic|fixture");
  present->add_option("--format", format, "json|gap|magma|text");
  present->add_option("--pact-exponent", pact_exponent, "moduli relation vi exponent (default 3d)");
  present->add_option("--case", fixture_case, "fixture case id");
  present->add_option("--l", l, "zariski string count");
  present->add_flag("--allow-odd-d", allow_odd_d);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "sl2z|abelian|fixtures|hl|numerology|slice|family-g")
      ->required();
  verify->add_option("--seed", seed, "base seed for sampled checks")->envname("WPI_SEED");
  verify->add_option("--n", n);
  verify->add_option("--d", d);
  verify->add_option("--tol", tol);
  bool verify_nd_set = false;
  verify->callback([&] { verify_nd_set = verify->count("--n") > 0; });

  auto* graph = app.add_subcommand("graph", "emit Gamma_{n,d}");
  graph->add_option("--n", n);
  graph->add_option("--d", d);
  graph->add_option("--format", format, "dot|json");

  auto* abelianize = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abelianize->add_option("--n", n);
  abelianize->add_option("--d", d);
  abelianize->add_option("--variant", variant);
  abelianize->add_option("--case", fixture_case);
  abelianize->add_option("--l", l);
  abelianize->add_option("--pact-exponent", pact_exponent);
  abelianize->add_flag("--allow-odd-d", allow_odd_d);

  auto* tc = app.add_subcommand("todd-coxeter", "coset enumeration over the trivial subgroup");
  tc->add_option("--file", file, "presentation JSON ('-' for stdin)");
  tc->add_option("--max-cosets", max_cosets);

  auto* hl = app.add_subcommand("hl", "Hefez-Lazzeri critical value table");
  hl->add_option("--n", n);
  hl->add_option("--d", d);
  hl->add_option("--v0", v0);
  hl->add_option("--ratio", ratio);
  hl->add_option("--format", format, "json|csv");

  auto* slice = app.add_subcommand("slice", "Weierstrass slice z-degree experiment");
  slice->add_option("--d", d);
  slice->add_option("--seed", seed)->envname("WPI_SEED");

  auto* formulas = app.add_subcommand("formulas", "degree formula table");
  formulas->add_option("--n-max", n_max);
  formulas->add_option("--d-max", d_max);
  formulas->add_option("--format", format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (present->parsed()) {
      std::cout << wpi::serialize(
          build_from_args(n, d, variant, pact_exponent, allow_odd_d, fixture_case, l),
          serial_format(format));
      if (format != "json") return 0;
      std::cout << "\n";
      return 0;
    }
    if (verify->parsed()) {
      if (suite == "hl" && verify_nd_set) {
        wpi::HLParams p = wpi::canonical_hl(n, d);
        bool ok = wpi::verify_hl_match(p, tol) &&
                  wpi::verify_root_of_unity_invariance(p, tol) && wpi::verify_circles(p, tol);
        nlohmann::json j = {{"suite", "hl"}, {"n", n}, {"d", d}, {"ok", ok}};
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
      }
      wpi::SuiteReport rep = wpi::run_suite(suite, seed);
      std::cout << rep.to_json() << "\n";
      return rep.ok ? 0 : 1;
    }
    if (graph->parsed()) {
      wpi::LatticeGraph g = wpi::build_graph(n, d);
      std::cout << (format == "dot" ? wpi::graph_to_dot(g) : wpi::graph_to_json(g) + "\n");
      return 0;
    }
    if (abelianize->parsed()) {
      auto inv = wpi::abelianization(
          build_from_args(n, d, variant, pact_exponent, allow_odd_d, fixture_case, l));
      nlohmann::json j = nlohmann::json::array();
      for (const auto& f : inv) j.push_back(f.str());
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (tc->parsed()) {
      std::string text;
      if (file == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
      } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
      }
      wpi::CosetResult res =
          wpi::todd_coxeter(wpi::parse_json(text), {}, static_cast<std::size_t>(max_cosets));
      nlohmann::json j;
      j["exceeded"] = res.exceeded;
      if (!res.exceeded) j["index"] = res.index;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (hl->parsed()) {
      wpi::CriticalValueTable t = wpi::closed_form_values(wpi::canonical_hl(n, d, v0, ratio));
      std::cout << (format == "csv" ? t.to_csv() : t.to_json() + "\n");
      return 0;
    }
    if (slice->parsed()) {
      std::cout << wpi::weierstrass_slice_zdegree(d, seed).to_json() << "\n";
      return 0;
    }
    if (formulas->parsed()) {
      if (format == "text") {
        std::cout << "n d deg_p deg_z_p deg_q wdeg_p wdeg_q deg_v_q deg_c\n";
        for (int nn = 1; nn <= n_max; ++nn)
          for (int dd = 1; dd <= d_max; ++dd) {
            wpi::DegreeReport r = wpi::degrees(nn, dd);
            std::cout << nn << " " << dd << " " << r.deg_p << " " << r.deg_z_p << " "
                      << r.deg_q << " " << r.wdeg_p << " " << r.wdeg_q << " " << r.deg_v_q
                      << " " << r.deg_c << "\n";
          }
      } else {
        nlohmann::json j = nlohmann::json::array();
        for (int nn = 1; nn <= n_max; ++nn)
          for (int dd = 1; dd <= d_max; ++dd)
            j.push_back(nlohmann::json::parse(wpi::degrees(nn, dd).to_json()));
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
