#include <fstream>
#include <sstream>
#include <iostream>

#include <CLI11.hpp>

#include "dhecke/json_io.hpp"
#include "dhecke/regime.hpp"
#include "dhecke/suites.hpp"

using namespace dhecke;

namespace {

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError(out + ": cannot write file");
  f << text;
}

void add_common(CLI::App& app, RunConfig& cfg, std::string& out) {
  app.add_option("--group", cfg.group, "root datum: SL2, PGL2, SL3, Sp4")->capture_default_str();
  app.add_option("--q", cfg.q, "residue field size")->capture_default_str();
  app.add_option("--ell", cfg.ell, "coefficient prime")->capture_default_str();
  app.add_option("--r", cfg.r, "coefficients Z/ell^r")->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "cohomological degree bound (suite default if omitted)");
  app.add_option("--support", cfg.support, "support bound |n| <= N")->capture_default_str();
  app.add_option("--depth", cfg.depth, "tree depth")->capture_default_str();
  app.add_option("--precision", cfg.precision, "jet precision of the Theta projector")->capture_default_str();
  app.add_option("--out", out, "write the JSON here instead of stdout");
}

ToralContext context_for(const RunConfig& cfg) {
  RootDatum rd = build_root_datum(cfg.group);
  CoeffRing s(cfg.ell, cfg.r);
  require_regime(rd, s, cfg.q);
  return ToralContext::for_q(rd, cfg.q, s);
}

Json config_json(const RunConfig& cfg) {
  return {{"group", cfg.group}, {"q", cfg.q}, {"ell", cfg.ell}, {"r", cfg.r}};
}

int run_satake(const RunConfig& cfg, const std::vector<std::string>& files, bool presentation, const std::string& out) {
  ToralContext ctx = context_for(cfg);
  Json result = config_json(cfg);
  if (presentation) {
    int d = cfg.max_degree >= 0 ? cfg.max_degree : 2;
    InvariantTable t = invariant_dims(ctx, cfg.support, d);
    Json shells = Json::array();
    for (std::size_t i = 0; i < t.shells.size(); ++i)
      shells.push_back({{"lambda", t.shells[i]}, {"ranks", t.ranks[i]}});
    result["support"] = cfg.support;
    result["max_degree"] = d;
    result["shells"] = shells;
    result["dims"] = t.totals;
  }
  if (!files.empty()) {
    if (files.size() != 2) throw InputError("satake multiplies exactly two element files");
    ToralElement a(ctx), b(ctx);
    for (int i = 0; i < 2; ++i) {
      Json j = read_json_file(files[static_cast<std::size_t>(i)]);
      try {
        (i == 0 ? a : b) = toral_element_from_json(j, ctx);
      } catch (const InputError& e) {
        throw InputError(files[static_cast<std::size_t>(i)] + ":" + e.what());
      }
    }
    result["product"] = to_json(toral_convolve(a, b, ProductBounds::unbounded()));
  }
  if (!presentation && files.empty()) throw InputError("satake needs two element files or --presentation");
  emit(result, out);
  return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite, const std::string& out) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  Json reports = Json::array();
  bool ok = true;
  for (const auto& name : suites) {
    SuiteReport rep = run_suite(name, cfg);
    ok = ok && rep.pass();
    reports.push_back(rep.to_json());
  }
  emit(suites.size() == 1 ? reports[0] : Json{{"suite", "all"}, {"reports", reports}}, out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derived Hecke algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string out, suite, manifold_path, chi;
  std::vector<std::string> files;
  bool presentation = false;

  CLI::App* satake = app.add_subcommand("satake", "multiply toral elements or print the invariant table");
  add_common(*satake, cfg, out);
  satake->add_option("files", files, "two element JSON files");
  satake->add_flag("--presentation", presentation, "print invariant ranks for |n| <= support");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(*verify, cfg, out);
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--vars", cfg.vars, "polynomial variables for the koszul suite")->capture_default_str();
  verify->add_option("--chi", chi, "character values for the iwahori suite, comma separated");
  verify->add_option("--manifold", manifold_path, "manifold descriptor JSON for the manifold suite");
  verify->add_option("--samples", cfg.samples, "random pairs in the commutativity suite")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!chi.empty()) {
      std::stringstream ss(chi);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          cfg.chi.push_back(std::stoll(item));
        } catch (const std::exception&) {
          throw InputError("--chi: '" + item + "' is not an integer");
        }
      }
    }
    if (!manifold_path.empty()) cfg.manifold = read_json_file(manifold_path);
    if (*satake) return run_satake(cfg, files, presentation, out);
    return run_verify(cfg, suite, out);
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
