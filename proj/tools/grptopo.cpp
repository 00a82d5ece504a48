// Command-line front end: per-group reports, verification suites, and the
// built-in catalog listing.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 resource cap.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>

#include "grptopo/catalog.hpp"
#include "grptopo/classify.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/report.hpp"
#include "grptopo/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct ComputeArgs {
  std::vector<std::string> groups;
  std::string homology;  // coset | subgroup | all
  std::string predict;   // coset | subgroup | all
  bool zeta = false;
  bool bounds = false;
  bool pi1 = false;
  bool verify = false;
  std::string out;
  long long cap = grptopo::kDefaultOrderCap;
  bool no_cache = false;
  int jobs = 1;
};

int run_compute(const ComputeArgs& args) {
  using namespace grptopo;
  if (args.groups.empty()) {
    std::cerr << "compute needs at least one --group\n";
    return kExitUsage;
  }

  auto make_request = [&](const std::string& spec) {
    ReportRequest req;
    req.group_spec = spec;
    req.homology_coset = args.homology == "coset" || args.homology == "all";
    req.homology_subgroup = args.homology == "subgroup" || args.homology == "all";
    req.predict_coset = args.predict == "coset" || args.predict == "all";
    req.predict_subgroup = args.predict == "subgroup" || args.predict == "all";
    req.zeta = args.zeta;
    req.bounds = args.bounds;
    req.pi1 = args.pi1;
    req.verify = args.verify;
    req.order_cap = args.cap;
    req.cache.enabled = !args.no_cache;
    return req;
  };

  bool csv = args.out.size() > 4 && args.out.substr(args.out.size() - 4) == ".csv";
  std::vector<std::string> payloads(args.groups.size());

  // Independent group jobs; output order stays the input order.
  std::mutex failure_mu;
  std::optional<std::string> failure;
  std::optional<int> failure_code;
  auto worker = [&](size_t i) {
    try {
      ReportRequest req = make_request(args.groups[i]);
      payloads[i] = csv ? compute_betti_csv(req) : compute_report_json(req);
    } catch (const CapExceeded& e) {
      std::lock_guard<std::mutex> lock(failure_mu);
      failure = e.what();
      failure_code = kExitResourceCap;
    } catch (const ParseError& e) {
      std::lock_guard<std::mutex> lock(failure_mu);
      failure = e.what();
      failure_code = kExitUsage;
    }
  };
  if (args.jobs <= 1 || args.groups.size() == 1) {
    for (size_t i = 0; i < args.groups.size(); ++i) worker(i);
  } else {
    std::vector<std::future<void>> futs;
    size_t next = 0;
    std::mutex next_mu;
    int n_threads = std::min<int>(args.jobs, int(args.groups.size()));
    for (int t = 0; t < n_threads; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        while (true) {
          size_t i;
          {
            std::lock_guard<std::mutex> lock(next_mu);
            if (next >= args.groups.size()) return;
            i = next++;
          }
          worker(i);
        }
      }));
    for (auto& f : futs) f.get();
  }
  if (failure) {
    std::cerr << "error: " << *failure << "\n";
    return *failure_code;
  }

  if (args.out.empty()) {
    for (const auto& p : payloads) std::cout << p;
  } else if (args.groups.size() == 1) {
    std::ofstream f(args.out, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::cerr << "cannot write " << args.out << "\n";
      return kExitUsage;
    }
    f << payloads[0];
  } else {
    std::filesystem::create_directories(args.out);
    for (size_t i = 0; i < args.groups.size(); ++i) {
      std::string name = args.groups[i];
      for (char& c : name)
        if (c == ':' || c == ',' || c == '/' || c == '^') c = '_';
      std::ofstream f(std::filesystem::path(args.out) / (name + (csv ? ".csv" : ".json")),
                      std::ios::binary | std::ios::trunc);
      f << payloads[i];
    }
  }

  if (args.verify) {
    // --verify demands the prediction/homology comparisons all pass.
    for (const auto& p : payloads)
      if (p.find("\"coset_prediction_matches\": false") != std::string::npos ||
          p.find("\"subgroup_prediction_matches\": false") != std::string::npos)
        return kExitCheckFailure;
  }
  return kExitPass;
}

int run_verify(const std::string& suite, long long cap) {
  using namespace grptopo;
  auto checks = run_suite(suite, cap);
  int passed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " — " << c.detail << "\n";
    if (c.pass) ++passed;
  }
  std::cout << "suite " << suite << ": " << passed << "/" << checks.size() << " checks passed\n";
  return all_pass(checks) ? kExitPass : kExitCheckFailure;
}

int run_catalog(long long cap) {
  using namespace grptopo;
  for (const auto& e : builtin_catalog()) {
    Group g = catalog_group(e.spec);
    const SubgroupLattice& lat = lattice_of(g, cap);
    bool in_f = false, in_fp = false;
    classify_f_family(lat, &in_f, &in_fp);
    std::cout << e.spec << ", " << e.display << ", order " << g.order();
    if (g.is_solvable()) std::cout << ", solvable";
    if (is_simple_group(lat)) std::cout << ", simple";
    if (in_fp)
      std::cout << ", in F'";
    else if (in_f)
      std::cout << ", in F";
    std::cout << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset/subgroup poset topology of finite groups"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "analyze one or more groups");
  compute->add_option("--group", cargs.groups, "group spec (repeatable)")->required();
  compute->add_option("--homology", cargs.homology, "coset|subgroup|all")
      ->check(CLI::IsMember({"coset", "subgroup", "all"}));
  compute->add_option("--predict", cargs.predict, "coset|subgroup|all")
      ->check(CLI::IsMember({"coset", "subgroup", "all"}));
  compute->add_flag("--zeta", cargs.zeta, "Mobius table and probabilistic zeta values");
  compute->add_flag("--bounds", cargs.bounds, "Mayer-Vietoris H1 lower bounds");
  compute->add_flag("--pi1", cargs.pi1, "edge-path triviality propagation");
  compute->add_flag("--verify", cargs.verify, "cross-check predictions against homology");
  compute->add_option("--out", cargs.out, "output file (.json/.csv) or directory");
  compute->add_option("--cap", cargs.cap, "subgroup-lattice order cap (default 400)");
  compute->add_flag("--no-cache", cargs.no_cache, "bypass the report cache");
  compute->add_option("--jobs", cargs.jobs, "concurrent group jobs");

  std::string suite = "all";
  long long vcap = grptopo::kDefaultOrderCap;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("name", suite, "solvable|bounds|covers|pi1|zeta|inequality|all");
  verify->add_option("--suite", suite, "same as the positional argument");
  verify->add_option("--cap", vcap, "subgroup-lattice order cap");

  CLI::App* catalog = app.add_subcommand("catalog", "list the built-in groups");
  long long ccap = grptopo::kDefaultOrderCap;
  catalog->add_option("--cap", ccap, "subgroup-lattice order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(cargs);
    if (verify->parsed()) return run_verify(suite, vcap);
    if (catalog->parsed()) return run_catalog(ccap);
  } catch (const grptopo::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const grptopo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
