#include "gimlab/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gimlab;

namespace {

struct Options {
  int n = 3;
  std::vector<std::string> a;
  int case_id = 0;
  std::string target = "psi";
  std::string variant = "plus";
  std::string mode;
  std::string out;
  std::string cache;
};

void add_job_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "rank n (>= 3)");
  cmd->add_option("--a", o.a, "tuple entries as p/q")->allow_extra_args();
  cmd->add_option("--case", o.case_id, "case 1..4 (same as --target caseK)")->check(CLI::Range(1, 4));
  cmd->add_option("--target", o.target, "psi | A | C | D | case1..case4");
  cmd->add_option("--variant", o.variant, "plus | minus");
  cmd->add_option("--mode", o.mode, "lemma51..lemma54 (classify)");
  cmd->add_option("--out", o.out, "write the JSON report here instead of stdout");
  cmd->add_option("--cache", o.cache, "closure cache directory (GIMLAB_CACHE overrides)");
}

JobSpec spec_from(const std::string& command, const Options& o) {
  JobSpec spec;
  spec.command = command;
  spec.n = o.n;
  for (const auto& s : o.a) spec.a.push_back(Rational::from_string(s));
  spec.target = o.case_id ? "case" + std::to_string(o.case_id) : o.target;
  spec.variant = sign_variant_from_string(o.variant);
  if (!o.mode.empty()) spec.mode = lemma_mode_from_string(o.mode);
  spec.output_path = o.out;
  return spec;
}

int finish(const JobResult& r, const std::string& out) {
  if (out.empty()) std::cout << r.report.dump(2) << '\n';
  else std::cout << (r.exit_code == 0 ? "pass" : r.exit_code == 1 ? "FAIL" : "usage error") << ": " << out << '\n';
  if (r.exit_code == 2) std::cerr << "error: " << r.report.value("error", std::string("usage error")) << '\n';
  return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tool for generalized intersection matrix algebras"};
  app.require_subcommand(1);

  Options opts;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"mn", "emit the GIM matrix M_n"},
      {"check-hom", "check every defining relation on the chosen images"},
      {"image", "Lie closure of the chosen images"},
      {"classify", "classify the closure block by block"},
      {"loop-identities", "fixed-point generator relations and the Xi bracket chain"},
      {"quotient", "partial fractions and the quotient evaluation map"}};
  for (const auto& [name, help] : commands) add_job_options(app.add_subcommand(name, help), opts);

  std::string job_file, run_cache;
  auto* run = app.add_subcommand("run", "run a JSON job specification");
  run->add_option("--job", job_file, "job file")->required()->check(CLI::ExistingFile);
  run->add_option("--cache", run_cache, "closure cache directory (GIMLAB_CACHE overrides)");

  std::vector<int> ns;
  std::string out_dir = "gimlab-report", rep_cache;
  auto* rep = app.add_subcommand("reproduce", "run the whole verification table");
  rep->add_option("--n", ns, "ranks to cover")->allow_extra_args();
  rep->add_option("--out-dir", out_dir, "directory for summary.md and per-job JSON");
  rep->add_option("--cache", rep_cache, "closure cache directory (GIMLAB_CACHE overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      std::ifstream in(job_file);
      JobSpec spec;
      try {
        spec = job_from_json(json::parse(in));
      } catch (const json::exception& e) {
        throw UsageError(std::string("job file is not valid JSON: ") + e.what());
      }
      auto cache = ClosureCache::from_environment(run_cache);
      return finish(run_job(spec, cache ? &*cache : nullptr), spec.output_path);
    }
    if (rep->parsed()) {
      auto cache = ClosureCache::from_environment(rep_cache);
      const auto r = reproduce_all(ns, out_dir, cache ? &*cache : nullptr);
      std::cout << r.markdown;
      return r.exit_code;
    }
    for (const auto* sub : app.get_subcommands()) {
      const JobSpec spec = spec_from(sub->get_name(), opts);
      auto cache = ClosureCache::from_environment(opts.cache);
      return finish(run_job(spec, cache ? &*cache : nullptr), spec.output_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
