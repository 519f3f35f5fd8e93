#ifndef GIMLAB_RUNNER_HPP
#define GIMLAB_RUNNER_HPP

#include "gimlab/serialize.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gimlab {

/// Malformed or incomplete job; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One batch job. command is one of mn, check-hom, image, classify,
/// loop-identities, quotient. target selects the images for check-hom,
/// image and classify: psi (the direct sum of psi_{a_k}, default), A, C, D
/// or case1..case4.
struct JobSpec {
  std::string command;
  int n = 3;
  std::vector<Rational> a;
  std::string target = "psi";
  SignVariant variant = SignVariant::plus;
  std::optional<LemmaMode> mode;
  std::string output_path;
};

/// Accepts {"command", "n", "a": ["p/q", ...], "target", "case", "variant",
/// "mode", "output_path"}; "case": k is shorthand for "target": "casek".
/// Throws UsageError on unknown keys' values, wrong types or missing parameters.
JobSpec job_from_json(const json& j);
json to_json(const JobSpec& spec);
/// Throws UsageError unless every parameter the command needs is present and sane.
void validate(const JobSpec& spec);

/// On-disk store of closure bases keyed by a hash of (ambient size, generators).
/// Entries hold the generators too; a hit is only used when they match exactly,
/// so a hash collision degrades to a miss.
class ClosureCache {
public:
  explicit ClosureCache(std::filesystem::path dir);

  /// GIMLAB_CACHE if set and nonempty, else cli_dir; nullopt when both are empty.
  static std::optional<ClosureCache> from_environment(const std::string& cli_dir);

  SubalgebraBasis closure(std::span<const RatMatrix> generators);
  static std::string key(std::span<const RatMatrix> generators);

  const std::filesystem::path& dir() const { return dir_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  static constexpr int format_version = 1;

private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// lie_closure, going through the cache when one is given.
SubalgebraBasis closure_of(std::span<const RatMatrix> generators, ClosureCache* cache);

/// The images a check-hom / image / classify job works on.
GeneratorImages job_images(const JobSpec& spec);

struct JobResult {
  int exit_code = 0; // 0 all assertions pass, 1 some assertion failed, 2 usage error
  json report;
};

/// Validates, runs and (if spec.output_path is set) writes the report as
/// indented JSON. Usage errors are returned with exit_code 2 and an "error" field.
JobResult run_job(const JobSpec& spec, ClosureCache* cache = nullptr);

struct SummaryRow {
  int n = 0;
  std::string check;
  std::string instance;
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct ReproduceResult {
  std::vector<SummaryRow> rows;
  std::string markdown;
  int exit_code = 0;
};

/// Runs the full verification table for each n, writes per-job JSON reports
/// and summary.md into out_dir (created if missing).
ReproduceResult reproduce_all(const std::vector<int>& n_values, const std::filesystem::path& out_dir,
                              ClosureCache* cache = nullptr);

/// Writes j.dump(2) plus a trailing newline.
void write_json(const std::filesystem::path& path, const json& j);

} // namespace gimlab

#endif // GIMLAB_RUNNER_HPP
