#ifndef HILB_VERIFY_HPP
#define HILB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hilb {

struct CheckResult {
  std::string name;
  bool pass = false;
  long long items = 0;  // instances / values examined
  double seconds = 0;
  std::vector<std::string> failures;  // first few mismatch descriptions
};

struct ScaleSpec {
  bool exhaustive = false;
  long long samples = 100'000;
};

struct VerifyOptions {
  ScaleSpec n6;                          // sweep:cor3-n6
  ScaleSpec n7;                          // sweep:cmain-n7
  int magic_max_n = 30;                  // identity:magic
  long long teo2_random_samples = 20'000;    // per n in 6..8
  long long targeted_samples = 30'000;       // per n in 7..10 (t3/main)
  long long bbound_samples = 30'000;         // per n in 7..12 (b3q/b45/b55)
  long long patrat_samples = 300;
  long long pipeline_ideals_per_n = 1'000;   // oracle:alpha-pipelines
  long long polarization_samples = 1'000;    // polarization:consistency
  std::uint64_t seed = 0x48494C42;
  int threads = 1;
};

/// All check names, in run order.
std::vector<std::string> check_names();

/// Runs every check whose name contains `only` (all when empty).
std::vector<CheckResult> run_checks(const VerifyOptions& options,
                                    const std::string& only = "");

}  // namespace hilb

#endif
