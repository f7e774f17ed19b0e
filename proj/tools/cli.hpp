#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slicestab/serialize.hpp"

namespace slicestab::cli {

struct JobSpec {
  std::string command;  // fixed-points, tangent, stab-exact, stab-mod-h2, mult, verify
  char type = 'A';
  int rank = 1;
  std::vector<int> lambda;
  std::vector<int> mu;
  std::string chamber = "dominant";  // "dominant", "antidominant" or rationals "1,-1/2"
  std::string polarization = "repelling";  // or explicit signs "1,-1,..."
  std::string bundle;  // mult: L<k> or E<k>
  std::string check;   // verify: duality, recursion, wallcross, oracle, all
  std::string format = "json";
  std::string out;
  bool use_cache = true;

  // Everything that determines the result; used as the cache key.
  Json canonical() const;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

// Runs one verification group on a slice. "all" runs every group and skips
// the ones that need type A1 on other types. Throws NotA1 when a single
// A1-only group is requested on another type.
std::vector<CheckResult> run_checks(const FixedLocus& locus, const Chamber& ch, const Polarization& pol,
                                    const std::string& group);

Chamber parse_chamber(const CartanPtr& cartan, const std::string& text);
Polarization parse_polarization(const FixedLocus& locus, const Chamber& ch, const std::string& text);

// Result document of a job; throws ValidationError or ComputationError.
Json compute(const JobSpec& job);
std::string render_table(const Json& doc);
std::string point_label(const Json& point);

// Exit codes: 0 success, 2 invalid input, 3 computation or verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicestab::cli
