// Prints one line per acceptance criterion. Exits nonzero if a criterion fails,
// except for failures flagged as a documented conflict with published data.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "dessinum/acceptance.hpp"

int main(int argc, char** argv) {
  dessinum::AcceptanceOptions opts;
  opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("DESSINUM_JOBS")) opts.jobs = std::max(1, std::atoi(env));
  if (argc > 1) opts.max_weight = std::atoll(argv[1]);

  int hard = 0, conflicts = 0;
  dessinum::run_acceptance(opts, [&](const dessinum::CriterionResult& r) {
    std::cout << dessinum::format_result(r) << std::endl;
    if (!r.passed) (r.known_conflict ? conflicts : hard)++;
  });
  std::cout << (dessinum::kCriterionCount - hard - conflicts) << "/" << dessinum::kCriterionCount << " passed";
  if (conflicts) std::cout << ", " << conflicts << " known conflict";
  if (hard) std::cout << ", " << hard << " failed";
  std::cout << std::endl;
  return hard == 0 ? 0 : 1;
}
