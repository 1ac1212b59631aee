#pragma once

#include <string>
#include <vector>

namespace cayley_k0::verify {

struct check_failure {
  std::string suite;
  long n = 0;
  long j = -1;  // -1 when the check has no j component
  std::string check;
  std::string detail;
};

struct sweep_result {
  long checks_run = 0;
  std::vector<check_failure> failures;
  bool ok() const { return failures.empty(); }
};

// Runs one verification sweep.  Suites: reduction (full route vs companion
// reduction), zeros (determinant zero locus and sign), j2 / j3 (closed
// forms vs both matrix routes plus their ingredient identities), monoid
// (enumerated monoids vs cokernel orders; capped at n <= 6 where the
// state budget is realistic), realization (4-vertex realization graphs vs
// C_n^3), all (everything).  Cells may be evaluated concurrently
// (CAYLEY_K0_THREADS caps the fan-out); results are canonicalized so the
// schedule never changes output.
sweep_result run_suite(const std::string& suite, long n_max, long j_max);

// {"suite":..,"n_max":..,"j_max":..,"checks_run":..,"failures":[..],"ok":..}
std::string sweep_to_json(const sweep_result& r, const std::string& suite,
                          long n_max, long j_max);

}  // namespace cayley_k0::verify
