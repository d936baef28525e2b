#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "su3/dfun.hpp"

namespace su3 {

struct VerifyOptions {
  int max_quanta = 6;      // irreps with lambda + 2 mu <= max_quanta
  std::uint64_t seed = 1;  // all random draws derive from this
  int samples = 10;        // random parameter draws per irrep
};

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Random parameters: alphas and gammas uniform in [-2pi, 2pi], betas in [0, pi].
SU3Params random_params(std::mt19937_64& rng);

/// Closed forms against the boson realization, plus the homomorphism and
/// factorization round trip. Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace su3
