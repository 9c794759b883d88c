#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toricres/json_io.hpp"

namespace toricres::fuzz {

using io::json;

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of case `index` in a campaign seeded with `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [lo, hi] by rejection sampling, identical on every platform.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

struct CaseLimits {
  std::uint64_t max_vertices = 8;
  int max_dimension = 2;
  std::uint64_t max_r = 6;
};

/// A job object {"complex", "r"} drawn from the case seed.
json random_job(std::uint64_t seed, const CaseLimits& limits = {});

struct CaseResult {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  json job;
  bool passed = false;
  std::size_t refined_vertices = 0;
  std::size_t walls = 0;
  std::size_t wall_pairs = 0;
  std::size_t wall_violations = 0;
  bool key_formula = false;
  std::string error;
  bool engine_error = false;
};

/// Resolves with the default schedule and runs both verifications.
CaseResult run_case(std::uint64_t index, std::uint64_t seed, const CaseLimits& limits = {});

struct Campaign {
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  std::size_t passed() const;
  int exit_code() const;
};

/// Cases run on `threads` workers (0 = hardware concurrency) and are merged by index.
Campaign run_campaign(std::uint64_t seed, std::uint64_t count, unsigned threads = 0,
                      const CaseLimits& limits = {});

json campaign_json(const Campaign& c);

}  // namespace toricres::fuzz
