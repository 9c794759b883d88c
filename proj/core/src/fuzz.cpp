#include "toricres/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "toricres/error.hpp"
#include "toricres/job.hpp"

namespace toricres::fuzz {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

json random_job(std::uint64_t seed, const CaseLimits& limits) {
  std::mt19937_64 rng(seed);
  const std::uint64_t n = uniform(rng, 1, std::max<std::uint64_t>(1, limits.max_vertices));
  std::vector<std::string> labels;
  for (std::uint64_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));

  std::vector<std::vector<std::string>> candidates;
  const int dim = static_cast<int>(uniform(rng, 1, static_cast<std::uint64_t>(std::max(1, limits.max_dimension))));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      candidates.push_back({labels[a], labels[b]});
      if (dim < 2) continue;
      for (std::uint64_t c = b + 1; c < n; ++c) candidates.push_back({labels[a], labels[b], labels[c]});
    }
  }
  // Density in percent, applied independently to every candidate simplex.
  const std::uint64_t density = uniform(rng, 10, 90);
  std::vector<std::vector<std::string>> facets;
  std::vector<bool> covered(n, false);
  for (const auto& c : candidates) {
    if (uniform(rng, 1, 100) > density) continue;
    facets.push_back(c);
    for (const auto& v : c) covered[std::stoull(v) - 1] = true;
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    if (n == 1) {
      facets.push_back({labels[i]});
      continue;
    }
    std::uint64_t j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    std::vector<std::string> edge{labels[std::min(i, j)], labels[std::max(i, j)]};
    facets.push_back(edge);
    covered[i] = covered[j] = true;
  }
  const std::uint64_t r = uniform(rng, 1, std::max<std::uint64_t>(1, limits.max_r));
  return json{{"complex", {{"vertices", labels}, {"facets", facets}}}, {"r", r}};
}

CaseResult run_case(std::uint64_t index, std::uint64_t seed, const CaseLimits& limits) {
  CaseResult out;
  out.index = index;
  out.seed = seed;
  out.job = random_job(seed, limits);
  try {
    const job::JobSpec spec = job::parse_job(out.job);
    const Refinement ref = job::obtain_refinement(spec).refinement;
    const ObstructionTables tables = compute_tables(ref);
    const WallIdentityReport w = verify_wall_identity(ref, tables);
    const KeyFormulaReport k = verify_key_formula(ref, tables, SymbolicOneCycle::full_generic(ref));
    out.refined_vertices = ref.vertices().size();
    out.walls = ref.relative_walls().size();
    out.wall_pairs = w.checked;
    out.wall_violations = w.violations.size();
    out.key_formula = k.ok();
    out.passed = w.ok() && k.ok();
  } catch (const Error& e) {
    out.error = e.what();
    out.engine_error = true;
  } catch (const std::exception& e) {
    out.error = e.what();
    out.engine_error = true;
  }
  return out;
}

std::size_t Campaign::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

int Campaign::exit_code() const {
  bool failed = false;
  for (const auto& c : cases) {
    if (c.engine_error) return job::kExitEngine;
    failed = failed || !c.passed;
  }
  return failed ? job::kExitVerificationFailed : job::kExitOk;
}

Campaign run_campaign(std::uint64_t seed, std::uint64_t count, unsigned threads,
                      const CaseLimits& limits) {
  if (count == 0) throw Error(ErrorCode::InvalidInput, "fuzz count must be at least 1");
  Campaign c;
  c.seed = seed;
  c.cases.resize(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      c.cases[i] = run_case(i, case_seed(seed, i), limits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return c;
}

json campaign_json(const Campaign& c) {
  json cases = json::array();
  json failures = json::array();
  for (const auto& r : c.cases) {
    json entry{{"index", r.index},
               {"seed", r.seed},
               {"passed", r.passed},
               {"base_vertices", r.job["complex"]["vertices"].size()},
               {"r", r.job["r"]},
               {"refined_vertices", r.refined_vertices},
               {"walls", r.walls},
               {"wall_pairs", r.wall_pairs}};
    cases.push_back(entry);
    if (!r.passed) {
      failures.push_back(json{{"index", r.index},
                              {"seed", r.seed},
                              {"job", r.job},
                              {"wall_violations", r.wall_violations},
                              {"key_formula", r.key_formula},
                              {"error", r.error}});
    }
  }
  const std::size_t passed = c.passed();
  return json{{"engine", job::engine_json()},
              {"seed", c.seed},
              {"count", c.cases.size()},
              {"passed", passed},
              {"failed", c.cases.size() - passed},
              {"cases", cases},
              {"failures", failures},
              {"verdict", passed == c.cases.size() ? "pass" : "fail"},
              {"exit_code", c.exit_code()}};
}

}  // namespace toricres::fuzz
