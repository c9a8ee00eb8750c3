#pragma once

// Bulk agreement check between the solver and the brute-force oracle over
// every (n, T) with 0 <= n <= n_max and T^2 <= 4n.

#include "rsq/errors.hpp"
#include "rsq/oracle.hpp"
#include "rsq/restricted_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace rsq {

struct Mismatch {
  std::int64_t n;
  std::int64_t T;
  bool oracle_exists;
  bool solver_decides;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct InvalidWitness {
  std::int64_t n;
  std::int64_t T;
  std::optional<oracle::Quadruple> representation;  // empty when solve produced nothing
  std::string detail;
};

struct VerificationReport {
  std::uint64_t scanned_instances = 0;
  std::vector<Mismatch> mismatches;
  std::vector<InvalidWitness> invalid_witnesses;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return mismatches.empty() && invalid_witnesses.empty(); }

  /// Associative merge; entry lists are kept sorted by (n, T).
  VerificationReport& merge(VerificationReport other) {
    scanned_instances += other.scanned_instances;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
    invalid_witnesses.insert(invalid_witnesses.end(), std::make_move_iterator(other.invalid_witnesses.begin()),
                             std::make_move_iterator(other.invalid_witnesses.end()));
    std::sort(mismatches.begin(), mismatches.end(),
              [](const auto& x, const auto& y) { return std::tie(x.n, x.T) < std::tie(y.n, y.T); });
    std::sort(invalid_witnesses.begin(), invalid_witnesses.end(),
              [](const auto& x, const auto& y) { return std::tie(x.n, x.T) < std::tie(y.n, y.T); });
    elapsed = std::max(elapsed, other.elapsed);
    return *this;
  }
};

namespace detail {

inline std::int64_t max_abs_T(std::int64_t n) {
  std::int64_t t = 0;
  while ((t + 1) * (t + 1) <= 4 * n) ++t;
  return t;
}

/// Checks one instance and appends any disagreement to the report.
inline void verify_instance(std::int64_t n, std::int64_t T, std::int64_t oracle_bound, std::uint64_t search_cap,
                            VerificationReport& report) {
  ++report.scanned_instances;
  const RestrictedTarget<Integer> target{n, T};
  const bool decided = decide(target);
  const bool exists = oracle::exists(n, T, oracle_bound);
  if (decided != exists) report.mismatches.push_back({n, T, exists, decided});
  if (!decided) return;

  try {
    auto rep = solve(target, search_cap);
    if (!rep) {
      report.invalid_witnesses.push_back({n, T, std::nullopt, "solve returned none"});
      return;
    }
    oracle::Quadruple q{};
    for (std::size_t i = 0; i < 4; ++i) q[i] = rep->a[i].convert_to<std::int64_t>();
    const std::int64_t squares = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    const std::int64_t sum = q[0] + q[1] + q[2] + q[3];
    if (squares != n || sum != T) report.invalid_witnesses.push_back({n, T, q, "identity check failed"});
  } catch (const ContractViolation& e) {
    report.invalid_witnesses.push_back({n, T, std::nullopt, e.what()});
  }
}

}  // namespace detail

/// Scans the whole grid. With jobs > 1, values of n are dealt round-robin to
/// worker threads and the partial reports merged. Throws CapacityError if
/// n_max exceeds the oracle bound.
inline VerificationReport verify_range(std::int64_t n_max, unsigned jobs = 1,
                                       std::int64_t oracle_bound = oracle::kDefaultOracleBound,
                                       std::uint64_t search_cap = kDefaultSearchCap) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (n_max > oracle_bound) {
    throw CapacityError("verify refused: n_max = " + std::to_string(n_max) + " exceeds oracle bound " +
                        std::to_string(oracle_bound));
  }
  jobs = std::max(1u, jobs);
  const auto start = std::chrono::steady_clock::now();

  std::vector<VerificationReport> shards(jobs);
  std::vector<std::exception_ptr> failures(jobs);
  auto work = [&](unsigned shard) {
    try {
      for (std::int64_t n = shard; n <= n_max; n += jobs) {
        const std::int64_t bound = detail::max_abs_T(n);
        for (std::int64_t T = -bound; T <= bound; ++T) {
          detail::verify_instance(n, T, oracle_bound, search_cap, shards[shard]);
        }
      }
    } catch (...) {
      failures[shard] = std::current_exception();
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned s = 0; s < jobs; ++s) workers.emplace_back(work, s);
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  VerificationReport report;
  for (auto& shard : shards) report.merge(std::move(shard));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace rsq
