#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghom/search.hpp"

namespace ghom {

enum class Execution { Parallel, Serial };

struct SuiteFailure {
  std::string instance;  // sortable instance key
  std::string reason;
  std::string data;      // JSON with the offending graphs / maps / walks
};

struct VerificationReport {
  std::string suite;
  std::size_t max_vertices = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<SuiteFailure> failures;  // sorted by instance key
  std::size_t budget_exhausted = 0;
  std::vector<std::string> exhausted_instances;  // sorted
  double wall_seconds = 0;
  Execution execution = Execution::Parallel;

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  std::size_t max_vertices = 0;  // 0: the suite's default size
  std::uint64_t seed = 1;
  Execution execution = Execution::Parallel;
  SearchLimits limits{};
  std::size_t samples = 200;  // random instances (interchange, groupoid-axioms)
  std::size_t fold_orders = 10;  // seeded random pleats per graph (pleat-confluence)
};

/// pleat-confluence, pleat-product, pleat-coproduct, interchange, spider,
/// hom-loop, groupoid-axioms, prune-confluence.
const std::vector<std::string>& suite_names();
std::size_t default_max_vertices(std::string_view suite);

/// UnknownSuite for a name outside suite_names(); TooLarge when max_vertices
/// exceeds the enumeration cap.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);
VerificationReport run_suite(std::string_view name, std::size_t max_vertices, std::uint64_t seed);

/// Timing is left out by default so that identical runs emit identical bytes.
std::string report_json(const VerificationReport& report, bool with_timing = false);

}  // namespace ghom
