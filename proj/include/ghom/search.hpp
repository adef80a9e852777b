#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ghom {

/// Outcome of a bounded equivalence search. Only `NotEquivalent` is a
/// certified negative; `NotFound` means every padded length inside the budget
/// was explored completely without a connection, and `BudgetExhausted` means
/// the state cap or a cancellation cut the search short.
enum class Verdict { Equivalent, NotEquivalent, NotFound, BudgetExhausted };

std::string_view to_string(Verdict v) noexcept;

inline constexpr std::size_t kDefaultPadBudget = 4;
inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Cooperative cancellation flag, polled between BFS layers.
class CancelToken {
 public:
  void cancel() noexcept { flag_.store(true, std::memory_order_relaxed); }
  bool cancelled() const noexcept { return flag_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> flag_{false};
};

struct SearchLimits {
  std::size_t pad_budget = kDefaultPadBudget;
  std::uint64_t state_cap = kDefaultStateCap;
  const CancelToken* cancel = nullptr;
};

}  // namespace ghom
