#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mobiset {

/// Thrown when a search runs out of its node or wall-clock allowance.
/// Distinct from a negative verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes, double elapsed_ms)
      : std::runtime_error(what), nodes_(nodes), elapsed_ms_(elapsed_ms) {}
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] double elapsed_ms() const noexcept { return elapsed_ms_; }

 private:
  std::uint64_t nodes_;
  double elapsed_ms_;
};

struct Budget {
  double seconds = std::numeric_limits<double>::infinity();
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();

  static Budget unlimited() { return {}; }
  static Budget of_seconds(double s) { return {s, std::numeric_limits<std::uint64_t>::max()}; }
  static Budget of_nodes(std::uint64_t n) { return {std::numeric_limits<double>::infinity(), n}; }
};

/// Counts search nodes against a Budget; the clock is consulted every 1024 nodes.
class BudgetMeter {
 public:
  explicit BudgetMeter(Budget budget, std::string what = "search")
      : budget_(budget), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) fail();
    if ((nodes_ & 1023U) == 0 && elapsed_ms() > budget_.seconds * 1000.0) fail();
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  [[noreturn]] void fail() const {
    throw BudgetExceeded(what_ + " exceeded its budget", nodes_, elapsed_ms());
  }

  Budget budget_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace mobiset
