#include "hopfdy/errors.hpp"

#include <atomic>
#include <chrono>

namespace hopfdy {

namespace {
// Nanoseconds since the steady clock epoch; 0 means no deadline.
std::atomic<long long> g_deadline{0};
}  // namespace

void set_deadline(double seconds) {
  if (seconds <= 0) {
    g_deadline.store(0);
    return;
  }
  auto now = std::chrono::steady_clock::now().time_since_epoch();
  auto add = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::duration<double>(seconds));
  g_deadline.store(std::chrono::duration_cast<std::chrono::nanoseconds>(now + add).count());
}

void check_deadline(const char* where) {
  long long d = g_deadline.load(std::memory_order_relaxed);
  if (d == 0) return;
  auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
  if (now > d) throw BudgetExceeded(std::string("time budget exceeded during ") + where);
}

}  // namespace hopfdy
