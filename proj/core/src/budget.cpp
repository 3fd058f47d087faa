#include "kanforge/budget.hpp"

#include <cstdlib>

namespace kanforge::budget {

namespace {

std::size_t initial_limit() {
  if (const char* env = std::getenv("KANFORGE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

std::size_t& current() {
  static std::size_t lim = initial_limit();
  return lim;
}

}  // namespace

std::size_t limit() { return current(); }

void set_limit(std::size_t n) { current() = n; }

void charge(std::size_t count, const std::string& what) {
  if (count > current()) {
    throw BudgetError("budget exceeded: " + what + " needs " +
                      std::to_string(count) + " elements, limit " +
                      std::to_string(current()));
  }
}

}  // namespace kanforge::budget
