#include "morlog/work_limit.hpp"

#include <cstdlib>
#include <string>

#include "morlog/errors.hpp"

namespace morlog {

uint64_t max_work() {
  static const uint64_t limit = [] {
    const char* env = std::getenv("MORLOG_MAX_WORK");
    if (env == nullptr || *env == '\0') return uint64_t{5'000'000};
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return uint64_t{5'000'000};
    return static_cast<uint64_t>(v);
  }();
  return limit;
}

void require_work(double units, const std::string& what) {
  if (units > static_cast<double>(max_work()))
    throw ResourceError(what + ": work estimate " + std::to_string(static_cast<uint64_t>(units)) +
                        " exceeds MORLOG_MAX_WORK=" + std::to_string(max_work()));
}

}  // namespace morlog
