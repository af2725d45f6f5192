#pragma once

#include <cstdint>
#include <string>

namespace morlog {

/// Cap on enumeration work (objects produced or cells visited), read once
/// from MORLOG_MAX_WORK; defaults to 5'000'000.
uint64_t max_work();

/// Throws ResourceError when `units` exceeds max_work().
void require_work(double units, const std::string& what);

}  // namespace morlog
