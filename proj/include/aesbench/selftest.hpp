#pragma once

#include <iosfwd>

namespace aesbench {

/// Known-answer vectors on both cipher paths, a T-table vs reference
/// differential sweep and round-trips for every mode. Writes one line per
/// check to `log`; returns false if any check failed.
bool run_selftest(std::ostream& log);

} // namespace aesbench
