#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hds {

inline constexpr const char *kSchemaVersion = "1";

/// Runs one CLI invocation (args exclude the program name). JSON goes to
/// out. Returns 0 on success, 1 on usage errors, 2 on domain errors (with
/// {"error":{"kind","message"}} on out) and 3 when verify-paper finds a
/// mismatch.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in);

} // namespace hds
