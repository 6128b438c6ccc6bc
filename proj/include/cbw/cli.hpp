#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbw {

/// Dispatches one CLI invocation (argv without the program name).
/// Returns 0 on success, 1 on usage errors, 2 on netlist parse errors,
/// 3 on numeric/metrology errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cbw
