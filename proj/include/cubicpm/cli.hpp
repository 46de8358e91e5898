#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicpm {

/// Runs one command line (program name excluded). Returns 0 on success or
/// all-Pass, 1 when a lemma check fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cubicpm
