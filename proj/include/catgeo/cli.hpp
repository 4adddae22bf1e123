#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catgeo {

// Inclusive range lo:hi:step (values lo + i step up to hi + step / 2),
// lo:hi (ten steps) or a single value. Throws DomainError when malformed.
std::vector<double> parse_range(const std::string& text);

// Entry point of the catgeo tool. Returns the process exit status:
// 0 when every requested check passes, 1 when a check fails, 2 on errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catgeo
