#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsym::cli {

// Exit codes: 0 success, 1 validation or parse error, 2 resource budget exceeded,
// 3 a computed result contradicts a structural theorem.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsym::cli
