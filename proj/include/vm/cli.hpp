#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vm::cli {

// Exit codes: 0 success, 1 negative decision, 2 usage/parse error,
// 3 capacity error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Built-in property suite behind `vm selftest`.
int run_selftest(std::ostream& err);

} // namespace vm::cli
