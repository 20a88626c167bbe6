#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abcover::cli {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kUnmet = 3 };

// `args` excludes the program name. JSON goes to `out`, summaries to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcover::cli
