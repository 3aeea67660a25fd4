#pragma once

// The command surface of the cotv executable, usable in-process.

#include <functional>
#include <string>
#include <vector>

namespace cotv::cli {

enum ExitCode { kSuccess = 0, kValidationFailure = 1, kMalformedInput = 2, kUnsupported = 3 };

struct RunResult {
  int code = kSuccess;
  std::string out;  // the output document (empty when written to a file)
  std::string err;  // diagnostics
};

// Runs one command; `args` excludes the program name. `read_stdin` is only
// called when the command needs a document and no --input file was given.
RunResult run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin);

}  // namespace cotv::cli
