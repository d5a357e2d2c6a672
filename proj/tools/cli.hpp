#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ddvv::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 2,  // a computed value broke a proven bound
  kUsage = 64,
  kData = 65,
  kIo = 74,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Entry point shared by ddvv-lab and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// SHA-1 of "blob <size>\0<content>", i.e. what `git hash-object` prints.
std::string git_blob_sha1(std::string_view content);

/// Tables 1-5 as "text" or "csv".
std::string render_tables(std::string_view format);

}  // namespace ddvv::cli
