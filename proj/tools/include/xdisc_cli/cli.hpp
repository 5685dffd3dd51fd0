#pragma once

#include <iosfwd>

namespace xdisc::cli {

/// Exit codes of the xdisc tool.
enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kInvalid = 2,       // invalid spec or unparsable input
  kCheckFailed = 3,   // a verification ran and did not pass
};

/// Entry point of xdisc with the streams made explicit for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xdisc::cli
