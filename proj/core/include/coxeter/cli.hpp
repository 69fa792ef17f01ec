// cli.hpp -- command-line front end. Kept inside the library so the report
// formats and exit codes are testable in-process; the binary is a thin shim.
#ifndef COXETER_CLI_HPP
#define COXETER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coxeter::cli {

// Exit codes: 0 success (for `analyze`: the generator is intrinsic),
// 10 `analyze` decided not intrinsic, 1 a verification refuted or a transform
// failed, 2 input error (bad arguments, parse error, wrong generator).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxeter::cli

#endif
