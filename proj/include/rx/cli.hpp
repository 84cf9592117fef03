#ifndef RX_CLI_HPP
#define RX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rx {

/// Runs the command line: `validate <file>`, `degenerations <file>`,
/// `compute-r <file> [--json] [--svg <out>]`. Exit codes: 0 success,
/// 1 I/O or schema errors, 2 validation/geometry errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rx

#endif
