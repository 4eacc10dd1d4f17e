#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibcones/errors.hpp"
#include "fibcones/prodspace.hpp"

namespace fibcones {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitParse = 2,
    kExitValidation = 3,
    kExitUnsupported = 4,
    kExitIdentityFailure = 5,
};

/// Malformed input document or command line. The message names the offending location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputSpec {
    BundleData e1;
    BundleData e2;
};

/// {"E1": {"rank": r, "degree": d, "hn": [{"rank": n, "degree": e}, ...]}, "E2": {...}}.
/// Checks shape and types only; bundle invariants are left to validate().
InputSpec parse_input(std::string_view text);

int exit_code_for(ErrorKind kind);

/// Runs one command. `args` excludes the program name. Reads the input document from
/// --input FILE, or from `in` when no file is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace fibcones
