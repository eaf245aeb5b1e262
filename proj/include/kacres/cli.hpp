#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kacres {

// Parses and executes one command line (args without the program name).
// The report goes to `out` unless --out redirects it to a file; diagnostics
// go to `err`.  Returns the exit code: 0 pass, 2 usage error, 3 failed
// mathematical verification, 4 resource guard refusal.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kacres
