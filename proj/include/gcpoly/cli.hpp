#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcpoly::cli {

// Runs one command (check-identity, check-central, classify, aut-group,
// witness, transform, envelope-check, primeness-scan, eval) against the
// given streams. Returns the process exit code:
//   0  definitive verdict
//   1  property violation found
//   2  input error
//   3  Grassmann budget exceeded
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gcpoly::cli
