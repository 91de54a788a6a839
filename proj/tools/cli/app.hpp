#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtile::cli {

enum ExitCode : int {
  kTilesOrPass = 0,
  kDoesNotTile = 1,
  kInvalidInput = 2,
  kVerificationFailure = 3,
};

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
///
///   decide FILE              Verdict JSON; 0 tiles, 1 does not tile
///   verify FILE              MultiplicityReport JSON; 0 pass, 3 fail
///   select FILE              chosen J and certificate; 0 found, 1 none
///   subgroup FILE            discreteness of span_Z(vectors); 0 discrete, 1 dense
///   render FILE              SVG
///
/// Invalid input of any kind exits 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtile::cli
