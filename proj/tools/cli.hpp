#pragma once

#include "fsl/flow.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fsl::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,  // also any other library error
    kParseError = 2,
    kNotInNormalForm = 3,
    kNotHyperbolic = 4,
    kBadSections = 5,  // invalid transition sections or portrait window
    kNoOrbit = 6,      // no transit or no return
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Integrator tolerances from the FSL_TOL syntax: either a bare number (the
/// relative tolerance, with the absolute one 100 times smaller) or a comma
/// list of rel=, abs=, max_steps= entries. Throws std::invalid_argument.
IntegratorConfig parse_tolerances(const std::string& text, IntegratorConfig base = {});

}  // namespace fsl::cli
