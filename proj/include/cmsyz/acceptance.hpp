#pragma once

#include <iosfwd>
#include <string>

namespace cmsyz {

// Result of the bundled golden-example suite: one pass/fail line per
// criterion is written to the stream, followed by a summary line.
struct AcceptanceOutcome {
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

AcceptanceOutcome run_acceptance(const std::string& data_dir, std::ostream& os);

}  // namespace cmsyz
