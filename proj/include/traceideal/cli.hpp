#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace traceideal {

// Command dispatcher behind the traceideal binary.  Deterministic: identical
// input produces byte-identical output.  Exit codes: 0 pass, 1 fail (a false
// predicate or a failed verification), 2 usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The verify-paper engine, shared with the acceptance suite: runs the full
// grid, printing one line per claim (family, parameter, claimed, computed,
// PASS/FAIL).  Returns the number of failed claims.
struct VerifyLine {
    std::string family;
    std::string param;
    std::string subject;   // module label or "tau_mcm"
    std::string claimed;
    std::string computed;
    bool derived = false;
    bool pass = false;
};
std::vector<VerifyLine> verify_paper(const std::string& catalog_dir);

}  // namespace traceideal
