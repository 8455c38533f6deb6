#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace caslab {

// Raised when a configured cap or enumeration guard is exceeded; callers
// report these as skipped work, never as theorem failures.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Outcome of one theorem verifier. `failures` holds one line per violated
// identity (empty iff ok); `open_cases` holds witnesses that are recorded
// without judgement.
struct VerifyReport {
    std::string check;
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> open_cases;

    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
    void open_case(const std::string& msg) { open_cases.push_back(msg); }
    void merge(const VerifyReport& o) {
        ok = ok && o.ok;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        open_cases.insert(open_cases.end(), o.open_cases.begin(), o.open_cases.end());
    }
};

} // namespace caslab
