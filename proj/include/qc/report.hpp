// Outcome of one named verification.
#pragma once

#include <string>
#include <vector>

namespace qc {

struct CheckResult {
    std::string id;
    std::string location;
    int degree = 0;
    int checked = 0;
    int failed = 0;
    bool skipped = false;
    std::string witness;               // first failure
    std::vector<std::string> details;  // e.g. correction reports

    bool ok() const { return !skipped && failed == 0; }
    void pass() { ++checked; }
    void fail(const std::string& w) {
        ++checked;
        if (failed++ == 0) witness = w;
    }
    void record(bool good, const std::string& w) { good ? pass() : fail(w); }
};

}  // namespace qc
