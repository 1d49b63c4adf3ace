#pragma once

#include <string>
#include <vector>

namespace scfq {

// One checked case inside a suite run.  "expected"/"got" are preformatted so
// text, JSON and CSV renderings are byte-stable for a fixed (argv, seed).
struct CaseResult {
    std::string input;
    std::string expected;
    std::string got;
    double residual = 0;
    bool pass = true;
};

struct Report {
    std::string suite;
    std::string paper_ref;  // the mathematical statement this suite exercises
    std::vector<CaseResult> cases;
    double elapsed_seconds = 0;  // text output only; JSON/CSV stay deterministic

    bool all_pass() const;
    int failed() const;
    double max_residual() const;

    std::string to_text() const;
    std::string to_json() const;
    std::string to_csv() const;

    std::string render(const std::string& format) const;  // text | json | csv
};

std::string fmt_double(double x);

}  // namespace scfq
