#include "scfq/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace scfq {

std::string fmt_double(double x) {
    if (x == 0) x = 0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool Report::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

int Report::failed() const {
    return int(std::count_if(cases.begin(), cases.end(),
                             [](const CaseResult& c) { return !c.pass; }));
}

double Report::max_residual() const {
    double m = 0;
    for (const auto& c : cases) m = std::max(m, c.residual);
    return m;
}

std::string Report::to_text() const {
    std::string out;
    out += "suite: " + suite + "\n";
    out += "checks: " + paper_ref + "\n";
    for (const auto& c : cases) {
        out += std::string(c.pass ? "  [ok]   " : "  [FAIL] ") + c.input;
        if (!c.expected.empty()) out += " expected=" + c.expected;
        if (!c.got.empty()) out += " got=" + c.got;
        if (c.residual != 0) out += " residual=" + fmt_double(c.residual);
        out += "\n";
    }
    out += "summary: " + std::to_string(cases.size() - failed()) + "/" +
           std::to_string(cases.size()) + " passed, max residual " + fmt_double(max_residual());
    out += ", " + fmt_double(elapsed_seconds) + " s\n";
    return out;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["paper_ref"] = paper_ref;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json cj;
        cj["input"] = c.input;
        cj["expected"] = c.expected;
        cj["got"] = c.got;
        cj["residual"] = fmt_double(c.residual);
        cj["pass"] = c.pass;
        j["cases"].push_back(cj);
    }
    j["summary"] = {{"total", cases.size()},
                    {"passed", cases.size() - size_t(failed())},
                    {"failed", failed()},
                    {"max_residual", fmt_double(max_residual())},
                    {"pass", all_pass()}};
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::string out = "input,expected,got,residual,pass\n";
    auto esc = [](const std::string& s) {
        std::string r = "\"";
        for (char c : s) {
            if (c == '"')
                r += "\"\"";
            else
                r += c;
        }
        return r + "\"";
    };
    for (const auto& c : cases)
        out += esc(c.input) + "," + esc(c.expected) + "," + esc(c.got) + "," +
               fmt_double(c.residual) + "," + (c.pass ? "1" : "0") + "\n";
    return out;
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "csv") return to_csv();
    return to_text();
}

}  // namespace scfq
