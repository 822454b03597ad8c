#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace actorkit {

// One line of a multi-condition report.
struct ReportEntry {
    std::string label;
    std::string status;  // "pass", "fail", "auto-pass", "structural", "info"
    std::string note;
};

// Universal checker output. A failed report carries the first failing
// condition, the basis indices that witness it and both evaluated sides,
// enough to redo the computation by hand.
struct Report {
    std::string check;
    bool passed = true;
    std::string failed;
    std::vector<std::size_t> witness;
    std::string lhs;
    std::string rhs;
    std::vector<ReportEntry> details;

    static Report start(std::string check)
    {
        Report r;
        r.check = std::move(check);
        return r;
    }

    // Records the failure unless an earlier one is already recorded.
    void fail(std::string label, std::vector<std::size_t> indices, std::string left,
              std::string right);
    void note(std::string label, std::string status, std::string text = {});
    // Folds a sub-report into a detail line; the first failing sub-report
    // becomes this report's failure.
    void absorb(const Report& sub);
};

std::string render_text(const Report& r);

}  // namespace actorkit
