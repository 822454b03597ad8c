#include "actorkit/report.hpp"

namespace actorkit {

void Report::fail(std::string label, std::vector<std::size_t> indices, std::string left,
                  std::string right)
{
    if (!passed) return;
    passed = false;
    failed = std::move(label);
    witness = std::move(indices);
    lhs = std::move(left);
    rhs = std::move(right);
}

void Report::note(std::string label, std::string status, std::string text)
{
    details.push_back({std::move(label), std::move(status), std::move(text)});
}

void Report::absorb(const Report& sub)
{
    note(sub.check, sub.passed ? "pass" : "fail", sub.passed ? std::string{} : sub.failed);
    if (!sub.passed) fail(sub.failed, sub.witness, sub.lhs, sub.rhs);
}

std::string render_text(const Report& r)
{
    std::string out = (r.passed ? "PASS " : "FAIL ") + r.check + "\n";
    if (!r.passed) {
        out += "  failed:  " + r.failed + "\n";
        out += "  witness: (";
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            out += (i ? ", " : "") + std::to_string(r.witness[i]);
        out += ")\n  lhs:     " + r.lhs + "\n  rhs:     " + r.rhs + "\n";
    }
    for (const auto& d : r.details) {
        out += "  - " + d.label + ": " + d.status;
        if (!d.note.empty()) out += " (" + d.note + ")";
        out += "\n";
    }
    return out;
}

}  // namespace actorkit
