#pragma once

#include <string>
#include <vector>

namespace qgda {

struct Check {
    std::string name;
    bool passed;
    std::string witness;  // failure detail or informational note
};

struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string witness = "") {
        checks.push_back({std::move(name), passed, std::move(witness)});
    }
    void merge(const CheckList& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::string to_text() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.passed ? "pass  " : "FAIL  ";
            out += c.name;
            if (!c.witness.empty()) {
                out += "  [";
                out += c.witness;
                out += "]";
            }
            out += "\n";
        }
        return out;
    }
};

}  // namespace qgda
