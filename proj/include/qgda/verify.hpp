#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgda/eval.hpp"
#include "qgda/report.hpp"

namespace qgda {

// The individual law suites. Every check name is prefixed with the suite
// name; witnesses carry the failing trial or index. All suites are
// deterministic functions of (session, seed).
CheckList verify_field(const Session& s, std::uint64_t seed);
CheckList verify_base(const Session& s, std::uint64_t seed);
CheckList verify_extension(const Session& s, std::uint64_t seed);
CheckList verify_calculus(const Session& s, std::uint64_t seed);
CheckList verify_oracle(const Session& s, std::uint64_t seed);

const std::vector<std::string>& verify_suite_names();  // without "all"

struct VerifyResult {
    int exit_code;        // 0 all checks pass, 1 some fail, 2 unknown suite
    CheckList checks;
    std::string message;  // set when the suite name is unknown
};

// Runs one suite (or "all"); never throws — unexpected errors inside a
// suite become failing checks.
VerifyResult run_verify(const std::string& suite, const Session& s,
                        std::uint64_t seed);

}  // namespace qgda
