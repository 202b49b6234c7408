#pragma once

#include <string>
#include <vector>

namespace gstwalk {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the ten golden acceptance fixtures (desk scale, a few minutes).
/// Each criterion is independent; a thrown error fails its criterion only.
std::vector<CriterionResult> run_golden();

/// Formula note attached to every report that carries join candidates.
extern const char* kJoinFormulaNote;

} // namespace gstwalk
