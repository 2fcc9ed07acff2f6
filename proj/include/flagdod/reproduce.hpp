#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagdod/io.hpp"

namespace flagdod {

struct PaperCase {
    std::string name;  // "case1".."case6"
    CaseSpec spec;
};

/// The six (partition, flag variety) pairs of the main theorem, in order.
std::vector<PaperCase> paper_cases();

Json theorem_a_summary(const std::vector<PaperCase>& cases, const std::vector<CaseResult>& results);

/// Every golden artifact, keyed by file name relative to the golden dir.
std::map<std::string, std::string> paper_artifacts();

/// Location of the first difference, or nullopt when equal. JSON files are
/// compared structurally (reported as a JSON pointer), others line by line.
std::optional<std::string> first_divergence(const std::string& file, const std::string& expected,
                                            const std::string& actual);

}  // namespace flagdod
