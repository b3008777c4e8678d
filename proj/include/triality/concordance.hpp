#pragma once

// Where each check's statement comes from, and the conventions it relies on.

#include <string>
#include <vector>

namespace triality {

struct ConcordanceEntry {
    std::string check_name;
    int rank = 0;               // position in the order of exposition
    std::string location;       // topic
    std::string quote_anchor;   // the statement being checked
};

const std::vector<ConcordanceEntry>& concordance_entries();
/// Location of a registered check; throws std::out_of_range if it has no entry.
const ConcordanceEntry& concordance_for(const std::string& check_name);

/// Check names present in exactly one of the registry and the concordance.
struct ConcordanceDiff {
    std::vector<std::string> missing_entry;   // registered, no entry
    std::vector<std::string> orphan_entry;    // entry, not registered
    bool empty() const { return missing_entry.empty() && orphan_entry.empty(); }
};
ConcordanceDiff concordance_diff();

/// Markdown document: entries sorted by rank, then the conventions ledger.
std::string emit_concordance();

}  // namespace triality
