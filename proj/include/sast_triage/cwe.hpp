#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sast_triage {

/// A CWE identifier. Canonical rendering is "CWE-<number>" without zero padding.
struct CweId {
    int number = 0;

    auto operator<=>(const CweId&) const = default;

    std::string to_string() const { return "CWE-" + std::to_string(number); }
};

/// Result of scanning a label for CWE tokens. `multiple` is set when the text
/// contains more than one token; only the first is kept.
struct CweScan {
    std::optional<CweId> id;
    bool multiple = false;
};

// Finds the first token of the form CWE<sep><digits> (case-insensitive,
// tolerant of zero padding and punctuation such as "CWE-78:", "cwe_089").
std::optional<CweId> parse_cwe(std::string_view text);
CweScan scan_cwe_tokens(std::string_view text);

// Case-fold, replace punctuation with spaces, collapse whitespace. The key
// form used by AliasTable lookups.
std::string fold_label(std::string_view text);

/// Maps free-text vulnerability names (e.g. "OS Command Injection") to CWE ids.
/// Immutable after construction; lookups are case- and punctuation-insensitive.
class AliasTable {
public:
    AliasTable() = default;

    // One "<name>\t<cwe-number>" entry per line; '#' starts a comment.
    static AliasTable load(const std::filesystem::path& tsv_path);
    static AliasTable from_entries(const std::vector<std::pair<std::string, int>>& entries);

    void add(std::string_view name, CweId id);
    std::optional<CweId> lookup(std::string_view name) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, CweId> entries_; // keyed by folded name
};

// Explicit CWE tokens win; otherwise the folded text is looked up in the table.
std::optional<CweId> resolve_alias(std::string_view text, const AliasTable& table);
CweScan resolve_alias_scan(std::string_view text, const AliasTable& table);

} // namespace sast_triage
