#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arrowhead {

/// The (d+1)x(d+1) table driving address reproduction, stored in canonical
/// symbols (a_j = j). Row constraints: every row is a permutation of 0..d,
/// row 0 begins with 0, row i (i >= 1) begins with i-1, row i (i <= d-1)
/// ends with i+1, and row d ends with d.
struct ReproductionRule {
    int dimension = 0;
    std::vector<std::uint8_t> entries; // row-major, (d+1)*(d+1)

    int side() const { return dimension + 1; }
    std::uint8_t at(int row, int col) const {
        return entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(side()) +
                       static_cast<std::size_t>(col)];
    }
    std::span<const std::uint8_t> row(int i) const {
        return std::span<const std::uint8_t>(entries).subspan(
            static_cast<std::size_t>(i) * static_cast<std::size_t>(side()),
            static_cast<std::size_t>(side()));
    }

    friend bool operator==(const ReproductionRule&, const ReproductionRule&) = default;
};

struct RuleValidation {
    bool valid = false;
    ReproductionRule rule;  // populated when valid
    std::string message;    // first violated constraint
    int row = -1;           // offending row, -1 for shape errors

    explicit operator bool() const { return valid; }
};

/// Accepts iff the row constraints hold; the report names the first
/// violated constraint and its row.
RuleValidation validate_rule(const std::vector<std::vector<int>>& candidate, int dimension);

/// Deterministic default: row i = fixed first entry, remaining indices
/// ascending, fixed last entry. For d=2 this is the unique rule.
ReproductionRule canonical_rule(int dimension);

/// Lazy stream over all valid rules in lexicographic order of the
/// concatenated rows. The stream may be partitioned by index range
/// (see rule_at_index) with identical results.
class RuleEnumerator {
public:
    explicit RuleEnumerator(int dimension);

    /// Next rule, or nullopt once exhausted.
    std::optional<ReproductionRule> next();

private:
    int dimension_;
    bool done_ = false;
    std::vector<std::vector<std::uint8_t>> middles_; // per-row middle entries
};

/// Materializes the full stream. Throws std::length_error when the rule
/// space exceeds max_rules (use RuleEnumerator or rule_at_index instead).
std::vector<ReproductionRule> enumerate_rules(int dimension,
                                              std::uint64_t max_rules = 1'000'000);

/// The index-th rule of the enumeration order, built directly by unranking
/// the per-row middle permutations.
ReproductionRule rule_at_index(int dimension, unsigned __int128 index);

/// Enumerated count is ((d-1)!)^(d+1), the size of the constraint-defined
/// rule space. The closed form (d-1)^(d+1) is reported alongside; the two
/// agree for d <= 3 and disagree from d = 4 on.
struct RuleCount {
    unsigned __int128 enumerated = 0;
    unsigned __int128 closed_form = 0;
};
RuleCount count_rules(int dimension);
std::string format_count(unsigned __int128 value);

/// Rule file format (UTF-8 text): line 1 "d=<integer>"; then d+1 lines of
/// d+1 space-separated integers; lines starting with '#' are ignored.
ReproductionRule parse_rule(std::string_view text);
std::string serialize_rule(const ReproductionRule& rule);

/// Single-line form for CSV and listings: rows joined with ';',
/// entries joined with spaces.
std::string compact_rule(const ReproductionRule& rule);

/// Named presets: "canonical" (any dimension), "r1" and "r2" (dimension 3),
/// "r3" (dimension 7). Returns nullopt for unknown names; throws when the
/// name is known but pinned to a different dimension.
std::optional<ReproductionRule> find_preset(std::string_view name, int dimension);
std::vector<std::string> preset_names();

} // namespace arrowhead
