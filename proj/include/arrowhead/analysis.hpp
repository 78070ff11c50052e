#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrowhead/curve.hpp"
#include "arrowhead/rules.hpp"

namespace arrowhead {

/// Per-simplex groups of d+1 activity bits, in curve order. Exactly two
/// bits per group are active: the simplex's enter and exit vertex indices.
struct BinarySequence {
    int dimension = 0;
    int level = 0;
    std::vector<std::uint8_t> bits; // (d+1)^(n+1) entries, 0 or 1

    std::size_t group_size() const { return static_cast<std::size_t>(dimension) + 1; }
    std::size_t group_count() const { return bits.empty() ? 0 : bits.size() / group_size(); }
    std::span<const std::uint8_t> group(std::size_t k) const {
        return std::span<const std::uint8_t>(bits).subspan(k * group_size(), group_size());
    }
};

BinarySequence binary_sequence(std::span<const ActivityPair> activity, int dimension,
                               int level);
BinarySequence binary_sequence(const AddressSequence& seq);

/// One group per line, bits as '0'/'1' characters.
std::string sequence_text(const BinarySequence& seq);

/// True iff the flat bit string is a palindrome.
bool is_symmetric(const BinarySequence& seq);

/// A permutation of the simplex point indices 0..d.
struct IndexIsomorphism {
    std::vector<std::uint8_t> mapping; // j -> mapping[j]

    std::uint8_t operator()(std::uint8_t j) const { return mapping[j]; }
    IndexIsomorphism inverse() const;

    friend bool operator==(const IndexIsomorphism&, const IndexIsomorphism&) = default;
};

/// One isomorphism per rule row: row i maps index j to the row's j-th entry.
std::vector<IndexIsomorphism> extract_isomorphisms(const ReproductionRule& rule);

/// Checks that the level-n activity pattern, mapped through isomorphism i,
/// equals the i-th consecutive chunk of (d+1)^n groups of level n+1.
struct SelfSimilarityReport {
    int base_level = 0;
    std::vector<bool> chunk_passed; // one per isomorphism / chunk

    bool all_passed() const;
};

SelfSimilarityReport verify_self_similarity(const ReproductionRule& rule, int base_level,
                                            std::uint64_t max_cells = default_cell_cap);

/// Aggregated per-rule analysis record.
struct RuleReport {
    ReproductionRule rule;
    std::vector<bool> symmetric_at; // levels 1..max_level
    bool symmetric_overall = false; // conjunction over tested levels
    std::vector<IndexIsomorphism> isomorphisms;
    bool geometric_valid = false;
    std::string notes;
};

struct ClassifyOptions {
    int jobs = 1;
    /// 0 = exhaustive (dimension <= 4); otherwise this many rules sampled
    /// at evenly spaced enumeration indices.
    std::uint64_t sample = 0;
    std::uint64_t max_cells = default_cell_cap;
    double tol = 1e-9;
};

/// One report per rule, in enumeration order regardless of job count.
std::vector<RuleReport> classify_rules(int dimension, int max_level,
                                       const ClassifyOptions& options = {});

/// CSV: rule_id,rule,symmetric@1..symmetric@L,overall,geometric_valid
std::string classification_csv(std::span<const RuleReport> reports, int max_level);

} // namespace arrowhead
