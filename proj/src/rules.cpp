#include "arrowhead/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arrowhead {

namespace {

void require_dimension(int dimension) {
    if (dimension < 2) {
        throw std::invalid_argument("rules: dimension must be >= 2, got " +
                                    std::to_string(dimension));
    }
}

// Fixed first and last entries per row, in canonical symbols.
std::uint8_t fixed_first(int row) {
    return static_cast<std::uint8_t>(row == 0 ? 0 : row - 1);
}
std::uint8_t fixed_last(int row, int dimension) {
    return static_cast<std::uint8_t>(row == dimension ? dimension : row + 1);
}

// The middle entries of row `row` in ascending order.
std::vector<std::uint8_t> sorted_middle(int row, int dimension) {
    const std::uint8_t first = fixed_first(row);
    const std::uint8_t last = fixed_last(row, dimension);
    std::vector<std::uint8_t> middle;
    middle.reserve(static_cast<std::size_t>(dimension) - 1);
    for (int v = 0; v <= dimension; ++v) {
        if (v != first && v != last) {
            middle.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return middle;
}

ReproductionRule assemble(int dimension, const std::vector<std::vector<std::uint8_t>>& middles) {
    ReproductionRule rule;
    rule.dimension = dimension;
    const int side = dimension + 1;
    rule.entries.reserve(static_cast<std::size_t>(side) * side);
    for (int i = 0; i < side; ++i) {
        rule.entries.push_back(fixed_first(i));
        rule.entries.insert(rule.entries.end(), middles[static_cast<std::size_t>(i)].begin(),
                            middles[static_cast<std::size_t>(i)].end());
        rule.entries.push_back(fixed_last(i, dimension));
    }
    return rule;
}

unsigned __int128 checked_mul(unsigned __int128 a, unsigned __int128 b) {
    if (a != 0 && b > static_cast<unsigned __int128>(-1) / a) {
        throw std::overflow_error("rule count exceeds 128-bit range");
    }
    return a * b;
}

unsigned __int128 factorial128(int n) {
    unsigned __int128 f = 1;
    for (int i = 2; i <= n; ++i) {
        f = checked_mul(f, static_cast<unsigned __int128>(i));
    }
    return f;
}

unsigned __int128 pow128(unsigned __int128 base, int exp) {
    unsigned __int128 p = 1;
    for (int i = 0; i < exp; ++i) {
        p = checked_mul(p, base);
    }
    return p;
}

const ReproductionRule& preset_r1() {
    static const ReproductionRule rule{3, {0, 3, 2, 1, 0, 1, 3, 2, 1, 0, 2, 3, 2, 1, 0, 3}};
    return rule;
}

const ReproductionRule& preset_r2() {
    static const ReproductionRule rule{3, {0, 2, 3, 1, 0, 1, 3, 2, 1, 0, 2, 3, 2, 1, 0, 3}};
    return rule;
}

const ReproductionRule& preset_r3() {
    static const ReproductionRule rule{
        7, {0, 2, 3, 4, 5, 6, 7, 1,
            0, 1, 3, 4, 5, 6, 7, 2,
            1, 0, 2, 4, 5, 6, 7, 3,
            2, 0, 1, 3, 5, 6, 7, 4,
            3, 0, 1, 2, 4, 6, 7, 5,
            4, 0, 1, 2, 3, 5, 7, 6,
            5, 0, 1, 2, 3, 4, 6, 7,
            6, 0, 1, 2, 3, 4, 5, 7}};
    return rule;
}

} // namespace

RuleValidation validate_rule(const std::vector<std::vector<int>>& candidate, int dimension) {
    require_dimension(dimension);
    RuleValidation result;
    const std::size_t side = static_cast<std::size_t>(dimension) + 1;

    if (candidate.size() != side) {
        result.message = "wrong shape: expected " + std::to_string(side) + " rows, got " +
                         std::to_string(candidate.size());
        return result;
    }
    for (std::size_t i = 0; i < side; ++i) {
        const auto& row = candidate[i];
        const int irow = static_cast<int>(i);
        if (row.size() != side) {
            result.message = "wrong shape: row " + std::to_string(i) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(side);
            result.row = irow;
            return result;
        }
        std::vector<bool> seen(side, false);
        for (int value : row) {
            if (value < 0 || value > dimension) {
                result.message = "row " + std::to_string(i) + ": index " +
                                 std::to_string(value) + " out of range 0.." +
                                 std::to_string(dimension);
                result.row = irow;
                return result;
            }
            if (seen[static_cast<std::size_t>(value)]) {
                result.message = "row " + std::to_string(i) + ": repeated index " +
                                 std::to_string(value);
                result.row = irow;
                return result;
            }
            seen[static_cast<std::size_t>(value)] = true;
        }
        if (row.front() != fixed_first(irow)) {
            result.message = "row " + std::to_string(i) + ": must begin with " +
                             std::to_string(fixed_first(irow)) + ", got " +
                             std::to_string(row.front());
            result.row = irow;
            return result;
        }
        if (row.back() != fixed_last(irow, dimension)) {
            result.message = "row " + std::to_string(i) + ": must end with " +
                             std::to_string(fixed_last(irow, dimension)) + ", got " +
                             std::to_string(row.back());
            result.row = irow;
            return result;
        }
    }

    result.valid = true;
    result.rule.dimension = dimension;
    result.rule.entries.reserve(side * side);
    for (const auto& row : candidate) {
        for (int value : row) {
            result.rule.entries.push_back(static_cast<std::uint8_t>(value));
        }
    }
    return result;
}

ReproductionRule canonical_rule(int dimension) {
    require_dimension(dimension);
    std::vector<std::vector<std::uint8_t>> middles;
    middles.reserve(static_cast<std::size_t>(dimension) + 1);
    for (int i = 0; i <= dimension; ++i) {
        middles.push_back(sorted_middle(i, dimension));
    }
    return assemble(dimension, middles);
}

RuleEnumerator::RuleEnumerator(int dimension) : dimension_(dimension) {
    require_dimension(dimension);
    middles_.reserve(static_cast<std::size_t>(dimension) + 1);
    for (int i = 0; i <= dimension; ++i) {
        middles_.push_back(sorted_middle(i, dimension));
    }
}

std::optional<ReproductionRule> RuleEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    ReproductionRule rule = assemble(dimension_, middles_);
    // Odometer advance, last row fastest: lexicographic on concatenated rows.
    int i = dimension_;
    for (; i >= 0; --i) {
        auto& middle = middles_[static_cast<std::size_t>(i)];
        if (std::next_permutation(middle.begin(), middle.end())) {
            break;
        }
        // next_permutation wrapped back to ascending order; carry on.
    }
    if (i < 0) {
        done_ = true;
    }
    return rule;
}

std::vector<ReproductionRule> enumerate_rules(int dimension, std::uint64_t max_rules) {
    const RuleCount count = count_rules(dimension);
    if (count.enumerated > max_rules) {
        throw std::length_error("enumerate_rules: dimension " + std::to_string(dimension) +
                                " has " + format_count(count.enumerated) +
                                " rules, exceeding the materialization bound of " +
                                std::to_string(max_rules));
    }
    std::vector<ReproductionRule> rules;
    rules.reserve(static_cast<std::size_t>(count.enumerated));
    RuleEnumerator stream(dimension);
    while (auto rule = stream.next()) {
        rules.push_back(std::move(*rule));
    }
    return rules;
}

ReproductionRule rule_at_index(int dimension, unsigned __int128 index) {
    const RuleCount count = count_rules(dimension);
    if (index >= count.enumerated) {
        throw std::out_of_range("rule_at_index: index out of range");
    }
    const unsigned __int128 per_row = factorial128(dimension - 1);
    const int side = dimension + 1;
    std::vector<unsigned __int128> row_rank(static_cast<std::size_t>(side));
    for (int i = side - 1; i >= 0; --i) {
        row_rank[static_cast<std::size_t>(i)] = index % per_row;
        index /= per_row;
    }
    std::vector<std::vector<std::uint8_t>> middles;
    middles.reserve(static_cast<std::size_t>(side));
    for (int i = 0; i < side; ++i) {
        std::vector<std::uint8_t> pool = sorted_middle(i, dimension);
        std::vector<std::uint8_t> middle;
        middle.reserve(pool.size());
        unsigned __int128 rank = row_rank[static_cast<std::size_t>(i)];
        // Factorial-base unranking of the lexicographic permutation order.
        unsigned __int128 radix = per_row;
        for (std::size_t remaining = pool.size(); remaining > 0; --remaining) {
            radix /= remaining;
            const std::size_t pick = static_cast<std::size_t>(rank / radix);
            rank %= radix;
            middle.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        middles.push_back(std::move(middle));
    }
    return assemble(dimension, middles);
}

RuleCount count_rules(int dimension) {
    require_dimension(dimension);
    RuleCount count;
    count.enumerated = pow128(factorial128(dimension - 1), dimension + 1);
    count.closed_form = pow128(static_cast<unsigned __int128>(dimension - 1), dimension + 1);
    return count;
}

std::string format_count(unsigned __int128 value) {
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

ReproductionRule parse_rule(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(stream, line)) {
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        const std::size_t end = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(start, end - start + 1));
    }
    if (lines.empty() || lines.front().rfind("d=", 0) != 0) {
        throw std::invalid_argument("parse_rule: missing 'd=<integer>' header");
    }
    int dimension = 0;
    try {
        std::size_t consumed = 0;
        dimension = std::stoi(lines.front().substr(2), &consumed);
        if (consumed != lines.front().size() - 2) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rule: malformed header '" + lines.front() + "'");
    }
    if (dimension < 2) {
        throw std::invalid_argument("parse_rule: dimension must be >= 2, got " +
                                    std::to_string(dimension));
    }
    const std::size_t expected_rows = static_cast<std::size_t>(dimension) + 1;
    if (lines.size() - 1 != expected_rows) {
        throw std::invalid_argument("parse_rule: expected " + std::to_string(expected_rows) +
                                    " rows for d=" + std::to_string(dimension) + ", got " +
                                    std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<int>> candidate;
    candidate.reserve(expected_rows);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row_stream(lines[i]);
        std::vector<int> row;
        std::string token;
        while (row_stream >> token) {
            try {
                std::size_t consumed = 0;
                row.push_back(std::stoi(token, &consumed));
                if (consumed != token.size()) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_rule: non-integer token '" + token +
                                            "' in row " + std::to_string(i - 1));
            }
        }
        candidate.push_back(std::move(row));
    }
    RuleValidation validation = validate_rule(candidate, dimension);
    if (!validation) {
        throw std::invalid_argument("parse_rule: " + validation.message);
    }
    return std::move(validation.rule);
}

std::string serialize_rule(const ReproductionRule& rule) {
    std::string out = "d=" + std::to_string(rule.dimension) + "\n";
    for (int i = 0; i < rule.side(); ++i) {
        for (int j = 0; j < rule.side(); ++j) {
            if (j > 0) {
                out.push_back(' ');
            }
            out += std::to_string(static_cast<int>(rule.at(i, j)));
        }
        out.push_back('\n');
    }
    return out;
}

std::string compact_rule(const ReproductionRule& rule) {
    std::string out;
    for (int i = 0; i < rule.side(); ++i) {
        if (i > 0) {
            out.push_back(';');
        }
        for (int j = 0; j < rule.side(); ++j) {
            if (j > 0) {
                out.push_back(' ');
            }
            out += std::to_string(static_cast<int>(rule.at(i, j)));
        }
    }
    return out;
}

std::optional<ReproductionRule> find_preset(std::string_view name, int dimension) {
    require_dimension(dimension);
    if (name == "canonical") {
        return canonical_rule(dimension);
    }
    const ReproductionRule* pinned = nullptr;
    if (name == "r1") {
        pinned = &preset_r1();
    } else if (name == "r2") {
        pinned = &preset_r2();
    } else if (name == "r3") {
        pinned = &preset_r3();
    }
    if (pinned == nullptr) {
        return std::nullopt;
    }
    if (pinned->dimension != dimension) {
        throw std::invalid_argument("preset '" + std::string(name) +
                                    "' is defined for dimension " +
                                    std::to_string(pinned->dimension) + ", requested " +
                                    std::to_string(dimension));
    }
    return *pinned;
}

std::vector<std::string> preset_names() {
    return {"canonical", "r1", "r2", "r3"};
}

} // namespace arrowhead
