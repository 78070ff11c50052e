#include "arrowhead/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace arrowhead {

BinarySequence binary_sequence(std::span<const ActivityPair> activity, int dimension,
                               int level) {
    const std::uint64_t groups = cell_count(dimension, level);
    if (activity.size() != groups) {
        throw std::invalid_argument("binary_sequence: expected " + std::to_string(groups) +
                                    " activity pairs, got " + std::to_string(activity.size()));
    }
    BinarySequence seq;
    seq.dimension = dimension;
    seq.level = level;
    const std::size_t side = seq.group_size();
    seq.bits.assign(activity.size() * side, 0);
    for (std::size_t k = 0; k < activity.size(); ++k) {
        seq.bits[k * side + activity[k].enter] = 1;
        seq.bits[k * side + activity[k].exit] = 1;
    }
    return seq;
}

BinarySequence binary_sequence(const AddressSequence& seq) {
    const auto activity = simplex_activity(seq);
    return binary_sequence(activity, seq.dimension(), seq.level());
}

std::string sequence_text(const BinarySequence& seq) {
    std::string out;
    const std::size_t side = seq.group_size();
    out.reserve(seq.bits.size() + seq.group_count());
    for (std::size_t k = 0; k < seq.group_count(); ++k) {
        for (std::size_t j = 0; j < side; ++j) {
            out.push_back(seq.bits[k * side + j] ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

bool is_symmetric(const BinarySequence& seq) {
    const auto& bits = seq.bits;
    for (std::size_t i = 0, j = bits.size(); i < j; ++i, --j) {
        if (bits[i] != bits[j - 1]) {
            return false;
        }
    }
    return true;
}

IndexIsomorphism IndexIsomorphism::inverse() const {
    IndexIsomorphism inv;
    inv.mapping.resize(mapping.size());
    for (std::size_t j = 0; j < mapping.size(); ++j) {
        inv.mapping[mapping[j]] = static_cast<std::uint8_t>(j);
    }
    return inv;
}

std::vector<IndexIsomorphism> extract_isomorphisms(const ReproductionRule& rule) {
    std::vector<IndexIsomorphism> isos;
    isos.reserve(static_cast<std::size_t>(rule.side()));
    for (int i = 0; i < rule.side(); ++i) {
        const auto row = rule.row(i);
        isos.push_back(IndexIsomorphism{std::vector<std::uint8_t>(row.begin(), row.end())});
    }
    return isos;
}

bool SelfSimilarityReport::all_passed() const {
    return !chunk_passed.empty() &&
           std::all_of(chunk_passed.begin(), chunk_passed.end(), [](bool b) { return b; });
}

namespace {

bool same_pair(std::uint8_t a1, std::uint8_t a2, std::uint8_t b1, std::uint8_t b2) {
    return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

} // namespace

SelfSimilarityReport verify_self_similarity(const ReproductionRule& rule, int base_level,
                                            std::uint64_t max_cells) {
    const auto base_activity = simplex_activity(expand_addresses(rule, base_level, max_cells));
    const auto next_activity =
        simplex_activity(expand_addresses(rule, base_level + 1, max_cells));
    const auto isos = extract_isomorphisms(rule);

    SelfSimilarityReport report;
    report.base_level = base_level;
    const std::size_t chunk = base_activity.size();
    for (std::size_t i = 0; i < isos.size(); ++i) {
        const IndexIsomorphism& iso = isos[i];
        bool passed = true;
        for (std::size_t g = 0; g < chunk && passed; ++g) {
            const ActivityPair& base = base_activity[g];
            const ActivityPair& mapped = next_activity[i * chunk + g];
            passed = same_pair(iso(base.enter), iso(base.exit), mapped.enter, mapped.exit);
        }
        report.chunk_passed.push_back(passed);
    }
    return report;
}

std::vector<RuleReport> classify_rules(int dimension, int max_level,
                                       const ClassifyOptions& options) {
    if (max_level < 1) {
        throw std::invalid_argument("classify_rules: max_level must be >= 1");
    }
    const RuleCount count = count_rules(dimension);

    std::vector<ReproductionRule> rules;
    if (options.sample == 0) {
        rules = enumerate_rules(dimension); // throws when beyond desk scale
    } else {
        const std::uint64_t sample =
            count.enumerated < options.sample
                ? static_cast<std::uint64_t>(count.enumerated)
                : options.sample;
        rules.reserve(sample);
        for (std::uint64_t i = 0; i < sample; ++i) {
            // Evenly spaced enumeration indices, deterministic.
            const unsigned __int128 index = count.enumerated / sample * i;
            rules.push_back(rule_at_index(dimension, index));
        }
    }

    const SimplexGeometry geom(dimension);
    std::vector<RuleReport> reports(rules.size());

    auto analyze = [&](std::size_t r) {
        RuleReport report;
        report.rule = rules[r];
        report.isomorphisms = extract_isomorphisms(rules[r]);
        report.geometric_valid = true;
        for (int level = 1; level <= max_level; ++level) {
            const AddressSequence seq = expand_addresses(rules[r], level, options.max_cells);
            report.symmetric_at.push_back(is_symmetric(binary_sequence(seq)));
            if (!verify_curve(geom, seq, options.tol).ok()) {
                report.geometric_valid = false;
            }
        }
        report.symmetric_overall = std::all_of(report.symmetric_at.begin(),
                                               report.symmetric_at.end(),
                                               [](bool b) { return b; });
        reports[r] = std::move(report);
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || rules.size() < 2) {
        for (std::size_t r = 0; r < rules.size(); ++r) {
            analyze(r);
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> workers;
        const int worker_count = static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(jobs), rules.size()));
        workers.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (std::size_t r = cursor.fetch_add(1); r < rules.size();
                     r = cursor.fetch_add(1)) {
                    analyze(r);
                }
            });
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }
    return reports;
}

std::string classification_csv(std::span<const RuleReport> reports, int max_level) {
    std::string out = "rule_id,rule";
    for (int level = 1; level <= max_level; ++level) {
        out += ",symmetric@" + std::to_string(level);
    }
    out += ",overall,geometric_valid\n";
    for (std::size_t r = 0; r < reports.size(); ++r) {
        const RuleReport& report = reports[r];
        out += std::to_string(r) + "," + compact_rule(report.rule);
        for (bool sym : report.symmetric_at) {
            out += sym ? ",true" : ",false";
        }
        out += report.symmetric_overall ? ",true" : ",false";
        out += report.geometric_valid ? ",true\n" : ",false\n";
    }
    return out;
}

} // namespace arrowhead
