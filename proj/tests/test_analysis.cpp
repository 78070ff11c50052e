#include "doctest.h"

#include <algorithm>

#include "arrowhead/analysis.hpp"
#include "oracles.hpp"

using namespace arrowhead;

TEST_CASE("binary sequence bits follow the activity pairs") {
    const ReproductionRule rule = canonical_rule(2);
    const BinarySequence level1 = binary_sequence(expand_addresses(rule, 1));
    CHECK(level1.bits == std::vector<std::uint8_t>{1, 1, 0, 1, 0, 1, 0, 1, 1});
    CHECK(sequence_text(level1) == "110\n101\n011\n");

    const BinarySequence level2 = binary_sequence(expand_addresses(rule, 2));
    // Group of simplex "20".
    const auto group = level2.group(7);
    CHECK(std::vector<std::uint8_t>(group.begin(), group.end()) ==
          std::vector<std::uint8_t>{0, 1, 1});

    const std::vector<ActivityPair> bad(5, ActivityPair{0, 1});
    CHECK_THROWS_AS(binary_sequence(bad, 2, 1), std::invalid_argument);
}

TEST_CASE("every group has exactly two active bits") {
    for (const ReproductionRule& rule : enumerate_rules(3)) {
        for (int n = 1; n <= 2; ++n) {
            const BinarySequence seq = binary_sequence(expand_addresses(rule, n));
            CHECK(seq.bits.size() == cell_count(3, n + 1));
            for (std::size_t k = 0; k < seq.group_count(); ++k) {
                const auto group = seq.group(k);
                CHECK(std::count(group.begin(), group.end(), 1) == 2);
            }
        }
    }
}

TEST_CASE("symmetry is palindromicity of the flat bit string") {
    const ReproductionRule rule2 = canonical_rule(2);
    CHECK(is_symmetric(binary_sequence(expand_addresses(rule2, 1))));

    const ReproductionRule r1 = *find_preset("r1", 3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(is_symmetric(binary_sequence(expand_addresses(r1, n))));
    }

    const ReproductionRule r2 = *find_preset("r2", 3);
    CHECK(!is_symmetric(binary_sequence(expand_addresses(r2, 2))));
}

TEST_CASE("reversing the bit string preserves the symmetry verdict") {
    for (const ReproductionRule& rule : enumerate_rules(3)) {
        BinarySequence seq = binary_sequence(expand_addresses(rule, 2));
        const bool verdict = is_symmetric(seq);
        std::reverse(seq.bits.begin(), seq.bits.end());
        CHECK(is_symmetric(seq) == verdict);
    }
}

TEST_CASE("isomorphisms come from the rule rows") {
    const ReproductionRule r1 = *find_preset("r1", 3);
    const auto isos = extract_isomorphisms(r1);
    REQUIRE(isos.size() == 4);
    CHECK(isos[0].mapping == std::vector<std::uint8_t>{0, 3, 2, 1});

    const auto isos2 = extract_isomorphisms(canonical_rule(2));
    CHECK(isos2[1].mapping == std::vector<std::uint8_t>{0, 1, 2});

    for (const auto& iso : isos) {
        std::vector<std::uint8_t> sorted = iso.mapping;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::uint8_t>{0, 1, 2, 3});
    }
}

TEST_CASE("isomorphism inverse composes to the identity") {
    const ReproductionRule r2 = *find_preset("r2", 3);
    for (const IndexIsomorphism& iso : extract_isomorphisms(r2)) {
        const IndexIsomorphism inv = iso.inverse();
        for (std::uint8_t j = 0; j <= 3; ++j) {
            CHECK(inv(iso(j)) == j);
        }
    }
}

TEST_CASE("level patterns recur in the next level under the row isomorphisms") {
    const auto report2 = verify_self_similarity(canonical_rule(2), 1);
    CHECK(report2.chunk_passed == std::vector<bool>{true, true, true});
    CHECK(report2.all_passed());

    const ReproductionRule r1 = *find_preset("r1", 3);
    for (int n : {1, 2}) {
        CHECK(verify_self_similarity(r1, n).all_passed());
    }

    // Identity row: the chunk repeats the coarser pattern verbatim.
    const AddressSequence level1 = expand_addresses(canonical_rule(2), 1);
    const AddressSequence level2 = expand_addresses(canonical_rule(2), 2);
    const auto activity1 = simplex_activity(level1);
    const auto activity2 = simplex_activity(level2);
    for (std::size_t g = 0; g < activity1.size(); ++g) {
        CHECK(activity2[3 + g] == activity1[g]); // chunk 1, identity isomorphism
    }
}

TEST_CASE("classification census in dimension 3") {
    const auto reports = classify_rules(3, 3);
    REQUIRE(reports.size() == 16);

    int symmetric = 0;
    for (const RuleReport& report : reports) {
        REQUIRE(report.symmetric_at.size() == 3);
        const bool conjunction = report.symmetric_at[0] && report.symmetric_at[1] &&
                                 report.symmetric_at[2];
        CHECK(report.symmetric_overall == conjunction);
        CHECK(report.geometric_valid);
        if (report.symmetric_overall) {
            ++symmetric;
        }
    }
    CHECK(symmetric == 4);

    // Report order follows enumeration order.
    const auto rules = enumerate_rules(3);
    for (std::size_t i = 0; i < rules.size(); ++i) {
        CHECK(reports[i].rule == rules[i]);
    }

    const ReproductionRule r2 = *find_preset("r2", 3);
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [&](const RuleReport& r) { return r.rule == r2; });
    REQUIRE(it != reports.end());
    CHECK(!it->symmetric_at[1]);
}

TEST_CASE("the single dimension-2 rule is symmetric at levels 1 to 3") {
    const auto reports = classify_rules(2, 3);
    REQUIRE(reports.size() == 1);
    CHECK(reports.front().symmetric_at == std::vector<bool>{true, true, true});
    CHECK(reports.front().symmetric_overall);
    CHECK(reports.front().geometric_valid);
}

TEST_CASE("classification is independent of the job count") {
    ClassifyOptions serial;
    ClassifyOptions parallel;
    parallel.jobs = 4;
    const auto a = classify_rules(3, 2, serial);
    const auto b = classify_rules(3, 2, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].rule == b[i].rule);
        CHECK(a[i].symmetric_at == b[i].symmetric_at);
        CHECK(a[i].geometric_valid == b[i].geometric_valid);
    }
}

TEST_CASE("sampled classification picks evenly spaced rules") {
    ClassifyOptions options;
    options.sample = 5;
    const auto reports = classify_rules(4, 2, options);
    REQUIRE(reports.size() == 5);
    const std::uint64_t stride = 7776 / 5;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].rule == rule_at_index(4, stride * i));
        CHECK(reports[i].geometric_valid);
    }
}

TEST_CASE("classification CSV shape") {
    const auto reports = classify_rules(2, 3);
    const std::string csv = classification_csv(reports, 3);
    CHECK(csv.rfind("rule_id,rule,symmetric@1,symmetric@2,symmetric@3,overall,"
                    "geometric_valid\n",
                    0) == 0);
    CHECK(csv.find("0,0 2 1;0 1 2;1 0 2,true,true,true,true,true\n") != std::string::npos);
}
