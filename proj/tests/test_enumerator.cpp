#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracle_helpers.hpp"

#include <horrocks/enumerator.hpp>
#include <horrocks/report.hpp>

using namespace horrocks;

namespace {

std::vector<Spectrum> spectra9() { return enumerate_spectra(9); }

// b-solution sets of a c2 = 9 spectrum, keyed by the rho assignment
// restricted to its nonzero entries
std::map<std::map<int, int>, std::vector<std::vector<int>>>
solutions_by_rho(int spectrum_index)
{
    auto sp = spectra9()[static_cast<std::size_t>(spectrum_index - 1)];
    std::map<std::map<int, int>, std::vector<std::vector<int>>> out;
    for (const auto& fam : shapes_for(sp, 9)) {
        std::map<int, int> key;
        for (const auto& [d, v] : fam.rho)
            if (v != 0)
                key[d] = v;
        out[key] = fam.b_solutions;
    }
    return out;
}

} // namespace

TEST_CASE("generator-count table rows")
{
    auto sp = spectra9();
    const std::vector<std::string> expected = {
        "X^9_2 | k=1 | rho(-2)=1 | rho(-1) in {5, 6}",
        "X^9_3 | k=1 | rho(-2)=2 | rho(-1) in {1, 2, 3, 4}",
        "X^9_4 | k=2 | rho(-3)=1 | rho(-1) in {1, 2, 3, 4} | rho(-2) in {0}",
        "X^9_5 | k=2 | rho(-3)=1 | rho(-1) in {0, 1, 2} | rho(-2) in {0, 1}",
        "X^9_6 | k=3 | rho(-4)=1 | rho(-1) in {0, 1, 2} | rho(-2) in {0} | "
        "rho(-3) in {0}",
        "X^9_7 | k=1 | rho(-2)=4 | rho(-1) in {0}",
        "X^9_8 | k=2 | rho(-3)=1 | rho(-1) in {0} | rho(-2) in {1, 2}",
        "X^9_9 | k=2 | rho(-3)=2 | rho(-1) in {0} | rho(-2) in {0, 1}",
        "X^9_10 | k=3 | rho(-4)=1 | rho(-1) in {0} | rho(-2) in {0, 1} | "
        "rho(-3) in {0}",
    };
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(render_rho_line(9, static_cast<int>(i) + 2, sp[i + 1]) ==
              expected[i]);
}

TEST_CASE("rho caps at non-negative degrees")
{
    auto sp = spectra9();
    // the two wide spectra admit generators in degree 0
    RhoBounds x7 = rho_bounds(sp[6]); // {-1^4,0,1^4}
    CHECK(x7.by_degree.at(0) == std::pair<int, int>(0, 2));
    RhoBounds x8 = rho_bounds(sp[7]); // {-2,-1^3,0,1^3,2}
    CHECK(x8.by_degree.at(0) == std::pair<int, int>(0, 1));
    CHECK(x8.by_degree.at(1) == std::pair<int, int>(0, 0));
    // everything else is capped to zero at degree 0
    for (std::size_t i : {0u, 1u, 2u, 3u, 4u, 5u, 8u, 9u, 10u}) {
        RhoBounds rb = rho_bounds(sp[i]);
        for (const auto& [d, interval] : rb.by_degree)
            if (d >= 0)
                CHECK(interval.second == 0);
    }
}

TEST_CASE("b-solutions for the narrow-spectrum cases")
{
    using V = std::vector<std::vector<int>>;
    auto x2 = solutions_by_rho(2);
    CHECK(x2.at({{-2, 1}, {-1, 5}}) == V{{0, 0, 0, 0, 0, 0, 0}});
    CHECK(x2.at({{-2, 1}, {-1, 6}}) == V{{1, 0, 0, 0, 0, 0, 0, 0}});

    auto x3 = solutions_by_rho(3);
    CHECK(x3.at({{-2, 2}, {-1, 1}}) == V{{0, 0, 0, 0}});
    CHECK(x3.at({{-2, 2}, {-1, 2}}) == V{{1, 0, 0, 0, 0}});
    CHECK(x3.at({{-2, 2}, {-1, 3}}) == V{{1, 1, 0, 0, 0, 0}});
    CHECK(x3.at({{-2, 2}, {-1, 4}}) == V{{1, 1, 1, 0, 0, 0, 0}});

    auto x4 = solutions_by_rho(4);
    CHECK(x4.at({{-3, 1}, {-1, 1}}) == V{{1, 0, 0}});
    CHECK(x4.at({{-3, 1}, {-1, 2}}) == V{{1, 1, 0, 0}});
    CHECK(x4.at({{-3, 1}, {-1, 3}}) == V{{1, 1, 1, 0, 0}});
    CHECK(x4.at({{-3, 1}, {-1, 4}}) ==
          V{{2, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0}});
}

TEST_CASE("b-solutions for the wide-spectrum cases")
{
    using V = std::vector<std::vector<int>>;
    auto x5 = solutions_by_rho(5);
    CHECK(x5.at({{-3, 1}}) == V{{0, 0}});
    CHECK(x5.at({{-3, 1}, {-2, 1}}) == V{{2, 0, 0}});
    CHECK(x5.at({{-3, 1}, {-1, 1}}) == V{{1, 0, 0}});
    CHECK(x5.at({{-3, 1}, {-2, 1}, {-1, 1}}) == V{{2, 1, 0, 0}});
    CHECK(x5.at({{-3, 1}, {-1, 2}}) == V{{1, 1, 0, 0}});
    CHECK(x5.at({{-3, 1}, {-2, 1}, {-1, 2}}) == V{{2, 1, 1, 0, 0}});

    auto x6 = solutions_by_rho(6);
    CHECK(x6.at({{-4, 1}}).empty()); // sum of two squares = 7: no solution
    CHECK(x6.at({{-4, 1}, {-1, 1}}) == V{{2, 2, 0}});
    CHECK(x6.at({{-4, 1}, {-1, 2}}) == V{{3, 0, 0, 0}, {2, 2, 1, 0}});

    auto x7 = solutions_by_rho(7);
    CHECK(x7.at({{-2, 4}}) == V{{2, 1, 1, 1, 0}});
    CHECK(x7.at({{-2, 4}, {0, 1}}) == V{{2, 1, 1, 1, 0, 0}});
    CHECK(x7.at({{-2, 4}, {0, 2}}) ==
          V{{2, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1}});

    auto x8 = solutions_by_rho(8);
    CHECK(x8.at({{-3, 1}, {-2, 1}}) == V{{2, 0, 0}});
    CHECK(x8.at({{-3, 1}, {-2, 2}}) == V{{2, 2, 0, 0}});
    CHECK(x8.at({{-3, 1}, {-2, 1}, {0, 1}}) ==
          V{{2, 0, 0, 0}, {1, 1, 1, 1}});
    CHECK(x8.at({{-3, 1}, {-2, 2}, {0, 1}}) ==
          V{{2, 2, 0, 0, 0}, {2, 1, 1, 1, 1}});

    auto x9 = solutions_by_rho(9);
    CHECK(x9.at({{-3, 2}}) == V{{3, 0, 0}, {2, 2, 1}});
    CHECK(x9.at({{-3, 2}, {-2, 1}}) == V{{3, 2, 0, 0}, {2, 2, 2, 1}});

    auto x10 = solutions_by_rho(10);
    CHECK(x10.at({{-4, 1}}).empty());
    CHECK(x10.at({{-4, 1}, {-2, 1}}) == V{{3, 1, 1}});

    auto x11 = solutions_by_rho(11);
    CHECK(x11.at({{-5, 1}}) == V{{4, 0}});
}

TEST_CASE("square-sum solver matches the brute-force oracle")
{
    for (int target = 0; target <= 20; ++target)
        for (int n = 1; n <= 8; ++n) {
            auto fast = square_sum_tuples(target, static_cast<std::size_t>(n));
            auto slow = oracle::brute_force_square_tuples(target, n);
            CHECK(fast == slow);
        }
}

TEST_CASE("emitted shapes satisfy the degree-data identities")
{
    for (int c2 : {7, 9}) {
        for (const auto& sp : enumerate_spectra(c2)) {
            for (const auto& fam : shapes_for(sp, c2)) {
                int s = 0;
                for (const auto& [d, v] : fam.rho)
                    s += v;
                CHECK(static_cast<int>(fam.a.size()) == s);
                for (const auto& b : fam.b_solutions) {
                    CHECK(b.size() == fam.a.size() + 1);
                    CHECK(chern_c2(fam.a, b) == c2);
                }
            }
        }
    }
}

TEST_CASE("elimination rule R1 predicate")
{
    // three middle values strictly between the outer degrees, summing past
    // the top one
    CHECK(rule_r1_applies(MonadShape{{5, 1}, {2, 2, 2}}));
    CHECK(rule_r1_applies(MonadShape{{4, 2, 2}, {3, 3, 3, 0}}));
    // only two values in range
    CHECK_FALSE(rule_r1_applies(MonadShape{{4, 1}, {2, 2, 0}}));
    // values not strictly between
    CHECK_FALSE(rule_r1_applies(MonadShape{{3, 1, 1, 1, 1},
                                           {1, 1, 1, 1, 0, 0}}));
    CHECK_FALSE(rule_r1_applies(MonadShape{{3, 2, 2}, {2, 2, 0, 0}}));
    // top degree repeated
    CHECK_FALSE(rule_r1_applies(MonadShape{{3, 3}, {2, 2, 1}}));
    // sum short of the top degree
    CHECK_FALSE(rule_r1_applies(MonadShape{{7, 1}, {2, 2, 2, 0}}));
}

TEST_CASE("classification statuses for the published cases")
{
    auto sp = spectra9();
    auto classify = [&](int idx, std::vector<int> a, std::vector<int> b) {
        MonadCandidate c;
        c.spectrum_index = idx;
        c.spectrum = sp[static_cast<std::size_t>(idx - 1)];
        c.shape = MonadShape{std::move(a), std::move(b)};
        return classify_candidate(std::move(c));
    };
    auto red = classify(7, {2, 2, 2, 2}, {2, 1, 1, 1, 0});
    CHECK(red.status == CandidateStatus::Eliminated);
    CHECK(red.tag == "R3");

    auto open1 = classify(8, {3, 2, 0}, {1, 1, 1, 1});
    CHECK(open1.status == CandidateStatus::Open);

    auto exists = classify(9, {3, 3}, {2, 2, 1});
    CHECK(exists.status == CandidateStatus::Exists);
    CHECK(exists.tag == "(a): C_{3,2}");

    auto blue = classify(6, {4, 1}, {2, 2, 0});
    CHECK(blue.status == CandidateStatus::Eliminated);
    CHECK(blue.tag == "R2");

    auto excluded = classify(8, {3, 2, 0}, {2, 0, 0, 0});
    CHECK(excluded.status == CandidateStatus::Eliminated);
    CHECK(excluded.tag == "R4");

    auto stray = classify(9, {3, 3}, {2, 2, 0});          // c2 mismatch shape
    CHECK(stray.status == CandidateStatus::Unclassified); // alarm, not drop
}

TEST_CASE("full classification report for c2 = 9")
{
    ClassificationReport report = classification_report(9);
    CHECK(report.count(CandidateStatus::Exists) == 23);
    CHECK(report.count(CandidateStatus::Open) == 2);
    CHECK(report.count(CandidateStatus::Eliminated) == 12);
    CHECK(report.count(CandidateStatus::Unclassified) == 0);
    CHECK(report.negative_count() == 0);

    std::map<std::string, int> rule_counts;
    for (const auto& c : report.candidates)
        if (c.status == CandidateStatus::Eliminated)
            ++rule_counts[c.tag];
    CHECK(rule_counts["R2"] == 5);
    CHECK(rule_counts["R3"] == 5);
    CHECK(rule_counts["R4"] == 2);
    CHECK(rule_counts.count("R1") == 0);

    // the two unsolvable targets are recorded, not dropped
    REQUIRE(report.no_solutions.size() == 2);
    CHECK(report.no_solutions[0].spectrum_index == 6);
    CHECK(report.no_solutions[0].target == 7);
    CHECK(report.no_solutions[1].spectrum_index == 10);

    // open rows are exactly the two undecided shapes
    std::vector<std::pair<std::vector<int>, std::vector<int>>> open;
    for (const auto& c : report.candidates)
        if (c.status == CandidateStatus::Open)
            open.push_back({c.shape.a, c.shape.b});
    REQUIRE(open.size() == 2);
    CHECK(open[0].first == std::vector<int>({3, 2, 0}));
    CHECK(open[0].second == std::vector<int>({1, 1, 1, 1}));
    CHECK(open[1].first == std::vector<int>({3, 2, 2, 0}));
    CHECK(open[1].second == std::vector<int>({2, 1, 1, 1, 1}));
}

TEST_CASE("classification pipeline is deterministic")
{
    auto a = render_classification(classification_report(9), true,
                                   OutputFormat::Markdown);
    auto b = render_classification(classification_report(9), true,
                                   OutputFormat::Markdown);
    CHECK(a == b);
}

TEST_CASE("small c2 classifications")
{
    ClassificationReport one = classification_report(1);
    REQUIRE(one.candidates.size() == 1);
    CHECK(one.candidates[0].status == CandidateStatus::Exists);
    CHECK(one.candidates[0].tag == "Instanton");
    CHECK(one.candidates[0].shape.a == std::vector<int>({1}));
    CHECK(one.candidates[0].shape.b == std::vector<int>({0, 0}));

    // c2 = 3: the instanton shape and one generalized null-correlation shape
    ClassificationReport three = classification_report(3);
    CHECK(three.count(CandidateStatus::Unclassified) == 0);
    CHECK(three.count(CandidateStatus::Exists) == 2);
}

TEST_CASE("positivity classification")
{
    CHECK(MonadShape{{3, 1}, {1, 0, 0}}.positivity() == Positivity::Positive);
    CHECK(MonadShape{{2, 2, 2, 2, 0, 0}, {1, 1, 1, 1, 1, 1, 1}}.positivity() ==
          Positivity::NonNegative);
    CHECK(MonadShape{{3, -1}, {1, 0, 0}}.positivity() == Positivity::Negative);
}
