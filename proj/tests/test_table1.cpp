#include <gtest/gtest.h>

#include <algorithm>

#include "paultrap/measures.hpp"
#include "paultrap/table1.hpp"

using namespace paultrap;

TEST(Table1, TwentyFourPublishedRows) {
    const auto rows = published_table1();
    ASSERT_EQ(rows.size(), 24u);
    EXPECT_EQ(std::count_if(rows.begin(), rows.end(),
                            [](const PublishedRow& r) { return r.block == Table1Block::kappa_sweep; }),
              12);
    EXPECT_TRUE(find_published(2, 3.0, 0.5).has_value());
    EXPECT_FALSE(find_published(4, 1.0, 0.2).has_value());
}

TEST(Table1, SignificantFigureAgreement) {
    EXPECT_TRUE(agrees_to_significant_figures(1.788854382, 1.78885));
    EXPECT_TRUE(agrees_to_significant_figures(0.4472135955, 0.447214));
    EXPECT_TRUE(agrees_to_significant_figures(6.708203932, 6.7082));
    EXPECT_FALSE(agrees_to_significant_figures(0.4472135955, 3.91312));
    EXPECT_FALSE(agrees_to_significant_figures(1.78870, 1.78885));
    EXPECT_TRUE(agrees_to_significant_figures(4.0, 4.0));
}

TEST(Table1, ReproductionFindsExactlySixErrata) {
    const Table1Report report = reproduce_table1();
    EXPECT_EQ(report.cells_checked, 144);
    EXPECT_EQ(report.cells_matched, 138);
    ASSERT_EQ(report.errata.size(), 6u);
    for (const auto& e : report.errata) {
        EXPECT_EQ(e.block, Table1Block::kappa_sweep);
        EXPECT_EQ(e.omega, 1.0);
        EXPECT_FALSE(e.justification.empty());
        if (e.column == "p2") {
            EXPECT_EQ(e.n, 0);
            EXPECT_NEAR(e.computed, std::sqrt(1.0 - e.kappa) / 2.0, 1e-15);
        } else {
            EXPECT_EQ(e.column, "I_x");
            EXPECT_EQ(e.n, 3);
            EXPECT_NEAR(e.computed, 14.0 * std::sqrt(1.0 - e.kappa), 1e-14);
        }
    }
}

TEST(Table1, CorrectedCellValues) {
    const auto report = reproduce_table1();
    auto find = [&](int n, double kappa, const std::string& col) {
        for (const auto& e : report.errata)
            if (e.n == n && e.kappa == kappa && e.column == col) return e.computed;
        return -1.0;
    };
    EXPECT_TRUE(agrees_to_significant_figures(find(0, 0.2, "p2"), 0.447214, 6));
    EXPECT_TRUE(agrees_to_significant_figures(find(0, 0.4, "p2"), 0.387298, 6));
    EXPECT_TRUE(agrees_to_significant_figures(find(0, 0.8, "p2"), 0.223607, 6));
    EXPECT_TRUE(agrees_to_significant_figures(find(3, 0.2, "I_x"), 12.52198, 7));
    EXPECT_TRUE(agrees_to_significant_figures(find(3, 0.4, "I_x"), 10.84435, 7));
    EXPECT_TRUE(agrees_to_significant_figures(find(3, 0.8, "I_x"), 6.26099, 6));
}

TEST(Table1, ErrataAreSelfInconsistentInPrint) {
    for (const auto& e : reproduce_table1().errata) {
        const auto row = *find_published(e.n, e.omega, e.kappa);
        if (e.column == "p2") {
            EXPECT_FALSE(agrees_to_significant_figures(std::sqrt(row.x2_mean * row.p2_mean), row.uncertainty));
        } else {
            EXPECT_FALSE(agrees_to_significant_figures(row.fisher_x * row.fisher_p, row.fisher_product));
        }
    }
}

TEST(Table1, NoFlagsOutsidePublishedRows) {
    TrapConfig c;
    c.lattice_shape = 0.3;
    EXPECT_TRUE(compare_with_published(0, 1.0, 0.3, closed_form_measures(EffectiveOscillator(c), 0)).empty());
}

TEST(Table1, BlockNames) {
    EXPECT_EQ(to_string(Table1Block::kappa_sweep), "kappa-sweep");
    EXPECT_EQ(to_string(Table1Block::omega_sweep), "omega-sweep");
}
