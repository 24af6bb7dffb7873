#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "richlines/line.hpp"

using namespace richlines;

namespace {

NumberSet range_set(long n) {
    std::vector<Scalar> v;
    for (long i = 0; i < n; ++i) v.emplace_back(i);
    return NumberSet(std::move(v));
}

Grid square(long n) { return Grid{range_set(n), range_set(n)}; }

TEST(Richness, Examples) {
    EXPECT_EQ(richness(Line{Scalar(1), Scalar(0)}, square(3)), 3u);

    Grid g{range_set(4), NumberSet(std::vector<Scalar>{Scalar(1), Scalar(3), Scalar(5), Scalar(7)})};
    EXPECT_EQ(richness(Line{Scalar(2), Scalar(1)}, g), 4u);

    EXPECT_EQ(richness(Line{Scalar(1), Scalar(100)}, square(3)), 0u);
}

TEST(Projections, Examples) {
    Grid g{range_set(4), NumberSet(std::vector<Scalar>{Scalar(1), Scalar(3), Scalar(5), Scalar(7)})};
    Line l{Scalar(2), Scalar(1)};
    EXPECT_EQ(x_projection(l, g), range_set(4));
    EXPECT_EQ(y_projection(l, g), (NumberSet(std::vector<Scalar>{Scalar(1), Scalar(3), Scalar(5), Scalar(7)})));

    Line far{Scalar(1), Scalar(100)};
    EXPECT_TRUE(x_projection(far, square(3)).empty());
    EXPECT_TRUE(y_projection(far, square(3)).empty());

    // horizontal line: X = A, Y a single point
    Line flat{Scalar(0), Scalar(1)};
    EXPECT_EQ(x_projection(flat, square(3)), range_set(3));
    EXPECT_EQ(y_projection(flat, square(3)), NumberSet(std::vector<Scalar>{Scalar(1)}));
    EXPECT_EQ(richness(flat, square(3)), 3u);
}

TEST(RichnessReport, ProjectionInvariants) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 80; ++i) {
        long n = 3 + static_cast<long>(rng() % 8);
        Grid g = square(n);
        Line l{Scalar(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)),
               Scalar(static_cast<long>(rng() % 9) - 4)};
        RichnessReport rep = richness_report(l, g);
        EXPECT_EQ(rep.richness, richness(l, g));
        EXPECT_EQ(rep.richness, rep.x_proj.size());
        if (l.slope.is_zero())
            EXPECT_LE(rep.y_proj.size(), 1u);
        else
            EXPECT_EQ(rep.richness, rep.y_proj.size());
    }
}

TEST(AffineMap, RoundTripAndInverse) {
    Line l{Scalar(1), Scalar(0)};
    EXPECT_EQ(to_matrix(l), (AffineMap{Scalar(1), Scalar(0)}));
    EXPECT_EQ(from_matrix(to_matrix(l)), l);

    AffineMap m{Scalar(4), Scalar(3)};
    AffineMap mi = inverse(m);
    EXPECT_EQ(mi, (AffineMap{Scalar(1, 4), Scalar(-3, 4)}));

    AffineMap m2{Scalar(2), Scalar(5)};
    EXPECT_EQ(compose(m2, inverse(m2)), (AffineMap{Scalar(1), Scalar(0)}));
    EXPECT_EQ(compose(inverse(m2), m2), (AffineMap{Scalar(1), Scalar(0)}));
    EXPECT_THROW(inverse(AffineMap{Scalar(0), Scalar(2)}), InvalidArgument);
}

TEST(AffineMap, RoundTripProperty) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Line l{Scalar(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5)),
               Scalar(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5))};
        EXPECT_EQ(from_matrix(to_matrix(l)), l);
    }
}

TEST(Combine, Examples) {
    Line l{Scalar(2), Scalar(1)}, lp{Scalar(4), Scalar(3)};
    EXPECT_EQ(combine(l, lp), (Line{Scalar(1, 2), Scalar(-1, 2)}));
    EXPECT_EQ(combine(l, l), (Line{Scalar(1), Scalar(0)}));
    EXPECT_EQ(combine(Line{Scalar(3), Scalar(7)}, Line{Scalar(3), Scalar(1)}),
              (Line{Scalar(1), Scalar(2)}));
    EXPECT_THROW(combine(l, Line{Scalar(0), Scalar(3)}), InvalidArgument);
}

TEST(Combine, MatchesMatrixProduct) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto scalar = [&rng](bool nonzero) {
            long num = static_cast<long>(rng() % 13) - 6;
            if (nonzero && num == 0) num = 1;
            return Scalar(num, 1 + static_cast<long>(rng() % 4));
        };
        Line l{scalar(false), scalar(false)};
        Line lp{scalar(true), scalar(false)};
        AffineMap product = compose(inverse(to_matrix(lp)), to_matrix(l));
        EXPECT_EQ(to_matrix(combine(l, lp)), product);  // entrywise
    }
}

TEST(SameSlopeCombine, Examples) {
    EXPECT_EQ(same_slope_combine(Line{Scalar(3), Scalar(7)}, Line{Scalar(3), Scalar(1)}),
              (Line{Scalar(1), Scalar(2)}));
    Line l{Scalar(5), Scalar(2)};
    EXPECT_EQ(same_slope_combine(l, l), (Line{Scalar(1), Scalar(0)}));
    EXPECT_EQ(same_slope_combine(Line{Scalar(1, 2), Scalar(1)}, Line{Scalar(1, 2), Scalar(0)}),
              (Line{Scalar(1), Scalar(2)}));
    EXPECT_THROW(same_slope_combine(Line{Scalar(1), Scalar(0)}, Line{Scalar(2), Scalar(0)}),
                 InvalidArgument);
    EXPECT_THROW(same_slope_combine(Line{Scalar(0), Scalar(1)}, Line{Scalar(0), Scalar(2)}),
                 InvalidArgument);
}

TEST(SameSlopeCombine, AgreesWithCombine) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Scalar slope(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4));
        Line l{slope, Scalar(static_cast<long>(rng() % 21) - 10)};
        Line lp{slope, Scalar(static_cast<long>(rng() % 21) - 10)};
        EXPECT_EQ(same_slope_combine(l, lp), combine(l, lp));
    }
}

TEST(RichnessTransfer, ExhaustiveOnSmallSquareGrids) {
    // richness(combine(l, lp)) >= |Y(l) n Y(lp)| whenever both slopes are
    // nonzero; checked over every pair of 2-rich nonzero-slope lines.
    for (long n : {4L, 7L}) {
        Grid g = square(n);
        std::vector<Line> lines;
        for (const Line& l : oracle::rich_lines_bruteforce(g, 2))
            if (!l.slope.is_zero()) lines.push_back(l);
        for (const Line& l : lines) {
            for (const Line& lp : lines) {
                count_t overlap = intersect(y_projection(l, g), y_projection(lp, g)).size();
                EXPECT_GE(richness(combine(l, lp), g), overlap);
            }
        }
    }
}

TEST(GeneralPosition, Examples) {
    std::vector<Line> no_common{{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(1)}, {Scalar(3), Scalar(5)}};
    EXPECT_EQ(general_position_select(no_common).size(), 3u);

    std::vector<Line> through_origin{{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(0)}, {Scalar(3), Scalar(0)}};
    auto picked = general_position_select(through_origin);
    ASSERT_EQ(picked.size(), 2u);
    EXPECT_EQ(picked[0].slope, Scalar(1));
    EXPECT_EQ(picked[1].slope, Scalar(2));

    std::vector<Line> single{{Scalar(5), Scalar(-3)}};
    EXPECT_EQ(general_position_select(single), single);

    // parallel duplicates collapse to the smallest intercept
    std::vector<Line> parallels{{Scalar(1), Scalar(4)}, {Scalar(1), Scalar(1)}, {Scalar(2), Scalar(0)}};
    auto kept = general_position_select(parallels);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0], (Line{Scalar(1), Scalar(1)}));
}

TEST(GeneralPosition, OutputProperty) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Line> lines;
        for (int i = 0; i < 25; ++i)
            lines.push_back(Line{Scalar(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)),
                                 Scalar(static_cast<long>(rng() % 9) - 4)});
        auto picked = general_position_select(lines);
        for (std::size_t i = 0; i < picked.size(); ++i)
            for (std::size_t j = i + 1; j < picked.size(); ++j) {
                EXPECT_NE(picked[i].slope, picked[j].slope);
                for (std::size_t k = j + 1; k < picked.size(); ++k) {
                    auto [x, y] = intersection(picked[i], picked[j]);
                    EXPECT_NE(picked[k].at(x), y);  // no concurrent triple
                }
            }
    }
}

}  // namespace
