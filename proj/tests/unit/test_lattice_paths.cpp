#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ratcat/errors.hpp"
#include "ratcat/lattice_paths.hpp"

using namespace ratcat;

TEST(Slope, RejectsNonCoprime) {
  EXPECT_THROW(Slope(2, 4), Error);
  EXPECT_THROW(Slope(0, 3), Error);
  EXPECT_NO_THROW(Slope(5, 8));
}

TEST(ValidatePath, FiveEightPath) {
  const DyckPath d = validate_path(Slope(5, 8), {1, 1, 0, 2, 1, 0, 0});
  EXPECT_EQ(d.prefix_height(8), 5);
  EXPECT_EQ(d.word(), "NENEENNENEEEE");
}

TEST(ValidatePath, TopPath) {
  for (auto [a, b] : oracle::slopes_up_to(9)) {
    std::vector<int> runs(static_cast<std::size_t>(b - 1), 0);
    runs[0] = a;
    EXPECT_NO_THROW(validate_path(Slope(a, b), runs));
  }
}

TEST(ValidatePath, BelowDiagonalReportsColumn) {
  try {
    validate_path(Slope(4, 7), {0, 1, 1, 0, 1, 1});
    FAIL();
  } catch (const PathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BelowDiagonal);
    EXPECT_EQ(e.x(), 1);
  }
}

TEST(ValidatePath, LengthAndTotal) {
  try {
    validate_path(Slope(2, 3), {2});
    FAIL();
  } catch (const PathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongLength);
  }
  try {
    validate_path(Slope(2, 3), {1, 0});
    FAIL();
  } catch (const PathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongTotal);
  }
}

TEST(EnumeratePaths, SmallOrder) {
  const auto paths = enumerate_paths(Slope(2, 3));
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].runs(), (std::vector<int>{2, 0}));
  EXPECT_EQ(paths[1].runs(), (std::vector<int>{1, 1}));
}

TEST(EnumeratePaths, MatchesSubsetOracle) {
  for (auto [a, b] : oracle::slopes_up_to(11)) {
    auto expected = oracle::dyck_run_vectors(a, b);
    std::sort(expected.rbegin(), expected.rend());
    std::vector<std::vector<int>> got;
    for (const auto& d : enumerate_paths(Slope(a, b))) got.push_back(d.runs());
    EXPECT_EQ(got, expected) << a << "," << b;
    EXPECT_EQ(catalan(Slope(a, b)), oracle::rational_catalan(a, b));
  }
}

TEST(Valleys, FiveEight) {
  const DyckPath d = validate_path(Slope(5, 8), {1, 1, 0, 2, 1, 0, 0});
  const auto v = valleys(d);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], (LatticePoint{1, 1}));
  EXPECT_EQ(v[1], (LatticePoint{3, 2}));
  EXPECT_EQ(v[2], (LatticePoint{4, 4}));
  EXPECT_EQ(vertical_run_sizes(d), (std::vector<int>{1, 1, 2, 1}));
}

TEST(Lasers, FiveEight) {
  const DyckPath d = validate_path(Slope(5, 8), {1, 1, 0, 2, 1, 0, 0});
  EXPECT_EQ(laser_set(d), (LaserSet{{1, 2}, {3, 7}, {4, 5}}));
}

TEST(Lasers, AlwaysAdmissible) {
  for (auto [a, b] : oracle::slopes_up_to(11)) {
    const Slope s(a, b);
    const LaserSet adm = admissible_lasers(s);
    for (const auto& d : enumerate_paths(s))
      for (const Laser& l : laser_set(d)) EXPECT_TRUE(adm.count(l)) << a << "," << b;
  }
}

TEST(Counts, NarayanaAndKrewerasRefineCatalan) {
  for (auto [a, b] : oracle::slopes_up_to(11)) {
    const Slope s(a, b);
    const auto paths = enumerate_paths(s);
    mpz_class nar_total = 0;
    for (int k = 1; k <= a; ++k) {
      const long brute = std::count_if(paths.begin(), paths.end(),
                                       [k](const DyckPath& d) { return static_cast<int>(vertical_run_sizes(d).size()) == k; });
      EXPECT_EQ(narayana(s, k), brute) << a << "," << b << " k=" << k;
      EXPECT_EQ(narayana(s, k), oracle::narayana(a, b, k));
      nar_total += narayana(s, k);
    }
    EXPECT_EQ(nar_total, catalan(s));
    for (const auto& r : kreweras_vectors(a)) {
      const long brute = std::count_if(paths.begin(), paths.end(), [&](const DyckPath& d) {
        std::vector<int> counts(static_cast<std::size_t>(a), 0);
        for (int size : vertical_run_sizes(d)) ++counts[static_cast<std::size_t>(size - 1)];
        return counts == r;
      });
      EXPECT_EQ(kreweras(s, r), brute);
    }
  }
}

TEST(Counts, KrewerasExample) { EXPECT_EQ(kreweras(Slope(5, 7), std::vector<int>{1, 2, 0, 0, 0}), 15); }

TEST(Counts, KrewerasRejectsBadVector) {
  EXPECT_THROW(kreweras(Slope(5, 7), std::vector<int>{1, 1, 0, 0, 0}), Error);
}

TEST(Words, RoundTrip) {
  for (const auto& d : enumerate_paths(Slope(4, 9))) EXPECT_EQ(word_to_runs(Slope(4, 9), d.word()), d.runs());
  EXPECT_THROW(word_to_runs(Slope(2, 3), "NNEEN"), Error);
}
