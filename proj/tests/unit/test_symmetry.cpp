#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ratcat/errors.hpp"
#include "ratcat/format.hpp"
#include "ratcat/rational_nc.hpp"
#include "ratcat/symmetry.hpp"

using namespace ratcat;

namespace {

SetPartition P(const char* text) { return parse_partition(text); }

std::vector<SymmetricContext> contexts(int max_b) {
  std::vector<SymmetricContext> out;
  for (auto [a, b] : oracle::slopes_up_to(max_b))
    for (int d = 1; d < b - 1; ++d)
      if ((b - 1) % d == 0) out.emplace_back(Slope(a, b), d);
  return out;
}

std::vector<std::vector<int>> good_sequences(const SymmetricContext& ctx) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int budget = ctx.slope().a() / ctx.q();
  std::function<void(int)> go = [&](int left) {
    if (static_cast<int>(cur.size()) == ctx.d()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      go(left - v);
      cur.pop_back();
    }
  };
  go(budget);
  return out;
}

}  // namespace

TEST(Context, RejectsBadDivisor) {
  EXPECT_THROW(SymmetricContext(Slope(3, 5), 3), Error);
  EXPECT_THROW(SymmetricContext(Slope(3, 5), 4), Error);
  EXPECT_NO_THROW(SymmetricContext(Slope(3, 5), 2));
}

TEST(FixedPartitions, Examples) {
  const auto f49 = fixed_partitions(SymmetricContext(Slope(4, 9), 4));
  EXPECT_TRUE(std::count(f49.begin(), f49.end(), P("1,8|2,3,6,7|4,5")));
  EXPECT_EQ(fixed_partitions(SymmetricContext(Slope(3, 5), 2)).size(), 3u);
  for (const auto& ctx : contexts(10)) {
    const auto fixed = fixed_partitions(ctx);
    EXPECT_TRUE(std::count(fixed.begin(), fixed.end(), SetPartition::one_block(ctx.slope().b() - 1)));
  }
}

TEST(ClassifyBlocks, Examples) {
  const SymmetricContext c49(Slope(4, 9), 4);
  EXPECT_EQ(classify_blocks(P("1,8|2,3,6,7|4,5"), c49),
            (std::vector<BlockKind>{BlockKind::Wrapping, BlockKind::Central, BlockKind::Plain}));
  EXPECT_EQ(classify_blocks(SetPartition::one_block(8), c49), (std::vector<BlockKind>{BlockKind::Central}));
  EXPECT_EQ(classify_blocks(P("1,6|2,3|4,5"), SymmetricContext(Slope(6, 7), 2))[0], BlockKind::Wrapping);
  EXPECT_THROW(classify_blocks(P("1,2|3|4"), SymmetricContext(Slope(3, 5), 2)), Error);
  EXPECT_FALSE(is_noble_partition(P("1,8|2,3,6,7|4,5"), c49));
}

TEST(ModifiedRankSequence, Examples) {
  EXPECT_EQ(modified_rank_sequence(P("1,8|2,3,6,7|4,5"), SymmetricContext(Slope(4, 9), 4)).entries,
            (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(modified_rank_sequence(P("1,3,4,6|2|5"), SymmetricContext(Slope(6, 7), 3)).entries,
            (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(modified_rank_sequence(SetPartition::one_block(6), SymmetricContext(Slope(6, 7), 3)).entries,
            (std::vector<int>{0, 0, 0}));
}

TEST(LOf, Examples) {
  const SymmetricContext c47(Slope(4, 7), 3);
  EXPECT_EQ(L_of(make_sequence(c47, {0, 1, 1})), (std::vector<int>{0, 1, 1, 0, 1, 1}));
  EXPECT_EQ(L_of(make_sequence(c47, {0, 0, 0})), (std::vector<int>{4, 0, 0, 0, 0, 0}));
  const SymmetricContext c913(Slope(9, 13), 4);
  EXPECT_TRUE(check_runs(Slope(9, 13), L_of(make_sequence(c913, {1, 2, 0, 0}))).ok());
  EXPECT_THROW(L_of(make_sequence(SymmetricContext(Slope(11, 13), 4), {1, 0, 2, 0})), Error);
}

TEST(Noble, Verdicts) {
  const SymmetricContext c47(Slope(4, 7), 3);
  EXPECT_FALSE(is_noble_sequence(make_sequence(c47, {0, 1, 1})));
  EXPECT_TRUE(is_noble_sequence(make_sequence(c47, {1, 1, 0})));
  EXPECT_TRUE(is_noble_sequence(make_sequence(c47, {0, 0, 0})));
  EXPECT_FALSE(is_noble_sequence(make_sequence(SymmetricContext(Slope(11, 13), 4), {1, 0, 2, 0})));
}

TEST(NobleRotation, Examples) {
  const auto r = noble_rotation(make_sequence(SymmetricContext(Slope(11, 13), 4), {1, 0, 2, 0}));
  EXPECT_EQ(r.sequence.entries, (std::vector<int>{0, 2, 0, 1}));
  EXPECT_EQ(r.min_weight, -14);
  const SymmetricContext c47(Slope(4, 7), 3);
  EXPECT_EQ(noble_rotation(make_sequence(c47, {0, 1, 1})).sequence.entries, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(noble_rotation(make_sequence(c47, {0, 0, 0})).sequence.entries, (std::vector<int>{0, 0, 0}));
  EXPECT_THROW(noble_rotation(make_sequence(c47, {1, 1, 1})), Error);
}

TEST(NobleRotation, AlwaysNobleAndARotation) {
  for (const auto& ctx : contexts(13)) {
    for (const auto& entries : good_sequences(ctx)) {
      const auto s = make_sequence(ctx, entries);
      const auto r = noble_rotation(s);
      EXPECT_TRUE(is_noble_sequence(r.sequence)) << format_int_list(entries);
      EXPECT_EQ(rotate(r.sequence, r.shift), s);
    }
  }
}

TEST(SdInverse, Examples) {
  EXPECT_EQ(format_partition(s_d_inverse(make_sequence(SymmetricContext(Slope(4, 9), 4), {0, 0, 0, 1}))),
            "1,8|2,3,6,7|4,5");
  EXPECT_EQ(format_partition(s_d_inverse(make_sequence(SymmetricContext(Slope(6, 7), 3), {0, 1, 0}))),
            "1,3,4,6|2|5");
  EXPECT_EQ(s_d_inverse(make_sequence(SymmetricContext(Slope(6, 7), 3), {0, 0, 0})), SetPartition::one_block(6));
}

TEST(Bijection, ExhaustiveUpTo13) {
  for (const auto& ctx : contexts(13)) {
    const auto fixed = fixed_partitions(ctx);
    std::set<std::vector<int>> images;
    for (const auto& p : fixed) {
      const auto s = modified_rank_sequence(p, ctx);
      EXPECT_TRUE(s.good());
      EXPECT_EQ(s_d_inverse(s), p);
      EXPECT_EQ(modified_rank_sequence(rotate(p, 1), ctx), rotate(s, 1));
      EXPECT_EQ(is_noble_partition(p, ctx), is_noble_sequence(s)) << format_partition(p);
      images.insert(s.entries);
    }
    const auto goods = good_sequences(ctx);
    EXPECT_EQ(images, std::set<std::vector<int>>(goods.begin(), goods.end()));
  }
}

TEST(Counts, Examples) {
  EXPECT_EQ(count_symmetric_catalan(SymmetricContext(Slope(3, 5), 2)), 3);
  EXPECT_EQ(count_symmetric_kreweras(SymmetricContext(Slope(4, 9), 4), {1, 0, 0, 0}), 4);
  EXPECT_EQ(count_symmetric_narayana(SymmetricContext(Slope(6, 7), 3), 1, true), 6);
  EXPECT_EQ(count_symmetric_narayana(SymmetricContext(Slope(3, 5), 2), 1, true), 2);
  EXPECT_THROW(count_symmetric_narayana(SymmetricContext(Slope(3, 5), 2), 2, true), Error);
}

TEST(Counts, MatchBruteForce) {
  for (const auto& ctx : contexts(13)) {
    const int a = ctx.slope().a(), q = ctx.q(), n = ctx.slope().b() - 1;
    std::vector<SetPartition> fixed;
    for (const auto& p : enumerate_nc(ctx.slope()))
      if (oracle::fixed_under_rotation({p}, ctx.d()) == 1) fixed.push_back(p);
    EXPECT_EQ(count_symmetric_catalan(ctx), static_cast<long>(fixed.size()));

    std::map<std::vector<int>, long> by_ranks;
    std::map<std::pair<int, bool>, long> by_orbits;
    for (const auto& p : fixed) {
      const auto ra = rank_assignment(p, ctx.slope());
      std::vector<int> m(static_cast<std::size_t>(a), 0);
      bool central = false;
      int orbits = 0;
      for (std::size_t i = 0; i < p.block_count(); ++i) {
        if (rotate_block(p.blocks()[i], n, ctx.d()) == p.blocks()[i]) {
          central = true;
          continue;
        }
        // count each orbit once, at the member with the smallest minimum
        int least = p.blocks()[i].front();
        for (int k = 1; k < q; ++k) least = std::min(least, rotate_block(p.blocks()[i], n, k * ctx.d()).front());
        if (least != p.blocks()[i].front()) continue;
        ++orbits;
        ++m[static_cast<std::size_t>(ra.ranks[i] - 1)];
      }
      ++by_ranks[m];
      ++by_orbits[{orbits, central}];
    }
    std::vector<int> m(static_cast<std::size_t>(a), 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int used) {
      if (i == m.size()) {
        EXPECT_EQ(count_symmetric_kreweras(ctx, m), by_ranks[m]);
        return;
      }
      for (int v = 0; used + q * static_cast<int>(i + 1) * v <= a; ++v) {
        m[i] = v;
        go(i + 1, used + q * static_cast<int>(i + 1) * v);
      }
      m[i] = 0;
    };
    go(0, 0);
    for (int p = 0; q * p <= a; ++p) {
      EXPECT_EQ(count_symmetric_narayana(ctx, p, true), (by_orbits[{p, true}])) << ctx.slope().a() << "," << ctx.slope().b() << " d=" << ctx.d() << " p=" << p;
      EXPECT_EQ(count_symmetric_narayana(ctx, p, false), (by_orbits[{p, false}]));
    }
  }
}

TEST(NoblePartition, Examples) {
  const SymmetricContext c3(Slope(6, 7), 3);
  EXPECT_FALSE(is_noble_partition(P("1|2,3,5,6|4"), c3));
  EXPECT_TRUE(is_noble_partition(P("1,3,4,6|2|5"), c3));
  EXPECT_TRUE(is_noble_partition(P("1,2,4,5|3|6"), c3));
  const SymmetricContext c2(Slope(6, 7), 2);
  EXPECT_FALSE(is_noble_partition(P("1,6|2,3|4,5"), c2));
  EXPECT_TRUE(is_noble_partition(P("1,2|3,4|5,6"), c2));
}
