#include "ratcat/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "ratcat/errors.hpp"
#include "ratcat/rational_nc.hpp"

namespace ratcat {

SymmetricContext::SymmetricContext(Slope slope, int d) : slope_(slope), d_(d), q_(0) {
  const int n = slope.b() - 1;
  if (slope.a() >= slope.b()) throw Error(ErrorCode::InvalidSlope, "need a < b");
  if (d < 1 || d >= n || n % d != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "d = " + std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
  }
  q_ = n / d;
}

long ModifiedRankSequence::sum() const { return std::accumulate(entries.begin(), entries.end(), 0L); }

long ModifiedRankSequence::c() const { return context.slope().a() - static_cast<long>(context.q()) * sum(); }

ModifiedRankSequence make_sequence(const SymmetricContext& ctx, std::vector<int> entries) {
  if (entries.size() != static_cast<std::size_t>(ctx.d())) {
    throw Error(ErrorCode::InvalidSequence, "sequence must have length d = " + std::to_string(ctx.d()));
  }
  if (std::any_of(entries.begin(), entries.end(), [](int e) { return e < 0; })) {
    throw Error(ErrorCode::InvalidSequence, "negative entry");
  }
  return ModifiedRankSequence{ctx, std::move(entries)};
}

ModifiedRankSequence rotate(const ModifiedRankSequence& s, int k) {
  const int d = s.context.d();
  const int shift = ((k % d) + d) % d;
  ModifiedRankSequence out = s;
  for (int t = 0; t < d; ++t) out.entries[static_cast<std::size_t>((t + shift) % d)] = s.entries[static_cast<std::size_t>(t)];
  return out;
}

bool is_fixed(const SetPartition& p, const SymmetricContext& ctx) {
  return p.size() == ctx.slope().b() - 1 && rotate(p, ctx.d()) == p;
}

std::vector<SetPartition> fixed_partitions(const SymmetricContext& ctx) {
  std::vector<SetPartition> out;
  for (SetPartition& p : enumerate_nc(ctx.slope()))
    if (is_fixed(p, ctx)) out.push_back(std::move(p));
  return out;
}

std::vector<BlockKind> classify_blocks(const SetPartition& p, const SymmetricContext& ctx) {
  if (!is_fixed(p, ctx)) throw Error(ErrorCode::NotFixed, "partition is not invariant under rot^d");
  const int n = p.size();
  std::vector<BlockKind> kinds;
  for (const auto& block : p.blocks()) {
    if (rotate_block(block, n, ctx.d()) == block) {
      kinds.push_back(BlockKind::Central);
      continue;
    }
    bool wraps = true;
    for (int k = 1; k < ctx.q() && wraps; ++k) {
      const auto image = rotate_block(block, n, k * ctx.d());
      wraps = block.front() <= image.front() && image.back() <= block.back();
    }
    kinds.push_back(wraps ? BlockKind::Wrapping : BlockKind::Plain);
  }
  return kinds;
}

bool is_noble_partition(const SetPartition& p, const SymmetricContext& ctx) {
  const auto kinds = classify_blocks(p, ctx);
  if (std::find(kinds.begin(), kinds.end(), BlockKind::Wrapping) != kinds.end()) return false;
  const bool has_central = std::find(kinds.begin(), kinds.end(), BlockKind::Central) != kinds.end();
  return !has_central || kinds[static_cast<std::size_t>(p.block_index_of(1))] == BlockKind::Central;
}

SymmetricShape symmetric_shape(const SetPartition& p, const SymmetricContext& ctx) {
  const auto kinds = classify_blocks(p, ctx);
  const RankAssignment ra = rank_assignment(p, ctx.slope());
  SymmetricShape shape{std::vector<int>(static_cast<std::size_t>(ctx.slope().a()), 0)};
  std::vector<char> seen(p.block_count(), 0);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == BlockKind::Central) {
      shape.central = true;
      continue;
    }
    if (seen[i]) continue;
    for (int k = 0; k < ctx.q(); ++k) {
      const auto image = rotate_block(p.blocks()[i], p.size(), k * ctx.d());
      seen[static_cast<std::size_t>(p.block_index_of(image.front()))] = 1;
    }
    ++shape.orbits;
    ++shape.rank_orbits[static_cast<std::size_t>(ra.ranks[i] - 1)];
  }
  return shape;
}

ModifiedRankSequence modified_rank_sequence(const SetPartition& p, const SymmetricContext& ctx) {
  const auto kinds = classify_blocks(p, ctx);
  const RankAssignment ra = rank_assignment(p, ctx.slope());
  std::vector<int> entries(static_cast<std::size_t>(ctx.d()), 0);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const int lo = p.blocks()[i].front();
    if (kinds[i] == BlockKind::Plain && lo <= ctx.d()) {
      entries[static_cast<std::size_t>(lo - 1)] = static_cast<int>(ra.ranks[i]);
    }
  }
  return ModifiedRankSequence{ctx, std::move(entries)};
}

std::vector<int> L_of(const ModifiedRankSequence& s) {
  if (!s.very_good()) throw Error(ErrorCode::NotVeryGood, "L(s) needs a very good sequence");
  std::vector<int> runs;
  for (int k = 0; k < s.context.q(); ++k) runs.insert(runs.end(), s.entries.begin(), s.entries.end());
  runs.front() += static_cast<int>(s.c());
  return runs;
}

std::vector<int> segment_starts(const ModifiedRankSequence& s) {
  std::vector<int> out;
  for (int k = 0; k < s.context.q(); ++k) out.push_back(k * s.context.d());
  return out;
}

bool is_noble_sequence(const ModifiedRankSequence& s) {
  return s.very_good() && check_runs(s.context.slope(), L_of(s)).ok();
}

NobleRotation noble_rotation(const ModifiedRankSequence& s) {
  if (!s.good()) throw Error(ErrorCode::NotGood, "sequence sum exceeds a/q");
  const long a = s.context.slope().a();
  const long c = s.c();
  const int d = s.context.d();
  if (c == a) return NobleRotation{s, 0, 0};

  // Only points starting a vertical run can be minimal: scan the point after
  // k east steps of the doubled path, k = 0..2d.
  const long b = s.context.slope().b();
  long weight = 0;
  long best = 0;
  int best_k = 0;
  bool tied = false;
  for (int k = 1; k <= 2 * d; ++k) {
    weight += b * s.entries[static_cast<std::size_t>((k - 1) % d)] - a;
    if (weight < best) {
      best = weight;
      best_k = k;
      tied = false;
    } else if (weight == best) {
      tied = true;
    }
  }
  if (tied) throw Error(ErrorCode::InvalidArgument, "cycle-lemma minimum is not unique");
  const int i = best_k % d;  // 0-based index of the run starting at P0
  int start = i;
  if (c > 0) {
    start = (i + d - 1) % d;
    if (s.entries[static_cast<std::size_t>(start)] != 0) {
      throw Error(ErrorCode::InvalidArgument, "entry preceding the minimum is nonzero");
    }
  }
  return NobleRotation{rotate(s, -start), start, best};
}

SetPartition s_d_inverse(const ModifiedRankSequence& s) {
  const NobleRotation nr = noble_rotation(s);
  const DyckPath path = validate_path(s.context.slope(), L_of(nr.sequence));
  return rotate(partition_of_path(path), nr.shift);
}

mpz_class count_symmetric_kreweras(const SymmetricContext& ctx, const std::vector<int>& m) {
  long weighted = 0;
  long orbits = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw Error(ErrorCode::InvalidVector, "negative multiplicity");
    weighted += static_cast<long>(i + 1) * m[i];
    orbits += m[i];
  }
  if (ctx.q() * weighted > ctx.slope().a()) {
    throw Error(ErrorCode::HypothesisViolated, "q * sum i*m_i exceeds a");
  }
  if (orbits > ctx.d()) return 0;
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(ctx.d()));
  mpz_class f;
  for (int mi : m) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mi));
    out /= f;
  }
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ctx.d() - orbits));
  out /= f;
  return out;
}

mpz_class count_symmetric_narayana(const SymmetricContext& ctx, int p, bool with_central) {
  const long a = ctx.slope().a();
  const long q = ctx.q();
  if (p < 0 || q * p > a) throw Error(ErrorCode::HypothesisViolated, "need 0 <= q * p <= a");
  if (with_central) {
    // sums of p positive entries strictly below a/q
    const long top = (a + q - 1) / q - 1;
    return binomial(ctx.d(), p) * binomial(top, p);
  }
  if (a % q != 0) return 0;
  if (p == 0) return 0;
  return binomial(ctx.d(), p) * binomial(a / q - 1, p - 1);
}

mpz_class count_symmetric_catalan(const SymmetricContext& ctx) {
  return binomial(ctx.slope().a() / ctx.q() + ctx.d(), ctx.d());
}

}  // namespace ratcat
