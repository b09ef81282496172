#pragma once

#include <vector>

#include <gmpxx.h>

#include "ratcat/lattice_paths.hpp"
#include "ratcat/set_partition.hpp"

namespace ratcat {

// Rotation by d on NC(a,b), with d a proper divisor of b-1 and q = (b-1)/d.
class SymmetricContext {
 public:
  SymmetricContext(Slope slope, int d);

  const Slope& slope() const noexcept { return slope_; }
  int d() const noexcept { return d_; }
  int q() const noexcept { return q_; }

  friend bool operator==(const SymmetricContext&, const SymmetricContext&) = default;

 private:
  Slope slope_;
  int d_;
  int q_;
};

struct ModifiedRankSequence {
  SymmetricContext context;
  std::vector<int> entries;  // length d

  long sum() const;
  long c() const;  // a - q * sum
  bool good() const { return c() >= 0; }
  bool very_good() const { return good() && (c() == 0 || entries.front() == 0); }

  friend bool operator==(const ModifiedRankSequence&, const ModifiedRankSequence&) = default;
};

// Throws InvalidSequence on wrong length or negative entries.
ModifiedRankSequence make_sequence(const SymmetricContext& ctx, std::vector<int> entries);
// (s_d, s_1, ..., s_{d-1}) applied k times.
ModifiedRankSequence rotate(const ModifiedRankSequence& s, int k = 1);

enum class BlockKind { Central, Wrapping, Plain };

std::vector<SetPartition> fixed_partitions(const SymmetricContext& ctx);
bool is_fixed(const SetPartition& p, const SymmetricContext& ctx);

// Aligned with p.blocks(). Throws NotFixed.
std::vector<BlockKind> classify_blocks(const SetPartition& p, const SymmetricContext& ctx);
bool is_noble_partition(const SetPartition& p, const SymmetricContext& ctx);

// Orbit data of a fixed partition under rot^d.
struct SymmetricShape {
  std::vector<int> rank_orbits;  // [i-1] = non-central orbits of rank i
  int orbits = 0;                // non-central orbits
  bool central = false;
};

SymmetricShape symmetric_shape(const SetPartition& p, const SymmetricContext& ctx);

ModifiedRankSequence modified_rank_sequence(const SetPartition& p, const SymmetricContext& ctx);

// L(s) as a run vector of length b-1; it need not stay above the diagonal.
// Throws NotVeryGood.
std::vector<int> L_of(const ModifiedRankSequence& s);
// Start column of each segment L_1..L_q.
std::vector<int> segment_starts(const ModifiedRankSequence& s);

bool is_noble_sequence(const ModifiedRankSequence& s);

// sequence[t] == original[t + shift], so rotate(sequence, shift) == original.
struct NobleRotation {
  ModifiedRankSequence sequence;
  int shift = 0;
  long min_weight = 0;
};

// Throws NotGood.
NobleRotation noble_rotation(const ModifiedRankSequence& s);

// The fixed partition whose modified rank sequence is s. Throws NotGood.
SetPartition s_d_inverse(const ModifiedRankSequence& s);

// m[i-1] = number of non-central orbits of rank i.
mpz_class count_symmetric_kreweras(const SymmetricContext& ctx, const std::vector<int>& m);
mpz_class count_symmetric_narayana(const SymmetricContext& ctx, int p, bool with_central);
mpz_class count_symmetric_catalan(const SymmetricContext& ctx);

}  // namespace ratcat
