#pragma once

#include <utility>
#include <vector>

#include "ratcat/lattice_paths.hpp"
#include "ratcat/set_partition.hpp"

namespace ratcat {

// A span [first, last] of labels enclosed by one laser.
using LabelSpan = std::pair<int, int>;

// Each label goes to the innermost span holding it; labels in no span form
// one outer block. Spans must nest.
SetPartition partition_from_spans(int n, std::vector<LabelSpan> spans);

// pi(D), a partition of [b-1].
SetPartition partition_of_path(const DyckPath& path);

// The homogeneous partition of [a+b-1]; always a blocks.
SetPartition homogeneous_partition_of_path(const DyckPath& path);
std::vector<LabelSpan> homogeneous_spans(const DyckPath& path);

// Each N becomes NE; lands in slope (a, a+b).
DyckPath double_path(const DyckPath& path);

// pi(rot_prime(D)) == rotate(pi(D), -1).
DyckPath rot_prime(const DyckPath& path);

struct RankAssignment {
  Slope slope;
  SetPartition partition;
  std::vector<long> ranks;  // aligned with partition.blocks()

  long rank_of_block(std::size_t index) const { return ranks.at(index); }
  long rank_of(const SetPartition::Block& block) const;
  long total() const;
};

struct RankSequence {
  Slope slope;
  std::vector<int> entries;  // length b-1
};

// Total on noncrossing partitions of [b-1]; ranks may be <= 0.
RankAssignment rank_assignment(const SetPartition& p, const Slope& slope);
// Throws NegativeRankError when some rank is negative.
RankSequence rank_sequence(const SetPartition& p, const Slope& slope);
DyckPath path_from_rank_sequence(const RankSequence& rs);

bool is_member_reconstruction(const SetPartition& p, const Slope& slope);
bool is_member_kreweras(const SetPartition& p, const Slope& slope);
bool has_valid_ranking(const SetPartition& p, const Slope& slope);
bool is_member_rank_orbit(const SetPartition& p, const Slope& slope);
inline bool is_member(const SetPartition& p, const Slope& slope) {
  return is_member_reconstruction(p, slope);
}

std::vector<SetPartition> enumerate_nc(const Slope& slope);
std::vector<SetPartition> enumerate_hnc(const Slope& slope);

}  // namespace ratcat
