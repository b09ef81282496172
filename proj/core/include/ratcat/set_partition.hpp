#pragma once

#include <compare>
#include <span>
#include <vector>

namespace ratcat {

// A set partition of [n] = {1..n}. Blocks are kept sorted ascending and
// ordered by their minima, so structural equality is partition equality.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition(int n, std::vector<Block> blocks);

  static SetPartition one_block(int n);
  static SetPartition singletons(int n);
  // labels[i-1] names the block of i; any labelling scheme is accepted.
  static SetPartition from_labels(std::span<const int> labels);

  int size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  // Index into blocks() of the block containing element (1-based).
  int block_index_of(int element) const;
  bool same_block(int i, int j) const { return block_index_of(i) == block_index_of(j); }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition() = default;
  void index();

  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

bool is_noncrossing(const SetPartition& p);

// i -> i+k modulo n, representatives in [n]; k may be negative.
SetPartition rotate(const SetPartition& p, int k = 1);
SetPartition reflect(const SetPartition& p);
SetPartition::Block rotate_block(const SetPartition::Block& block, int n, int k);
SetPartition::Block reflect_block(const SetPartition::Block& block, int n);

// Kreweras complement; krew(krew(p)) == rotate(p, -1). Throws NotNoncrossing.
SetPartition kreweras(const SetPartition& p);
SetPartition kreweras_inverse(const SetPartition& p);

// NC(n) in canonical (sorted) order.
std::vector<SetPartition> enumerate_noncrossing(int n);
// Every set partition of [n], canonical order.
std::vector<SetPartition> enumerate_set_partitions(int n);

bool refines(const SetPartition& finer, const SetPartition& coarser);

}  // namespace ratcat
