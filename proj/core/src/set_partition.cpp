#include "ratcat/set_partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ratcat/errors.hpp"

namespace ratcat {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw Error(ErrorCode::InvalidPartition, "negative ground set size");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int covered = 0;
  for (Block& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::InvalidPartition, "empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > n) {
        throw Error(ErrorCode::InvalidPartition,
                    "element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
      }
      if (seen[static_cast<std::size_t>(e)]) {
        throw Error(ErrorCode::InvalidPartition, "element " + std::to_string(e) + " repeated");
      }
      seen[static_cast<std::size_t>(e)] = 1;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorCode::InvalidPartition, "blocks do not cover [n]");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
  index();
}

void SetPartition::index() {
  block_of_.assign(static_cast<std::size_t>(n_), 0);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (int e : blocks_[bi]) block_of_[static_cast<std::size_t>(e - 1)] = static_cast<int>(bi);
}

SetPartition SetPartition::one_block(int n) {
  Block all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Block> blocks;
  if (n > 0) blocks.push_back(std::move(all));
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  // Blocks come out in order of first appearance, which is order of minima.
  SetPartition p;
  p.n_ = static_cast<int>(labels.size());
  std::map<int, std::size_t> slot;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(labels[i], p.blocks_.size());
    if (fresh) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(static_cast<int>(i + 1));
  }
  p.index();
  return p;
}

int SetPartition::block_index_of(int element) const {
  if (element < 1 || element > n_) throw Error(ErrorCode::InvalidArgument, "element out of range");
  return block_of_[static_cast<std::size_t>(element - 1)];
}

bool is_noncrossing(const SetPartition& p) {
  // Sweep 1..n keeping a stack of blocks that have started but not finished;
  // a block may only be revisited while it is on top.
  std::vector<int> open;
  const auto& blocks = p.blocks();
  for (int e = 1; e <= p.size(); ++e) {
    const int bi = p.block_index_of(e);
    const auto& block = blocks[static_cast<std::size_t>(bi)];
    if (block.front() != e) {
      if (open.empty() || open.back() != bi) return false;
    } else if (block.size() > 1) {
      open.push_back(bi);
    }
    if (block.back() == e && block.size() > 1) open.pop_back();
  }
  return true;
}

SetPartition::Block rotate_block(const SetPartition::Block& block, int n, int k) {
  SetPartition::Block out;
  out.reserve(block.size());
  const int shift = ((k % n) + n) % n;
  for (int e : block) out.push_back((e - 1 + shift) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition::Block reflect_block(const SetPartition::Block& block, int n) {
  SetPartition::Block out;
  out.reserve(block.size());
  for (auto it = block.rbegin(); it != block.rend(); ++it) out.push_back(n + 1 - *it);
  return out;
}

SetPartition rotate(const SetPartition& p, int k) {
  if (p.size() == 0) return p;
  std::vector<SetPartition::Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& block : p.blocks()) blocks.push_back(rotate_block(block, p.size(), k));
  return SetPartition(p.size(), std::move(blocks));
}

SetPartition reflect(const SetPartition& p) {
  std::vector<SetPartition::Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& block : p.blocks()) blocks.push_back(reflect_block(block, p.size()));
  return SetPartition(p.size(), std::move(blocks));
}

SetPartition kreweras(const SetPartition& p) {
  if (!is_noncrossing(p)) throw Error(ErrorCode::NotNoncrossing, "Kreweras complement needs a noncrossing partition");
  const int n = p.size();
  // With sigma the permutation whose cycles are the blocks read upward, the
  // complement has the cycles of i -> sigma^{-1}(i + 1).
  std::vector<int> sigma_inv(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& block : p.blocks()) {
    for (std::size_t t = 0; t < block.size(); ++t) {
      const int from = block[t];
      const int to = block[(t + 1) % block.size()];
      sigma_inv[static_cast<std::size_t>(to)] = from;
    }
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int start = 1; start <= n; ++start) {
    if (label[static_cast<std::size_t>(start - 1)] >= 0) continue;
    for (int i = start; label[static_cast<std::size_t>(i - 1)] < 0;) {
      label[static_cast<std::size_t>(i - 1)] = next;
      i = sigma_inv[static_cast<std::size_t>(i % n + 1)];
    }
    ++next;
  }
  return SetPartition::from_labels(label);
}

SetPartition kreweras_inverse(const SetPartition& p) { return rotate(kreweras(p), 1); }

namespace {

// Restricted-growth generation with a stack of blocks still able to accept
// elements; joining block t closes every block opened above it.
void grow_noncrossing(int n, int e, std::vector<int>& labels, std::vector<int>& open, int blocks,
                      std::vector<SetPartition>& out) {
  if (e > n) {
    out.push_back(SetPartition::from_labels(labels));
    return;
  }
  for (std::size_t depth = 0; depth < open.size(); ++depth) {
    labels[static_cast<std::size_t>(e - 1)] = open[depth];
    std::vector<int> kept(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
    grow_noncrossing(n, e + 1, labels, kept, blocks, out);
  }
  labels[static_cast<std::size_t>(e - 1)] = blocks;
  open.push_back(blocks);
  grow_noncrossing(n, e + 1, labels, open, blocks + 1, out);
  open.pop_back();
}

void grow_all(int n, int e, std::vector<int>& labels, int blocks, std::vector<SetPartition>& out) {
  if (e > n) {
    out.push_back(SetPartition::from_labels(labels));
    return;
  }
  for (int t = 0; t <= blocks; ++t) {
    labels[static_cast<std::size_t>(e - 1)] = t;
    grow_all(n, e + 1, labels, t == blocks ? blocks + 1 : blocks, out);
  }
}

}  // namespace

std::vector<SetPartition> enumerate_noncrossing(int n) {
  std::vector<SetPartition> out;
  if (n < 1) {
    out.push_back(SetPartition::singletons(0));
    return out;
  }
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<int> open;
  grow_noncrossing(n, 1, labels, open, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)), 0);
  grow_all(n, 1, labels, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.size() != coarser.size()) return false;
  for (const auto& block : finer.blocks()) {
    const int target = coarser.block_index_of(block.front());
    for (int e : block)
      if (coarser.block_index_of(e) != target) return false;
  }
  return true;
}

}  // namespace ratcat
