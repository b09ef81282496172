#include "ratcat/rational_nc.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ratcat/errors.hpp"

namespace ratcat {

namespace {

void require_ground_set(const SetPartition& p, const Slope& slope) {
  if (p.size() != slope.b() - 1) {
    throw Error(ErrorCode::InvalidArgument, "partition must be of [" + std::to_string(slope.b() - 1) + "]");
  }
}

void require_noncrossing(const SetPartition& p) {
  if (!is_noncrossing(p)) throw Error(ErrorCode::NotNoncrossing, "partition is crossing");
}

long ceil_div(long num, long den) { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }

}  // namespace

SetPartition partition_from_spans(int n, std::vector<LabelSpan> spans) {
  // Outer spans first among equal starts.
  std::sort(spans.begin(), spans.end(), [](const LabelSpan& x, const LabelSpan& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  for (int label = 1; label <= n; ++label) {
    while (!stack.empty() && spans[stack.back()].second < label) stack.pop_back();
    for (; next < spans.size() && spans[next].first <= label; ++next) {
      if (spans[next].first > spans[next].second) continue;
      if (!stack.empty() && spans[next].second > spans[stack.back()].second) {
        throw Error(ErrorCode::InvalidArgument, "laser spans cross");
      }
      stack.push_back(next);
    }
    labels[static_cast<std::size_t>(label - 1)] = stack.empty() ? 0 : static_cast<int>(stack.back()) + 1;
  }
  return SetPartition::from_labels(labels);
}

SetPartition partition_of_path(const DyckPath& path) {
  std::vector<LabelSpan> spans;
  for (const Laser& laser : laser_set(path)) spans.emplace_back(laser.first + 1, laser.second);
  return partition_from_spans(path.slope().b() - 1, std::move(spans));
}

std::vector<LabelSpan> homogeneous_spans(const DyckPath& path) {
  const long a = path.slope().a();
  const long b = path.slope().b();
  const std::string word = path.word();
  std::vector<LatticePoint> pts{{0, 0}};
  for (char step : word) {
    LatticePoint p = pts.back();
    (step == 'N' ? p.y : p.x) += 1;
    pts.push_back(p);
  }
  std::vector<LabelSpan> spans;
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (word[k] != 'N') continue;
    const LatticePoint from = pts[k];
    for (std::size_t m = k + 1; m < word.size(); ++m) {
      if (word[m] != 'E') continue;
      const LatticePoint west = pts[m];
      if (b * from.y + a * (west.x + 1 - from.x) > b * west.y) {
        spans.emplace_back(static_cast<int>(k) + 1, static_cast<int>(m));
        break;
      }
    }
  }
  return spans;
}

SetPartition homogeneous_partition_of_path(const DyckPath& path) {
  return partition_from_spans(path.slope().a() + path.slope().b() - 1, homogeneous_spans(path));
}

DyckPath double_path(const DyckPath& path) {
  const Slope target(path.slope().a(), path.slope().a() + path.slope().b());
  std::string word;
  for (char step : path.word()) word += step == 'N' ? "NE" : "E";
  return validate_path(target, word_to_runs(target, word));
}

DyckPath rot_prime(const DyckPath& path) {
  const Slope& slope = path.slope();
  const auto& runs = path.runs();
  if (runs.front() == slope.a()) return path;
  if (runs.size() < 2 || runs[1] == 0) {
    std::vector<int> moved{runs.front()};
    moved.insert(moved.end(), runs.begin() + 2, runs.end());
    moved.push_back(0);
    return validate_path(slope, std::move(moved));
  }
  // First horizontal run has length one, so (1, r1) is the westernmost valley.
  const int r1 = runs.front();
  const Laser laser = laser_endpoint(path, {1, r1});
  const std::string word = path.word();
  // Step index of the east step leaving x = laser.second.
  std::size_t hit = 0;
  for (int east = 0; hit < word.size(); ++hit) {
    if (word[hit] == 'E' && east++ == laser.second) break;
  }
  const std::size_t valley = static_cast<std::size_t>(r1) + 1;
  std::string out = word.substr(valley, hit - valley);
  out += std::string(static_cast<std::size_t>(r1), 'N');
  out += word.substr(hit);
  out += 'E';
  return validate_path(slope, word_to_runs(slope, out));
}

long RankAssignment::rank_of(const SetPartition::Block& block) const {
  const int index = partition.block_index_of(block.front());
  if (partition.blocks()[static_cast<std::size_t>(index)] != block) {
    throw Error(ErrorCode::InvalidArgument, "not a block of the partition");
  }
  return ranks[static_cast<std::size_t>(index)];
}

long RankAssignment::total() const { return std::accumulate(ranks.begin(), ranks.end(), 0L); }

RankAssignment rank_assignment(const SetPartition& p, const Slope& slope) {
  require_ground_set(p, slope);
  require_noncrossing(p);
  const auto& blocks = p.blocks();
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  auto width = [&](std::size_t i) { return blocks[i].back() - blocks[i].front(); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return width(x) < width(y); });

  std::vector<long> ranks(blocks.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    const int lo = blocks[i].front();
    const int hi = blocks[i].back();
    long inner = 0;
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const auto& other = blocks[order[prev]];
      if (lo <= other.front() && other.back() <= hi) inner += ranks[order[prev]];
    }
    ranks[i] = ceil_div(static_cast<long>(hi - lo + 1) * slope.a(), slope.b()) - inner;
  }
  return RankAssignment{slope, p, std::move(ranks)};
}

RankSequence rank_sequence(const SetPartition& p, const Slope& slope) {
  const RankAssignment ra = rank_assignment(p, slope);
  RankSequence rs{slope, std::vector<int>(static_cast<std::size_t>(slope.b() - 1), 0)};
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const auto& block = p.blocks()[i];
    if (ra.ranks[i] < 0) throw NegativeRankError(block, ra.ranks[i]);
    rs.entries[static_cast<std::size_t>(block.front() - 1)] = static_cast<int>(ra.ranks[i]);
  }
  return rs;
}

DyckPath path_from_rank_sequence(const RankSequence& rs) { return validate_path(rs.slope, rs.entries); }

bool is_member_reconstruction(const SetPartition& p, const Slope& slope) {
  require_ground_set(p, slope);
  if (!is_noncrossing(p)) return false;
  const RankAssignment ra = rank_assignment(p, slope);
  if (std::any_of(ra.ranks.begin(), ra.ranks.end(), [](long r) { return r <= 0; })) return false;
  const RankSequence rs = rank_sequence(p, slope);
  if (!check_runs(slope, rs.entries).ok()) return false;
  return partition_of_path(path_from_rank_sequence(rs)) == p;
}

bool is_member_kreweras(const SetPartition& p, const Slope& slope) {
  require_ground_set(p, slope);
  if (!is_noncrossing(p)) return false;
  const long a = slope.a();
  const long b = slope.b();
  const SetPartition complement = kreweras(p);
  for (const auto& block : complement.blocks()) {
    const long top = block.back();
    for (std::size_t x = 0; x + 1 < block.size(); ++x) {
      const long i = block[x];
      if (!is_admissible_gap(slope, static_cast<int>(top - i))) return false;
      for (std::size_t y = x + 1; y + 1 < block.size(); ++y) {
        const long j = block[y];
        const long lhs = ceil_div((top - i) * a, b) - ceil_div((top - j) * a, b);
        if (b * lhs <= (j - i) * a) return false;
      }
    }
  }
  return true;
}

bool has_valid_ranking(const SetPartition& p, const Slope& slope) {
  const RankAssignment ra = rank_assignment(p, slope);
  if (std::any_of(ra.ranks.begin(), ra.ranks.end(), [](long r) { return r <= 0; })) return false;
  return ra.total() == slope.a();
}

bool is_member_rank_orbit(const SetPartition& p, const Slope& slope) {
  require_ground_set(p, slope);
  if (!is_noncrossing(p)) return false;
  for (int k = 0; k < slope.b() - 1; ++k) {
    if (!has_valid_ranking(rotate(p, k), slope)) return false;
  }
  return true;
}

namespace {

template <class F>
std::vector<SetPartition> images(const Slope& slope, F&& f) {
  std::vector<SetPartition> out;
  for (const DyckPath& path : enumerate_paths(slope)) out.push_back(f(path));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<SetPartition> enumerate_nc(const Slope& slope) { return images(slope, partition_of_path); }

std::vector<SetPartition> enumerate_hnc(const Slope& slope) {
  return images(slope, homogeneous_partition_of_path);
}

}  // namespace ratcat
