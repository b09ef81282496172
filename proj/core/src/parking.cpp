#include "ratcat/parking.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "ratcat/errors.hpp"
#include "ratcat/parallel.hpp"
#include "ratcat/rational_nc.hpp"

namespace ratcat {

Permutation identity_permutation(int n) {
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

bool is_permutation(const Permutation& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[static_cast<std::size_t>(y[i] - 1)];
  return out;
}

std::vector<int> cycle_type(const Permutation& w) {
  std::vector<char> seen(w.size(), 0);
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Permutation permutation_of_type(const std::vector<int>& lengths) {
  Permutation w;
  int base = 0;
  for (int len : lengths) {
    for (int t = 0; t < len; ++t) w.push_back(base + (t + 1) % len + 1);
    base += len;
  }
  return w;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      go(rest - part, part);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

void check_parking_function(const ParkingFunction& pf) {
  const int a = pf.slope.a();
  if (pf.labels.size() != pf.partition.block_count()) {
    throw Error(ErrorCode::InvalidArgument, "one label set per block required");
  }
  if (!is_member(pf.partition, pf.slope)) throw Error(ErrorCode::InvalidArgument, "partition is not in NC(a,b)");
  const RankAssignment ra = rank_assignment(pf.partition, pf.slope);
  std::vector<char> seen(static_cast<std::size_t>(a) + 1, 0);
  for (std::size_t i = 0; i < pf.labels.size(); ++i) {
    if (static_cast<long>(pf.labels[i].size()) != ra.ranks[i]) {
      throw Error(ErrorCode::InvalidArgument, "label set size differs from block rank");
    }
    for (int x : pf.labels[i]) {
      if (x < 1 || x > a || seen[static_cast<std::size_t>(x)]) throw Error(ErrorCode::InvalidArgument, "labels must partition [a]");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
}

namespace {

// All ways to hand out [a] to slots of the given sizes, in order.
void distribute(const std::vector<long>& sizes, std::size_t slot, std::vector<int>& owner, int a,
                std::vector<std::vector<std::vector<int>>>& out) {
  if (slot == sizes.size()) {
    std::vector<std::vector<int>> labels(sizes.size());
    for (int x = 1; x <= a; ++x) labels[static_cast<std::size_t>(owner[static_cast<std::size_t>(x - 1)])].push_back(x);
    out.push_back(std::move(labels));
    return;
  }
  std::vector<int> free;
  for (int x = 1; x <= a; ++x)
    if (owner[static_cast<std::size_t>(x - 1)] < 0) free.push_back(x);
  const auto need = static_cast<std::size_t>(sizes[slot]);
  std::vector<char> pick(free.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), 1);
  do {
    for (std::size_t t = 0; t < free.size(); ++t)
      if (pick[t]) owner[static_cast<std::size_t>(free[t] - 1)] = static_cast<int>(slot);
    distribute(sizes, slot + 1, owner, a, out);
    for (std::size_t t = 0; t < free.size(); ++t)
      if (pick[t]) owner[static_cast<std::size_t>(free[t] - 1)] = -1;
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

std::vector<ParkingFunction> enumerate_park(const Slope& slope) {
  std::vector<ParkingFunction> out;
  for (const SetPartition& p : enumerate_nc(slope)) {
    const RankAssignment ra = rank_assignment(p, slope);
    std::vector<std::vector<std::vector<int>>> choices;
    std::vector<int> owner(static_cast<std::size_t>(slope.a()), -1);
    distribute(ra.ranks, 0, owner, slope.a(), choices);
    for (auto& labels : choices) out.push_back(ParkingFunction{slope, p, std::move(labels)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParkingFunction act(const GroupElement& g, const ParkingFunction& pf) {
  const int n = pf.partition.size();
  if (static_cast<int>(g.w.size()) != pf.slope.a()) throw Error(ErrorCode::InvalidArgument, "permutation must act on [a]");
  std::vector<int> owner(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> moved_labels;
  std::vector<SetPartition::Block> blocks;
  for (std::size_t i = 0; i < pf.partition.block_count(); ++i) {
    blocks.push_back(rotate_block(pf.partition.blocks()[i], n, g.d));
    std::vector<int> labels;
    for (int x : pf.labels[i]) labels.push_back(g.w[static_cast<std::size_t>(x - 1)]);
    std::sort(labels.begin(), labels.end());
    moved_labels.push_back(std::move(labels));
  }
  SetPartition image(n, blocks);
  std::vector<std::vector<int>> aligned(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    aligned[static_cast<std::size_t>(image.block_index_of(blocks[i].front()))] = std::move(moved_labels[i]);
  }
  return ParkingFunction{pf.slope, std::move(image), std::move(aligned)};
}

long character(const std::vector<ParkingFunction>& park, const Permutation& w, int d) {
  std::atomic<long> fixed{0};
  const GroupElement g{w, d};
  parallel_for(park.size(), [&](std::size_t i) {
    if (act(g, park[i]) == park[i]) fixed.fetch_add(1, std::memory_order_relaxed);
  });
  return fixed.load();
}

long character(const Slope& slope, const Permutation& w, int d) { return character(enumerate_park(slope), w, d); }

int multiplicity(const Slope& slope, const Permutation& w, int d) {
  const int n = slope.b() - 1;
  const int q = n / std::gcd(((d % n) + n) % n, n);
  const auto cycles = cycle_type(w);
  if (q == 1) return static_cast<int>(cycles.size()) - 1;
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [q](int len) { return len % q == 0; }));
}

mpz_class predicted_character(const Slope& slope, const Permutation& w, int d) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(slope.b()),
                static_cast<unsigned long>(multiplicity(slope, w, d)));
  return out;
}

std::vector<int> to_slope_word(const ParkingFunction& pf) {
  std::vector<int> word(static_cast<std::size_t>(pf.slope.a()), 0);
  for (std::size_t i = 0; i < pf.labels.size(); ++i)
    for (int x : pf.labels[i]) word[static_cast<std::size_t>(x - 1)] = pf.partition.blocks()[i].front();
  return word;
}

bool is_slope_parking_word(const Slope& slope, const std::vector<int>& word) {
  if (word.size() != static_cast<std::size_t>(slope.a())) return false;
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) return false;
    if (static_cast<long>(slope.a()) * (sorted[i] - 1) > static_cast<long>(slope.b()) * static_cast<long>(i)) return false;
  }
  return true;
}

ParkingFunction from_slope_word(const Slope& slope, const std::vector<int>& word) {
  if (!is_slope_parking_word(slope, word)) throw Error(ErrorCode::NotParkingWord, "not a rational-slope parking word");
  RankSequence rs{slope, std::vector<int>(static_cast<std::size_t>(slope.b() - 1), 0)};
  for (int p : word) {
    if (p > slope.b() - 1) throw Error(ErrorCode::NotParkingWord, "entry exceeds b-1");
    ++rs.entries[static_cast<std::size_t>(p - 1)];
  }
  if (!check_runs(slope, rs.entries).ok()) throw Error(ErrorCode::NotParkingWord, "multiplicities do not form a Dyck path");
  const SetPartition p = partition_of_path(path_from_rank_sequence(rs));
  std::vector<std::vector<int>> labels(p.block_count());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int bi = p.block_index_of(word[i]);
    if (p.blocks()[static_cast<std::size_t>(bi)].front() != word[i]) {
      throw Error(ErrorCode::NotParkingWord, "entry " + std::to_string(word[i]) + " is not a block minimum");
    }
    labels[static_cast<std::size_t>(bi)].push_back(static_cast<int>(i + 1));
  }
  ParkingFunction pf{slope, p, std::move(labels)};
  try {
    check_parking_function(pf);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotParkingWord, e.what());
  }
  return pf;
}

namespace {

SetPartition::Block image_of(const SetPartition::Block& block, const Permutation& w) {
  SetPartition::Block out;
  for (int x : block) out.push_back(w[static_cast<std::size_t>(x - 1)]);
  std::sort(out.begin(), out.end());
  return out;
}

struct OrbitShape {
  bool stable = true;
  int stable_blocks = 0;
  int free_orbits = 0;  // orbits of size q
  bool admissible = true;
};

OrbitShape orbit_shape(const SetPartition& sigma, const Permutation& w, int q) {
  OrbitShape s;
  std::vector<char> done(sigma.block_count(), 0);
  for (std::size_t i = 0; i < sigma.block_count(); ++i) {
    if (done[i]) continue;
    int size = 0;
    SetPartition::Block cur = sigma.blocks()[i];
    do {
      const int j = sigma.block_index_of(cur.front());
      if (sigma.blocks()[static_cast<std::size_t>(j)] != cur) {
        s.stable = false;
        s.admissible = false;
        return s;
      }
      done[static_cast<std::size_t>(j)] = 1;
      ++size;
      cur = image_of(cur, w);
    } while (cur != sigma.blocks()[i]);
    if (size == 1) {
      ++s.stable_blocks;
    } else if (size == q) {
      ++s.free_orbits;
    } else {
      s.admissible = false;
    }
  }
  if (s.stable_blocks > 1) s.admissible = false;
  return s;
}

}  // namespace

std::vector<SetPartition> admissible_partitions(const Permutation& w, int q) {
  std::vector<SetPartition> out;
  for (SetPartition& sigma : enumerate_set_partitions(static_cast<int>(w.size())))
    if (orbit_shape(sigma, w, q).admissible) out.push_back(std::move(sigma));
  return out;
}

TwelvefoldSides twelvefold(const Slope& slope, const Permutation& w, int d) {
  const int n = slope.b() - 1;
  const int q = n / std::gcd(((d % n) + n) % n, n);
  if (q < 2) throw Error(ErrorCode::HypothesisViolated, "needs q >= 2");
  TwelvefoldSides sides;
  const auto cycles = cycle_type(w);
  const auto r = std::count_if(cycles.begin(), cycles.end(), [q](int len) { return len % q == 0; });
  mpz_ui_pow_ui(sides.power.get_mpz_t(), static_cast<unsigned long>(slope.b()), static_cast<unsigned long>(r));
  sides.sum = 0;
  for (const SetPartition& sigma : admissible_partitions(w, q)) {
    const OrbitShape s = orbit_shape(sigma, w, q);
    mpz_class term = 1;
    for (int t = 0; t < s.free_orbits; ++t) term *= slope.b() - 1 - t * q;
    sides.sum += term;
  }
  return sides;
}

}  // namespace ratcat
