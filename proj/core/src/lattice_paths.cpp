#include "ratcat/lattice_paths.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ratcat/errors.hpp"

namespace ratcat {

Slope::Slope(int a, int b) : a_(a), b_(b) {
  if (a <= 0 || b <= 0 || std::gcd(a, b) != 1) {
    std::ostringstream os;
    os << "(" << a << "," << b << ") is not a pair of coprime positive integers";
    throw Error(ErrorCode::InvalidSlope, os.str());
  }
}

long Slope::min_height(long x) const noexcept {
  const long num = static_cast<long>(a_) * x;
  return num >= 0 ? (num + b_ - 1) / b_ : -((-num) / b_);
}

DyckPath::DyckPath(Slope slope, std::vector<int> runs)
    : slope_(slope), runs_(std::move(runs)), prefix_(runs_.size() + 2, 0) {
  for (std::size_t x = 0; x < runs_.size(); ++x) prefix_[x + 1] = prefix_[x] + runs_[x];
  prefix_.back() = prefix_[runs_.size()];
}

int DyckPath::prefix_height(int x) const {
  if (x < 0 || x > slope_.b()) throw Error(ErrorCode::InvalidArgument, "column out of range");
  return prefix_[static_cast<std::size_t>(x)];
}

std::string DyckPath::word() const { return runs_to_word(runs_); }

PathCheck check_runs(const Slope& slope, std::span<const int> runs) {
  const int b = slope.b();
  if (static_cast<int>(runs.size()) != b - 1) return {PathFault::WrongLength, 0};
  long total = 0;
  for (int r : runs) total += r;
  if (total != slope.a()) return {PathFault::WrongTotal, 0};
  long height = 0;
  for (int x = 1; x <= b - 1; ++x) {
    height += runs[static_cast<std::size_t>(x - 1)];
    if (height < slope.min_height(x)) return {PathFault::BelowDiagonal, x};
  }
  return {};
}

DyckPath validate_path(const Slope& slope, std::vector<int> runs) {
  if (slope.a() >= slope.b()) {
    throw Error(ErrorCode::InvalidSlope, "run-vector paths need a < b");
  }
  if (std::any_of(runs.begin(), runs.end(), [](int r) { return r < 0; })) {
    throw Error(ErrorCode::InvalidSequence, "negative run length");
  }
  const PathCheck check = check_runs(slope, runs);
  switch (check.fault) {
    case PathFault::None:
      break;
    case PathFault::WrongLength:
      throw PathError(ErrorCode::WrongLength, 0,
                      "expected " + std::to_string(slope.b() - 1) + " runs, got " +
                          std::to_string(runs.size()));
    case PathFault::WrongTotal:
      throw PathError(ErrorCode::WrongTotal, 0,
                      "runs must sum to " + std::to_string(slope.a()));
    case PathFault::BelowDiagonal:
      throw PathError(ErrorCode::BelowDiagonal, check.x,
                      "path dips below the diagonal at x=" + std::to_string(check.x));
  }
  return DyckPath(slope, std::move(runs));
}

namespace {

void extend_paths(const Slope& slope, std::vector<int>& runs, std::size_t x, int height,
                  std::vector<DyckPath>& out) {
  const int a = slope.a();
  const std::size_t len = runs.size();
  if (x + 1 == len) {
    runs[x] = a - height;
    out.push_back(validate_path(slope, runs));
    return;
  }
  const int lowest = std::max<int>(0, static_cast<int>(slope.min_height(static_cast<long>(x) + 1)) - height);
  for (int r = a - height; r >= lowest; --r) {
    runs[x] = r;
    extend_paths(slope, runs, x + 1, height + r, out);
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(const Slope& slope) {
  if (slope.a() >= slope.b()) throw Error(ErrorCode::InvalidSlope, "enumeration needs a < b");
  std::vector<DyckPath> out;
  std::vector<int> runs(static_cast<std::size_t>(slope.b() - 1), 0);
  extend_paths(slope, runs, 0, 0, out);
  return out;
}

std::vector<LatticePoint> valleys(const DyckPath& path) {
  std::vector<LatticePoint> out;
  const auto& runs = path.runs();
  for (std::size_t x = 1; x < runs.size(); ++x) {
    if (runs[x] > 0) {
      const int xi = static_cast<int>(x);
      out.push_back({xi, path.prefix_height(xi)});
    }
  }
  return out;
}

std::vector<int> vertical_run_sizes(const DyckPath& path) {
  std::vector<int> out;
  for (int r : path.runs())
    if (r > 0) out.push_back(r);
  return out;
}

Laser laser_endpoint(const DyckPath& path, LatticePoint valley) {
  const Slope& s = path.slope();
  const int b = s.b();
  if (valley.x < 1 || valley.x > b - 2 || path.runs()[static_cast<std::size_t>(valley.x)] == 0 ||
      path.prefix_height(valley.x) != valley.y) {
    throw Error(ErrorCode::InvalidArgument, "point is not a valley of the path");
  }
  // The ray y = valley.y + (x - valley.x) * a / b leaves the region under the
  // path through the first east step [j, j+1] whose height it exceeds at x = j+1.
  const long a = s.a();
  for (int j = valley.x; j <= b - 1; ++j) {
    const long step_height = path.prefix_height(j + 1);
    if (static_cast<long>(b) * valley.y + a * (j + 1 - valley.x) > static_cast<long>(b) * step_height) {
      return {valley.x, j};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "laser never lands; path is not above the diagonal");
}

LaserSet laser_set(const DyckPath& path) {
  LaserSet out;
  for (const LatticePoint& v : valleys(path)) out.insert(laser_endpoint(path, v));
  return out;
}

bool is_admissible_gap(const Slope& slope, int gap) {
  for (long r = 1; r < slope.a(); ++r) {
    if (r * slope.b() / slope.a() == gap) return true;
  }
  return false;
}

LaserSet admissible_lasers(const Slope& slope) {
  LaserSet out;
  const int n = slope.b() - 1;
  for (long r = 1; r < slope.a(); ++r) {
    const int gap = static_cast<int>(r * slope.b() / slope.a());
    for (int i = 1; i + gap <= n; ++i) out.insert({i, i + gap});
  }
  return out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {
mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}
}  // namespace

mpz_class catalan(const Slope& slope) {
  const long n = slope.a() + slope.b();
  mpz_class out = binomial(n, slope.a());
  out /= n;
  return out;
}

mpz_class narayana(const Slope& slope, int k) {
  if (k < 1 || k > slope.a()) {
    throw Error(ErrorCode::InvalidArgument, "Narayana index must lie in 1..a");
  }
  mpz_class out = binomial(slope.a(), k) * binomial(slope.b() - 1, k - 1);
  out /= slope.a();
  return out;
}

mpz_class kreweras(const Slope& slope, std::span<const int> r) {
  if (static_cast<int>(r.size()) != slope.a()) {
    throw Error(ErrorCode::InvalidVector, "Kreweras vector must have length a");
  }
  long weighted = 0;
  long k = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) throw Error(ErrorCode::InvalidVector, "negative entry");
    weighted += static_cast<long>(i + 1) * r[i];
    k += r[i];
  }
  if (weighted != slope.a()) {
    throw Error(ErrorCode::InvalidVector, "sum of i*r_i must equal a");
  }
  mpz_class den = factorial(slope.b() - k);
  for (int ri : r) den *= factorial(ri);
  mpz_class out = factorial(slope.b() - 1);
  out /= den;
  return out;
}

namespace {
void partitions_into(int remaining, int max_part, std::vector<int>& r,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(r);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++r[static_cast<std::size_t>(part - 1)];
    partitions_into(remaining - part, part, r, out);
    --r[static_cast<std::size_t>(part - 1)];
  }
}
}  // namespace

std::vector<std::vector<int>> kreweras_vectors(int a) {
  std::vector<std::vector<int>> out;
  if (a <= 0) return out;
  std::vector<int> r(static_cast<std::size_t>(a), 0);
  partitions_into(a, a, r, out);
  return out;
}

std::string runs_to_word(std::span<const int> runs) {
  std::string w;
  for (int r : runs) {
    w.append(static_cast<std::size_t>(r), 'N');
    w.push_back('E');
  }
  w.push_back('E');
  return w;
}

std::vector<int> word_to_runs(const Slope& slope, std::string_view word) {
  std::vector<int> runs(static_cast<std::size_t>(slope.b() - 1), 0);
  int x = 0;
  int north = 0;
  for (char c : word) {
    if (c == 'N') {
      if (x >= slope.b() - 1) throw Error(ErrorCode::InvalidSequence, "north step at x >= b-1");
      ++runs[static_cast<std::size_t>(x)];
      ++north;
    } else if (c == 'E') {
      ++x;
    } else {
      throw Error(ErrorCode::InvalidSequence, "step words use only N and E");
    }
  }
  if (x != slope.b() || north != slope.a()) {
    throw Error(ErrorCode::InvalidSequence, "word does not end at (b,a)");
  }
  return runs;
}

}  // namespace ratcat
