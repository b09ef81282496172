#pragma once

// Rational a,b-Dyck paths in run-vector form, their valleys and lasers, and
// the closed-form Catalan/Narayana/Kreweras counts.

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ratcat {

// A pair of coprime positive integers. Everything touching NC(a,b) further
// requires a < b; that is checked where it matters, not here.
class Slope {
 public:
  Slope(int a, int b);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

  // ceil(a*x/b), the least admissible height of a Dyck path at column x.
  long min_height(long x) const noexcept;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  int a_;
  int b_;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// (i, j): fired from the valley at x = i, landing inside the east step whose
// west end has x = j.
using Laser = std::pair<int, int>;
using LaserSet = std::set<Laser>;

enum class PathFault { None, WrongLength, WrongTotal, BelowDiagonal };

struct PathCheck {
  PathFault fault = PathFault::None;
  int x = 0;  // first offending column for BelowDiagonal
  bool ok() const noexcept { return fault == PathFault::None; }
};

// An a,b-Dyck path stored as its vertical runs: runs()[x] is the number of
// north steps taken at x-coordinate x, for x = 0..b-2. The step word is
// N^{r1} E N^{r2} E ... N^{r_{b-1}} E E.
class DyckPath {
 public:
  const Slope& slope() const noexcept { return slope_; }
  const std::vector<int>& runs() const noexcept { return runs_; }

  // Number of north steps at x-coordinates < x, for 0 <= x <= b. The east
  // step from x to x+1 sits at height prefix_height(x + 1).
  int prefix_height(int x) const;

  std::string word() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  friend DyckPath validate_path(const Slope&, std::vector<int>);
  DyckPath(Slope slope, std::vector<int> runs);

  Slope slope_;
  std::vector<int> runs_;
  std::vector<int> prefix_;
};

PathCheck check_runs(const Slope& slope, std::span<const int> runs);

// Throws PathError (WrongLength, WrongTotal, BelowDiagonal) or Error
// (InvalidSlope when a >= b, InvalidSequence for negative entries).
DyckPath validate_path(const Slope& slope, std::vector<int> runs);

// All a,b-Dyck paths, run vectors in descending lexicographic order
// (N^a E^b first).
std::vector<DyckPath> enumerate_paths(const Slope& slope);

// Interior valleys, west to east. The origin is never a valley.
std::vector<LatticePoint> valleys(const DyckPath& path);

std::vector<int> vertical_run_sizes(const DyckPath& path);

Laser laser_endpoint(const DyckPath& path, LatticePoint valley);
LaserSet laser_set(const DyckPath& path);

// A(a,b): all (i, j) with 1 <= i < j <= b-1 and j - i = floor(r*b/a) for some
// 1 <= r <= a-1.
LaserSet admissible_lasers(const Slope& slope);
bool is_admissible_gap(const Slope& slope, int gap);

mpz_class catalan(const Slope& slope);
mpz_class narayana(const Slope& slope, int k);
// r[i-1] = number of vertical runs of size i; requires sum i*r_i = a.
mpz_class kreweras(const Slope& slope, std::span<const int> r);

// All vectors r with sum i*r_i = a, one per integer partition of a.
std::vector<std::vector<int>> kreweras_vectors(int a);

std::string runs_to_word(std::span<const int> runs);
// Inverse of runs_to_word for a word from (0,0) to (b,a) whose last two
// steps are east; throws Error(InvalidSequence) otherwise. No diagonal check.
std::vector<int> word_to_runs(const Slope& slope, std::string_view word);

mpz_class binomial(long n, long k);

}  // namespace ratcat
