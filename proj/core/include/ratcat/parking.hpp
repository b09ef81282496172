#pragma once

#include <vector>

#include <gmpxx.h>

#include "ratcat/lattice_paths.hpp"
#include "ratcat/set_partition.hpp"

namespace ratcat {

// A permutation of [n] in one-line notation: w[i-1] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
bool is_permutation(const Permutation& w);
// (x * y)(i) = x(y(i)).
Permutation compose(const Permutation& x, const Permutation& y);
// Cycle lengths, descending.
std::vector<int> cycle_type(const Permutation& w);
// A permutation with the given cycle lengths, cycles on consecutive values.
Permutation permutation_of_type(const std::vector<int>& lengths);
// Integer partitions of n, each descending, in reverse lexicographic order.
std::vector<std::vector<int>> integer_partitions(int n);

struct ParkingFunction {
  Slope slope;
  SetPartition partition;                // a member of NC(a,b)
  std::vector<std::vector<int>> labels;  // aligned with partition.blocks(), each sorted

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
};

struct GroupElement {
  Permutation w;
  int d = 0;
};

// Throws InvalidArgument when labels are not rank-sized or do not cover [a],
// or when the partition is not a member.
void check_parking_function(const ParkingFunction& pf);

std::vector<ParkingFunction> enumerate_park(const Slope& slope);

// Rotate d times, each block keeping its labels, then relabel through w.
ParkingFunction act(const GroupElement& g, const ParkingFunction& pf);

// Brute fixed-point count over enumerate_park.
long character(const Slope& slope, const Permutation& w, int d);
long character(const std::vector<ParkingFunction>& park, const Permutation& w, int d);
mpz_class predicted_character(const Slope& slope, const Permutation& w, int d);
int multiplicity(const Slope& slope, const Permutation& w, int d);

// p_i = min of the block whose labels contain i.
std::vector<int> to_slope_word(const ParkingFunction& pf);
bool is_slope_parking_word(const Slope& slope, const std::vector<int>& word);
// Throws NotParkingWord.
ParkingFunction from_slope_word(const Slope& slope, const std::vector<int>& word);

std::vector<SetPartition> admissible_partitions(const Permutation& w, int q);

struct TwelvefoldSides {
  mpz_class power;  // b^{r_q(w)}
  mpz_class sum;    // sum over admissible partitions
  bool ok() const { return power == sum; }
};

TwelvefoldSides twelvefold(const Slope& slope, const Permutation& w, int d);
inline bool twelvefold_check(const Slope& slope, const Permutation& w, int d) {
  return twelvefold(slope, w, d).ok();
}

}  // namespace ratcat
