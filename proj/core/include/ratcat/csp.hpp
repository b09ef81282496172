#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ratcat/lattice_paths.hpp"
#include "ratcat/qpolynomial.hpp"
#include "ratcat/set_partition.hpp"

namespace ratcat {

// A finite set [0, N) with a cyclic generator and a candidate polynomial.
struct CspInstance {
  std::string name;
  std::vector<int> generator;  // generator[x] is the image of x
  int order = 1;               // |C|
  QPolynomial polynomial;

  std::size_t size() const noexcept { return generator.size(); }
};

struct CspRow {
  int d = 0;
  int k = 1;                       // order of zeta^d
  std::optional<mpz_class> value;  // empty when the evaluation is not an integer
  long fixed = 0;
  bool ok = false;
};

struct CspReport {
  std::string name;
  std::vector<CspRow> rows;
  bool ok = false;
};

// Throws InvalidArgument when the generator is not a permutation of order
// dividing |C|.
CspReport csp_verify(const CspInstance& instance);

// Rotation on a list of partitions that must be closed under it.
CspInstance rotation_instance(std::string name, const std::vector<SetPartition>& elements, int order,
                              QPolynomial polynomial);

CspInstance catalan_instance(const Slope& slope);
CspInstance narayana_instance(const Slope& slope, int k);
CspInstance kreweras_instance(const Slope& slope, const std::vector<int>& r);
CspInstance homogeneous_instance(const Slope& slope);

}  // namespace ratcat
