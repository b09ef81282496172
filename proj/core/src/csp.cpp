#include "ratcat/csp.hpp"

#include <algorithm>
#include <numeric>

#include "ratcat/errors.hpp"
#include "ratcat/parallel.hpp"
#include "ratcat/q_analogs.hpp"
#include "ratcat/rational_nc.hpp"

namespace ratcat {

namespace {

std::string slope_tag(const Slope& s) { return "(" + std::to_string(s.a()) + "," + std::to_string(s.b()) + ")"; }

}  // namespace

CspReport csp_verify(const CspInstance& inst) {
  const std::size_t n = inst.size();
  if (inst.order < 1) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  std::vector<char> hit(n, 0);
  for (int image : inst.generator) {
    if (image < 0 || static_cast<std::size_t>(image) >= n || hit[static_cast<std::size_t>(image)]) {
      throw Error(ErrorCode::InvalidArgument, "generator is not a permutation");
    }
    hit[static_cast<std::size_t>(image)] = 1;
  }

  // Cycle lengths of the generator decide every fixed-point count.
  std::vector<int> cycle_len(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (cycle_len[x]) continue;
    std::vector<std::size_t> cycle{x};
    for (auto y = static_cast<std::size_t>(inst.generator[x]); y != x; y = static_cast<std::size_t>(inst.generator[y]))
      cycle.push_back(y);
    const int len = static_cast<int>(cycle.size());
    if (inst.order % len != 0) throw Error(ErrorCode::InvalidArgument, "generator order does not divide |C|");
    for (std::size_t y : cycle) cycle_len[y] = len;
  }

  CspReport report{inst.name, std::vector<CspRow>(static_cast<std::size_t>(inst.order)), true};
  parallel_for(report.rows.size(), [&](std::size_t i) {
    CspRow& row = report.rows[i];
    row.d = static_cast<int>(i);
    row.k = inst.order / std::gcd(row.d, inst.order);
    row.fixed = std::count_if(cycle_len.begin(), cycle_len.end(), [&](int len) { return row.d % len == 0; });
    try {
      row.value = eval_at_primitive_root(inst.polynomial, row.k);
      row.ok = *row.value == row.fixed;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonIntegerValue) throw;
      row.ok = false;
    }
  });
  report.ok = std::all_of(report.rows.begin(), report.rows.end(), [](const CspRow& r) { return r.ok; });
  return report;
}

CspInstance rotation_instance(std::string name, const std::vector<SetPartition>& elements, int order,
                              QPolynomial polynomial) {
  std::vector<SetPartition> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  CspInstance inst{std::move(name), std::vector<int>(sorted.size()), order, std::move(polynomial)};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const SetPartition image = rotate(sorted[i], 1);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), image);
    if (it == sorted.end() || *it != image) throw Error(ErrorCode::InvalidArgument, "set is not closed under rotation");
    inst.generator[i] = static_cast<int>(it - sorted.begin());
  }
  return inst;
}

CspInstance catalan_instance(const Slope& slope) {
  return rotation_instance("catalan" + slope_tag(slope), enumerate_nc(slope), slope.b() - 1, q_catalan(slope));
}

CspInstance narayana_instance(const Slope& slope, int k) {
  std::vector<SetPartition> xs;
  for (auto& p : enumerate_nc(slope))
    if (static_cast<int>(p.block_count()) == k) xs.push_back(std::move(p));
  return rotation_instance("narayana" + slope_tag(slope) + " k=" + std::to_string(k), xs, slope.b() - 1,
                           q_narayana(slope, k));
}

CspInstance kreweras_instance(const Slope& slope, const std::vector<int>& r) {
  std::vector<SetPartition> xs;
  for (auto& p : enumerate_nc(slope)) {
    std::vector<int> counts(static_cast<std::size_t>(slope.a()), 0);
    for (long rank : rank_assignment(p, slope).ranks) ++counts[static_cast<std::size_t>(rank - 1)];
    if (counts == r) xs.push_back(std::move(p));
  }
  std::string tag = "kreweras" + slope_tag(slope) + " r=";
  for (std::size_t i = 0; i < r.size(); ++i) tag += (i ? "," : "") + std::to_string(r[i]);
  return rotation_instance(tag, xs, slope.b() - 1, q_kreweras(slope, r));
}

CspInstance homogeneous_instance(const Slope& slope) {
  return rotation_instance("homogeneous" + slope_tag(slope), enumerate_hnc(slope), slope.a() + slope.b() - 1,
                           q_catalan(slope));
}

}  // namespace ratcat
