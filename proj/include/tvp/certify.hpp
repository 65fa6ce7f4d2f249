#pragma once

// Certificate checking and brute-force oracles. Nothing here touches solver
// state: verifiers recompute every claim from the points and the certificate.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tvp/radon.hpp"
#include "tvp/tverberg.hpp"

namespace tvp {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  bool valid = false;
  std::vector<Check> checks;

  /// First failing check, or nullptr.
  const Check* first_failure() const;
  /// One "PASS|FAIL name: detail" line per check, then the verdict.
  std::string render() const;
};

VerificationReport verify_radon(std::span<const Point> points, const RadonCertificate& cert);
VerificationReport verify_tverberg(std::span<const Point> points, const PartitionCertificate& cert);

using Partition = std::vector<std::vector<std::size_t>>;

inline constexpr unsigned long long kDefaultOracleCap = 1'000'000;

/// Every partition of the points into r nonempty groups whose hulls share a
/// point. Groups are sorted by smallest member and the list is sorted
/// lexicographically. Refuses with CapExceededError when r^N > cap.
std::vector<Partition> brute_force_tverberg(std::span<const Point> points, std::size_t r,
                                            unsigned long long cap = kDefaultOracleCap);

/// Sorts each group and orders groups by smallest member.
Partition canonical_partition(Partition p);

/// "{{0,4},{1,3},{2}}"
std::string format_partition(const Partition& p);

}  // namespace tvp
