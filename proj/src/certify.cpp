#include "tvp/certify.hpp"

#include <algorithm>
#include <sstream>

#include "tvp/error.hpp"
#include "tvp/minnorm.hpp"

namespace tvp {

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string VerificationReport::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (valid ? "VALID" : "INVALID") << '\n';
  return os.str();
}

namespace {

class ReportBuilder {
public:
  bool add(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back(Check{std::move(name), passed, std::move(detail)});
    return passed;
  }

  VerificationReport finish() {
    report_.valid = !report_.checks.empty() &&
                    std::all_of(report_.checks.begin(), report_.checks.end(), [](const Check& c) { return c.passed; });
    return std::move(report_);
  }

private:
  VerificationReport report_;
};

/// Advances a restricted growth string (label[i] <= 1 + max(label[0..i)),
/// labels < r); false after the last one.
bool next_growth_string(std::vector<std::size_t>& label, std::vector<std::size_t>& prefix_max, std::size_t r) {
  for (std::size_t i = label.size(); i-- > 1;) {
    if (label[i] < std::min(prefix_max[i - 1] + 1, r - 1)) {
      ++label[i];
      prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
      for (std::size_t k = i + 1; k < label.size(); ++k) {
        label[k] = 0;
        prefix_max[k] = prefix_max[i];
      }
      return true;
    }
  }
  return false;
}

std::string group_label(std::size_t j) { return "group " + std::to_string(j + 1); }

VerificationReport verify_groups(std::span<const Point> points, const Partition& groups,
                                 const std::vector<Rational>& weights, const Point& common_point,
                                 std::size_t expected_groups) {
  ReportBuilder b;

  if (points.empty()) {
    b.add("input", false, "no points");
    return b.finish();
  }
  const std::size_t d = points.front().dim();
  const std::size_t n = points.size();
  bool dims_ok = std::all_of(points.begin(), points.end(), [d](const Point& p) { return p.dim() == d; });
  if (!b.add("input", dims_ok, dims_ok ? std::to_string(n) + " points in R^" + std::to_string(d)
                                       : "points differ in dimension")) {
    return b.finish();
  }

  bool shape_ok = true;
  std::string shape_detail;
  if (weights.size() != n) {
    shape_ok = false;
    shape_detail = std::to_string(weights.size()) + " weights for " + std::to_string(n) + " points";
  } else if (common_point.dim() != d) {
    shape_ok = false;
    shape_detail = "common point has dimension " + std::to_string(common_point.dim());
  } else if (groups.size() != expected_groups) {
    shape_ok = false;
    shape_detail = std::to_string(groups.size()) + " groups, expected " + std::to_string(expected_groups);
  }
  if (!b.add("shape", shape_ok, shape_detail)) return b.finish();

  std::vector<std::size_t> hits(n, 0);
  bool range_ok = true;
  for (const auto& g : groups) {
    for (auto i : g) {
      if (i >= n) {
        range_ok = false;
      } else {
        ++hits[i];
      }
    }
  }
  if (!b.add("indices in range", range_ok, range_ok ? "" : "group index outside [0, N)")) return b.finish();

  auto overlap = std::find_if(hits.begin(), hits.end(), [](std::size_t h) { return h > 1; });
  b.add("disjoint", overlap == hits.end(),
        overlap == hits.end() ? "" : "index " + std::to_string(overlap - hits.begin()) + " appears in several groups");
  auto missing = std::find(hits.begin(), hits.end(), std::size_t{0});
  b.add("covers [N]", missing == hits.end(),
        missing == hits.end() ? "" : "index " + std::to_string(missing - hits.begin()) + " is in no group");

  for (std::size_t j = 0; j < groups.size(); ++j) {
    b.add(group_label(j) + " nonempty", !groups[j].empty());
  }

  auto negative = std::find_if(weights.begin(), weights.end(), [](const Rational& w) { return w.sign() < 0; });
  b.add("nonnegative weights", negative == weights.end(),
        negative == weights.end() ? "" : "weight " + std::to_string(negative - weights.begin()) + " is negative");

  for (std::size_t j = 0; j < groups.size(); ++j) {
    Rational total;
    for (auto i : groups[j]) total += weights[i];
    b.add(group_label(j) + " weight sum", total == Rational(1), "sum = " + total.str());
  }

  for (std::size_t j = 0; j < groups.size(); ++j) {
    Vector s = Vector::zeros(d);
    for (auto i : groups[j]) s.add_scaled(weights[i], points[i].coords);
    bool eq = s == common_point.coords;
    b.add(group_label(j) + " combination equals common point", eq, eq ? "" : "combination = " + s.str());
  }

  for (std::size_t j = 0; j < groups.size(); ++j) {
    std::vector<Vector> hull;
    for (auto i : groups[j]) hull.push_back(points[i].coords);
    bool inside = !hull.empty() && point_in_hull(common_point.coords, hull).has_value();
    b.add(group_label(j) + " hull contains common point", inside);
  }

  return b.finish();
}

}  // namespace

VerificationReport verify_radon(std::span<const Point> points, const RadonCertificate& cert) {
  Partition groups{cert.group1, cert.group2};
  return verify_groups(points, groups, cert.weights, cert.common_point, 2);
}

VerificationReport verify_tverberg(std::span<const Point> points, const PartitionCertificate& cert) {
  if (cert.r < 2) {
    ReportBuilder b;
    b.add("shape", false, "r must be at least 2");
    return b.finish();
  }
  return verify_groups(points, cert.groups, cert.weights, cert.common_point, cert.r);
}

Partition canonical_partition(Partition p) {
  for (auto& g : p) std::sort(g.begin(), g.end());
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return p;
}

std::string format_partition(const Partition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) os << ',';
    os << '{';
    for (std::size_t k = 0; k < p[j].size(); ++k) {
      if (k) os << ',';
      os << p[j][k];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::vector<Partition> brute_force_tverberg(std::span<const Point> points, std::size_t r, unsigned long long cap) {
  if (r < 2) throw SizeError("brute_force_tverberg: r must be at least 2");
  if (points.empty()) throw SizeError("brute_force_tverberg: no points");
  const std::size_t n = points.size();

  unsigned long long assignments = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (assignments > cap / r) {
      throw CapExceededError(cap, "brute_force_tverberg: r^N = " + std::to_string(r) + "^" + std::to_string(n) +
                                      " exceeds the enumeration cap " + std::to_string(cap));
    }
    assignments *= r;
  }
  if (assignments > cap) {
    throw CapExceededError(cap, "brute_force_tverberg: r^N exceeds the enumeration cap " + std::to_string(cap));
  }

  const std::size_t d = points.front().dim();
  std::vector<LiftedPoint> lifted;
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].dim() != d) throw DimensionError("brute_force_tverberg: points differ in dimension");
    lifted.push_back(lift(points[i]));
  }
  std::vector<std::vector<Vector>> phi;
  phi.reserve(n);
  for (const auto& p : lifted) phi.push_back(phi_class(p, r));

  const Vector origin = Vector::zeros((d + 1) * (r - 1));
  std::vector<Partition> found;

  std::vector<std::size_t> label(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  auto visit = [&]() {
    if (prefix_max[n - 1] + 1 != r) return;
    std::vector<Vector> chosen;
    chosen.reserve(n);
    for (std::size_t i = 0; i < n; ++i) chosen.push_back(phi[i][label[i]]);
    if (!point_in_hull(origin, chosen)) return;
    Partition p(r);
    for (std::size_t i = 0; i < n; ++i) p[label[i]].push_back(i);
    found.push_back(canonical_partition(std::move(p)));
  };

  do {
    visit();
  } while (next_growth_string(label, prefix_max, r));

  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace tvp
