// tvp: exact Radon/Tverberg partitions from the command line.
//
// Exit codes follow tvp_status: 0 success, 2 parse error, 3 size error,
// 4 dimension error, 5 oracle cap exceeded, 6 i/o error, 7 hypothesis,
// 8 internal error, 64 usage. `verify` instead exits 0 (valid), 1 (invalid)
// or 2 (inputs could not be read).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tvp/tvp.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitUsage = 64;

struct PointsDeleter {
  void operator()(tvp_pointset* p) const { tvp_pointset_free(p); }
};
struct CertDeleter {
  void operator()(tvp_certificate* c) const { tvp_certificate_free(c); }
};
struct ReportDeleter {
  void operator()(tvp_report* r) const { tvp_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { tvp_string_free(s); }
};

using Points = std::unique_ptr<tvp_pointset, PointsDeleter>;
using Cert = std::unique_ptr<tvp_certificate, CertDeleter>;
using Report = std::unique_ptr<tvp_report, ReportDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

int report_error(tvp_status st, const std::string& context) {
  std::cerr << "tvp: " << context << ": " << tvp_status_name(st) << ": " << tvp_last_error() << "\n";
  return static_cast<int>(st);
}

tvp_format format_from(const std::string& name) {
  if (name == "csv") return TVP_FORMAT_CSV;
  if (name == "json") return TVP_FORMAT_JSON;
  return TVP_FORMAT_AUTO;
}

int load_points(const std::string& path, const std::string& format, Points& out) {
  tvp_pointset* raw = nullptr;
  tvp_status st = tvp_pointset_load(path.c_str(), format_from(format), &raw);
  if (st != TVP_OK) return report_error(st, path);
  out.reset(raw);
  return 0;
}

int emit(const tvp_certificate* cert, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    char* raw = nullptr;
    tvp_status st = tvp_certificate_render(cert, &raw);
    if (st != TVP_OK) return report_error(st, "render");
    String text(raw);
    std::cout << text.get();
    return 0;
  }
  tvp_status st = tvp_certificate_save(cert, out_path.c_str());
  if (st != TVP_OK) return report_error(st, out_path);
  return 0;
}

int cmd_radon(const std::string& input, const std::string& format, const std::string& out_path) {
  Points points;
  if (int rc = load_points(input, format, points)) return rc;
  tvp_certificate* raw = nullptr;
  tvp_status st = tvp_radon(points.get(), &raw);
  if (st != TVP_OK) return report_error(st, "radon");
  Cert cert(raw);
  return emit(cert.get(), out_path);
}

int cmd_tverberg(const std::string& input, const std::string& format, std::size_t r, const std::string& out_path,
                 const std::string& svg_path) {
  Points points;
  if (int rc = load_points(input, format, points)) return rc;
  tvp_certificate* raw = nullptr;
  tvp_status st = tvp_tverberg(points.get(), r, &raw);
  if (st != TVP_OK) return report_error(st, "tverberg");
  Cert cert(raw);
  if (int rc = emit(cert.get(), out_path)) return rc;

  if (!svg_path.empty()) {
    if (tvp_pointset_dimension(points.get()) != 2) {
      std::cerr << "tvp: warning: --svg ignored, drawing needs d = 2 (got d = "
                << tvp_pointset_dimension(points.get()) << ")\n";
    } else if ((st = tvp_certificate_save_svg(points.get(), cert.get(), svg_path.c_str())) != TVP_OK) {
      return report_error(st, svg_path);
    }
  }
  return 0;
}

int cmd_verify(const std::string& points_path, const std::string& cert_path, const std::string& format) {
  Points points;
  if (load_points(points_path, format, points)) return kExitMalformed;
  tvp_certificate* raw_cert = nullptr;
  if (tvp_status st = tvp_certificate_load(cert_path.c_str(), &raw_cert); st != TVP_OK) {
    report_error(st, cert_path);
    return kExitMalformed;
  }
  Cert cert(raw_cert);

  tvp_report* raw_report = nullptr;
  if (tvp_status st = tvp_verify(points.get(), cert.get(), &raw_report); st != TVP_OK) {
    report_error(st, "verify");
    return kExitMalformed;
  }
  Report report(raw_report);
  char* raw_text = nullptr;
  if (tvp_status st = tvp_report_render(report.get(), &raw_text); st != TVP_OK) return report_error(st, "verify");
  String text(raw_text);
  std::cout << text.get();
  return tvp_report_valid(report.get()) ? 0 : kExitInvalid;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("TVP_ORACLE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "tvp: warning: ignoring unparsable TVP_ORACLE_CAP=" << env << "\n";
    }
  }
  return 1'000'000;
}

int cmd_oracle(const std::string& input, const std::string& format, std::size_t r, std::optional<std::uint64_t> cap) {
  Points points;
  if (int rc = load_points(input, format, points)) return rc;
  char* raw = nullptr;
  std::size_t count = 0;
  tvp_status st = tvp_oracle(points.get(), r, cap.value_or(default_cap()), &raw, &count);
  if (st != TVP_OK) return report_error(st, "oracle");
  String text(raw);
  std::cout << text.get();
  std::cerr << count << " partition(s) with a common point\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Radon and Tverberg partitions with verifiable certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tvp_version()));

  std::string format = "auto";
  std::string input, out_path, svg_path, cert_path;
  std::size_t r = 0;
  std::optional<std::uint64_t> cap;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Point file format")->check(CLI::IsMember({"auto", "csv", "json"}));
  };

  auto* radon = app.add_subcommand("radon", "Partition d+2 points into two groups with intersecting hulls");
  radon->add_option("input", input, "Point file (CSV or JSON)")->required();
  radon->add_option("--out,-o", out_path, "Certificate output path (stdout when omitted)");
  add_format(radon);

  auto* tverberg = app.add_subcommand("tverberg", "Partition (d+1)(r-1)+1 points into r groups with a common point");
  tverberg->add_option("input", input, "Point file (CSV or JSON)")->required();
  tverberg->add_option("--r,-r", r, "Number of groups")->required()->check(CLI::Range(2, 1 << 16));
  tverberg->add_option("--out,-o", out_path, "Certificate output path (stdout when omitted)");
  tverberg->add_option("--svg", svg_path, "Also draw the partition (d = 2 only)");
  add_format(tverberg);

  auto* verify = app.add_subcommand("verify", "Check a certificate against its points with exact arithmetic");
  verify->add_option("points", input, "Point file")->required();
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  add_format(verify);

  auto* oracle = app.add_subcommand("oracle", "List every partition into r groups whose hulls share a point");
  oracle->add_option("input", input, "Point file (CSV or JSON)")->required();
  oracle->add_option("--r,-r", r, "Number of groups")->required()->check(CLI::Range(2, 1 << 16));
  oracle->add_option("--cap", cap, "Refuse when r^N exceeds this (default 1000000, env TVP_ORACLE_CAP)");
  add_format(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (radon->parsed()) return cmd_radon(input, format, out_path);
  if (tverberg->parsed()) return cmd_tverberg(input, format, r, out_path, svg_path);
  if (verify->parsed()) return cmd_verify(input, cert_path, format);
  if (oracle->parsed()) return cmd_oracle(input, format, r, cap);
  return kExitUsage;
}
