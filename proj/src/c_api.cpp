#include "tvp/tvp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "tvp/certify.hpp"
#include "tvp/error.hpp"
#include "tvp/io.hpp"

struct tvp_pointset {
  tvp::io::PointSetFile file;
};

struct tvp_certificate {
  tvp::io::CertificateFile file;
};

struct tvp_report {
  tvp::VerificationReport report;
};

namespace {

thread_local std::string last_error;

tvp_status fail(tvp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
tvp_status guarded(F&& body) {
  try {
    body();
    return TVP_OK;
  } catch (const tvp::ParseError& e) {
    return fail(TVP_ERR_PARSE, e.what());
  } catch (const tvp::SizeError& e) {
    return fail(TVP_ERR_SIZE, e.what());
  } catch (const tvp::DimensionError& e) {
    return fail(TVP_ERR_DIMENSION, e.what());
  } catch (const tvp::CapExceededError& e) {
    return fail(TVP_ERR_CAP, e.what());
  } catch (const tvp::IoError& e) {
    return fail(TVP_ERR_IO, e.what());
  } catch (const tvp::HypothesisError& e) {
    return fail(TVP_ERR_HYPOTHESIS, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TVP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TVP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TVP_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tvp::io::Format to_format(tvp_format f) {
  switch (f) {
    case TVP_FORMAT_CSV:
      return tvp::io::Format::Csv;
    case TVP_FORMAT_JSON:
      return tvp::io::Format::Json;
    default:
      return tvp::io::Format::Auto;
  }
}

bool null_arg(const void* p, const char* what, tvp_status& status) {
  if (p) return false;
  status = fail(TVP_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
  return true;
}

}  // namespace

extern "C" {

const char* tvp_version(void) { return "1.0.0"; }

const char* tvp_last_error(void) { return last_error.c_str(); }

const char* tvp_status_name(tvp_status status) {
  switch (status) {
    case TVP_OK: return "ok";
    case TVP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TVP_ERR_PARSE: return "parse error";
    case TVP_ERR_SIZE: return "size error";
    case TVP_ERR_DIMENSION: return "dimension error";
    case TVP_ERR_CAP: return "enumeration cap exceeded";
    case TVP_ERR_IO: return "i/o error";
    case TVP_ERR_HYPOTHESIS: return "hypothesis violated";
    case TVP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void tvp_string_free(char* s) { std::free(s); }

tvp_status tvp_pointset_load(const char* path, tvp_format format, tvp_pointset** out) {
  tvp_status st;
  if (null_arg(path, "path", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = new tvp_pointset{tvp::io::read_points(path, to_format(format))}; });
}

tvp_status tvp_pointset_parse(const char* text, size_t length, tvp_format format, tvp_pointset** out) {
  tvp_status st;
  if (null_arg(text, "text", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = new tvp_pointset{tvp::io::parse_points({text, length}, to_format(format))}; });
}

size_t tvp_pointset_size(const tvp_pointset* points) { return points ? points->file.points.size() : 0; }

size_t tvp_pointset_dimension(const tvp_pointset* points) { return points ? points->file.dimension : 0; }

tvp_status tvp_pointset_coordinate(const tvp_pointset* points, size_t index, size_t axis, char** out) {
  tvp_status st;
  if (null_arg(points, "points", st) || null_arg(out, "out", st)) return st;
  if (index >= points->file.points.size() || axis >= points->file.dimension) {
    return fail(TVP_ERR_INVALID_ARGUMENT, "coordinate index out of range");
  }
  return guarded([&] { *out = dup_string(points->file.points[index].coords[axis].str()); });
}

void tvp_pointset_free(tvp_pointset* points) { delete points; }

tvp_status tvp_radon(const tvp_pointset* points, tvp_certificate** out) {
  tvp_status st;
  if (null_arg(points, "points", st) || null_arg(out, "out", st)) return st;
  return guarded([&] {
    auto cert = tvp::radon_partition(points->file.points);
    *out = new tvp_certificate{tvp::io::make_certificate_file(points->file.dimension, std::move(cert))};
  });
}

tvp_status tvp_tverberg(const tvp_pointset* points, size_t r, tvp_certificate** out) {
  tvp_status st;
  if (null_arg(points, "points", st) || null_arg(out, "out", st)) return st;
  if (r < 2) return fail(TVP_ERR_INVALID_ARGUMENT, "r must be at least 2");
  return guarded([&] {
    auto cert = tvp::tverberg_partition(points->file.points, r);
    *out = new tvp_certificate{tvp::io::make_certificate_file(points->file.dimension, std::move(cert))};
  });
}

tvp_status tvp_certificate_load(const char* path, tvp_certificate** out) {
  tvp_status st;
  if (null_arg(path, "path", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = new tvp_certificate{tvp::io::parse_certificate(tvp::io::read_text(path))}; });
}

tvp_status tvp_certificate_parse(const char* text, size_t length, tvp_certificate** out) {
  tvp_status st;
  if (null_arg(text, "text", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = new tvp_certificate{tvp::io::parse_certificate({text, length})}; });
}

tvp_status tvp_certificate_render(const tvp_certificate* cert, char** out) {
  tvp_status st;
  if (null_arg(cert, "certificate", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = dup_string(tvp::io::emit_certificate(cert->file)); });
}

tvp_status tvp_certificate_save(const tvp_certificate* cert, const char* path) {
  tvp_status st;
  if (null_arg(cert, "certificate", st) || null_arg(path, "path", st)) return st;
  return guarded([&] { tvp::io::write_text(path, tvp::io::emit_certificate(cert->file)); });
}

tvp_certificate_kind tvp_certificate_get_kind(const tvp_certificate* cert) {
  return cert && cert->file.kind == tvp::io::CertificateKind::Radon ? TVP_CERT_RADON : TVP_CERT_TVERBERG;
}

size_t tvp_certificate_groups(const tvp_certificate* cert) {
  if (!cert) return 0;
  if (cert->file.kind == tvp::io::CertificateKind::Radon) return 2;
  return std::get<tvp::PartitionCertificate>(cert->file.certificate).groups.size();
}

size_t tvp_certificate_iterations(const tvp_certificate* cert) {
  if (!cert || cert->file.kind == tvp::io::CertificateKind::Radon) return 0;
  return std::get<tvp::PartitionCertificate>(cert->file.certificate).iterations;
}

tvp_status tvp_certificate_save_svg(const tvp_pointset* points, const tvp_certificate* cert, const char* path) {
  tvp_status st;
  if (null_arg(points, "points", st) || null_arg(cert, "certificate", st) || null_arg(path, "path", st)) return st;
  return guarded([&] {
    tvp::PartitionCertificate drawn;
    if (cert->file.kind == tvp::io::CertificateKind::Radon) {
      const auto& c = std::get<tvp::RadonCertificate>(cert->file.certificate);
      drawn.r = 2;
      drawn.groups = {c.group1, c.group2};
      drawn.weights = c.weights;
      drawn.common_point = c.common_point;
    } else {
      drawn = std::get<tvp::PartitionCertificate>(cert->file.certificate);
    }
    tvp::io::write_text(path, tvp::io::render_svg(points->file.points, drawn));
  });
}

void tvp_certificate_free(tvp_certificate* cert) { delete cert; }

tvp_status tvp_verify(const tvp_pointset* points, const tvp_certificate* cert, tvp_report** out) {
  tvp_status st;
  if (null_arg(points, "points", st) || null_arg(cert, "certificate", st) || null_arg(out, "out", st)) return st;
  return guarded([&] {
    const auto& pts = points->file.points;
    tvp::VerificationReport report =
        cert->file.kind == tvp::io::CertificateKind::Radon
            ? tvp::verify_radon(pts, std::get<tvp::RadonCertificate>(cert->file.certificate))
            : tvp::verify_tverberg(pts, std::get<tvp::PartitionCertificate>(cert->file.certificate));
    *out = new tvp_report{std::move(report)};
  });
}

int tvp_report_valid(const tvp_report* report) { return report && report->report.valid ? 1 : 0; }

size_t tvp_report_check_count(const tvp_report* report) { return report ? report->report.checks.size() : 0; }

tvp_status tvp_report_render(const tvp_report* report, char** out) {
  tvp_status st;
  if (null_arg(report, "report", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = dup_string(report->report.render()); });
}

void tvp_report_free(tvp_report* report) { delete report; }

tvp_status tvp_oracle(const tvp_pointset* points, size_t r, uint64_t cap, char** out, size_t* count) {
  tvp_status st;
  if (null_arg(points, "points", st) || null_arg(out, "out", st)) return st;
  if (r < 2) return fail(TVP_ERR_INVALID_ARGUMENT, "r must be at least 2");
  return guarded([&] {
    auto found = tvp::brute_force_tverberg(points->file.points, r, cap == 0 ? tvp::kDefaultOracleCap : cap);
    std::string text;
    for (const auto& p : found) text += tvp::format_partition(p) + "\n";
    *out = dup_string(text);
    if (count) *count = found.size();
  });
}

}  // extern "C"
