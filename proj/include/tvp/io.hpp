#pragma once

// Point-set and certificate files, and the SVG drawing of planar partitions.
//
// Point sets come as CSV (one point per row, optional header row of names
// starting with a letter or underscore; a header whose first column is
// "label" marks a label column) or JSON:
//   {"dimension": 2, "points": [["1", "1/2"], [0, "0.25"]], "labels": [...]}
// Coordinates are exact: integers, "p/q" or terminating decimals. JSON
// floating-point literals are rejected because they may already be rounded.
//
// Certificates are JSON with every rational as a "p/q" string and zero-based
// point indices.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tvp/radon.hpp"
#include "tvp/tverberg.hpp"

namespace tvp::io {

enum class Format { Auto, Csv, Json };

/// "csv" | "json" | "auto"; throws ParseError otherwise.
Format parse_format(std::string_view name);

struct PointSetFile {
  std::size_t dimension = 0;
  std::vector<Point> points;
  std::vector<std::string> labels;  // empty or one per point
};

/// Json when the text starts with '{', Csv otherwise.
Format sniff_format(std::string_view text);
/// By extension (.json / .csv); sniffs the contents otherwise.
Format detect_format(const std::filesystem::path& path, std::string_view text);

PointSetFile parse_points(std::string_view text, Format format);
PointSetFile read_points(const std::filesystem::path& path, Format format = Format::Auto);
std::string emit_points_json(const PointSetFile& file);

enum class CertificateKind { Radon, Tverberg };

struct CertificateFile {
  CertificateKind kind = CertificateKind::Tverberg;
  std::size_t d = 0;
  std::variant<RadonCertificate, PartitionCertificate> certificate;

  std::size_t point_count() const;
  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

CertificateFile make_certificate_file(std::size_t d, RadonCertificate cert);
CertificateFile make_certificate_file(std::size_t d, PartitionCertificate cert);

/// Deterministic rendering; equal certificates give byte-identical text.
std::string emit_certificate(const CertificateFile& file);
/// Inverse of emit_certificate; ParseError on malformed or truncated input.
CertificateFile parse_certificate(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Static drawing of a planar partition: points colored by group, group hulls
/// outlined, the common point marked. Viewport fixed; the bounding box gets a
/// 5% margin. Requires d = 2.
std::string render_svg(std::span<const Point> points, const PartitionCertificate& cert);

}  // namespace tvp::io
