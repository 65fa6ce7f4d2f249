#include "tvp/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "tvp/error.hpp"

namespace tvp::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Header fields are names: they start with a letter or '_'.
bool is_name(std::string_view s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_');
}

PointSetFile parse_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    rows.emplace_back(line_no, split_csv(line));
  }
  if (rows.empty()) throw ParseError("point file contains no points");

  bool has_label = false;
  auto& first = rows.front().second;
  if (std::all_of(first.begin(), first.end(), is_name)) {
    has_label = lower(first.front()) == "label";
    rows.erase(rows.begin());
    if (rows.empty()) throw ParseError("point file contains a header but no points");
  }

  PointSetFile out;
  const std::size_t width = rows.front().second.size();
  if (has_label && width < 1) throw ParseError("label column without coordinates");
  out.dimension = width - (has_label ? 1 : 0);
  for (auto& [no, fields] : rows) {
    if (fields.size() != width) {
      throw ParseError("line " + std::to_string(no) + ": expected " + std::to_string(width) + " fields, got " +
                       std::to_string(fields.size()));
    }
    std::vector<Rational> coords;
    std::size_t k = 0;
    if (has_label) out.labels.emplace_back(fields[k++]);
    for (; k < fields.size(); ++k) {
      try {
        coords.push_back(Rational::parse(fields[k]));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(no) + ": " + e.what());
      }
    }
    out.points.push_back(Point{Vector(std::move(coords))});
  }
  return out;
}

Rational rational_from_json(const json& v, std::string_view where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational::parse(v.dump());
  if (v.is_number_float()) {
    throw ParseError(std::string(where) + ": floating-point literal " + v.dump() +
                     " is not exact; write it as a string such as \"1/3\" or \"0.5\"");
  }
  throw ParseError(std::string(where) + ": expected a rational, got " + std::string(v.type_name()));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::size_t size_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

PointSetFile parse_points_json(std::string_view text) {
  json doc = parse_json(text);
  PointSetFile out;
  out.dimension = size_field(doc, "dimension");
  const json& pts = field(doc, "points");
  if (!pts.is_array()) throw ParseError("\"points\" must be an array");
  if (pts.empty()) throw ParseError("point file contains no points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& row = pts[i];
    if (!row.is_array() || row.size() != out.dimension) {
      throw ParseError("point " + std::to_string(i) + ": expected an array of " + std::to_string(out.dimension) +
                       " coordinates");
    }
    std::vector<Rational> coords;
    for (const auto& c : row) coords.push_back(rational_from_json(c, "point " + std::to_string(i)));
    out.points.push_back(Point{Vector(std::move(coords))});
  }
  if (doc.contains("labels")) {
    const json& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != out.points.size()) {
      throw ParseError("\"labels\" must be an array with one entry per point");
    }
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      out.labels.push_back(l.get<std::string>());
    }
  }
  return out;
}

ordered_json vector_json(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

ordered_json groups_json(const std::vector<std::vector<std::size_t>>& groups) {
  ordered_json a = ordered_json::array();
  for (const auto& g : groups) a.push_back(g);
  return a;
}

std::vector<Rational> rationals_from(const json& arr, const char* key) {
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(rational_from_json(v, key));
  return out;
}

std::vector<std::vector<std::size_t>> groups_from(const json& arr) {
  if (!arr.is_array()) throw ParseError("\"groups\" must be an array");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : arr) {
    if (!g.is_array()) throw ParseError("each group must be an array of indices");
    auto& dst = out.emplace_back();
    for (const auto& i : g) {
      if (!i.is_number_unsigned() && !(i.is_number_integer() && i.get<long long>() >= 0)) {
        throw ParseError("group indices must be nonnegative integers");
      }
      dst.push_back(i.get<std::size_t>());
    }
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  auto n = lower(name);
  if (n == "csv") return Format::Csv;
  if (n == "json") return Format::Json;
  if (n == "auto") return Format::Auto;
  throw ParseError("unknown format \"" + std::string(name) + "\" (expected csv, json or auto)");
}

Format sniff_format(std::string_view text) {
  auto t = trim(text);
  return !t.empty() && t.front() == '{' ? Format::Json : Format::Csv;
}

Format detect_format(const std::filesystem::path& path, std::string_view text) {
  auto ext = lower(path.extension().string());
  if (ext == ".json") return Format::Json;
  if (ext == ".csv") return Format::Csv;
  return sniff_format(text);
}

PointSetFile parse_points(std::string_view text, Format format) {
  if (format == Format::Auto) format = sniff_format(text);
  return format == Format::Json ? parse_points_json(text) : parse_csv(text);
}

PointSetFile read_points(const std::filesystem::path& path, Format format) {
  std::string text = read_text(path);
  if (format == Format::Auto) format = detect_format(path, text);
  return parse_points(text, format);
}

std::string emit_points_json(const PointSetFile& file) {
  ordered_json doc;
  doc["dimension"] = file.dimension;
  ordered_json pts = ordered_json::array();
  for (const auto& p : file.points) pts.push_back(vector_json(p.coords));
  doc["points"] = std::move(pts);
  if (!file.labels.empty()) doc["labels"] = file.labels;
  return doc.dump(2) + "\n";
}

std::size_t CertificateFile::point_count() const {
  return std::visit([](const auto& c) { return c.weights.size(); }, certificate);
}

CertificateFile make_certificate_file(std::size_t d, RadonCertificate cert) {
  return CertificateFile{CertificateKind::Radon, d, std::move(cert)};
}

CertificateFile make_certificate_file(std::size_t d, PartitionCertificate cert) {
  return CertificateFile{CertificateKind::Tverberg, d, std::move(cert)};
}

std::string emit_certificate(const CertificateFile& file) {
  ordered_json doc;
  doc["format"] = "tvp-certificate";
  doc["version"] = 1;
  if (file.kind == CertificateKind::Radon) {
    const auto& c = std::get<RadonCertificate>(file.certificate);
    doc["kind"] = "radon";
    doc["d"] = file.d;
    doc["r"] = 2;
    doc["N"] = c.weights.size();
    doc["groups"] = groups_json({c.group1, c.group2});
    ordered_json w = ordered_json::array();
    for (const auto& x : c.weights) w.push_back(x.str());
    doc["weights"] = std::move(w);
    doc["common_point"] = vector_json(c.common_point.coords);
  } else {
    const auto& c = std::get<PartitionCertificate>(file.certificate);
    doc["kind"] = "tverberg";
    doc["d"] = file.d;
    doc["r"] = c.r;
    doc["N"] = c.weights.size();
    doc["iterations"] = c.iterations;
    doc["groups"] = groups_json(c.groups);
    ordered_json w = ordered_json::array();
    for (const auto& x : c.weights) w.push_back(x.str());
    doc["weights"] = std::move(w);
    doc["common_point"] = vector_json(c.common_point.coords);
    doc["positive_support"] = groups_json(c.positive_support());
  }
  return doc.dump(2) + "\n";
}

CertificateFile parse_certificate(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("\"kind\" must be a string");

  CertificateFile out;
  out.d = size_field(doc, "d");
  const std::size_t n = size_field(doc, "N");
  auto groups = groups_from(field(doc, "groups"));
  auto weights = rationals_from(field(doc, "weights"), "weights");
  auto common = rationals_from(field(doc, "common_point"), "common_point");
  if (weights.size() != n) throw ParseError("\"weights\" has " + std::to_string(weights.size()) + " entries, N = " + std::to_string(n));
  if (common.size() != out.d) throw ParseError("\"common_point\" does not have d coordinates");

  if (kind == "radon") {
    if (groups.size() != 2) throw ParseError("a Radon certificate has exactly two groups");
    out.kind = CertificateKind::Radon;
    out.certificate = RadonCertificate{std::move(groups[0]), std::move(groups[1]), std::move(weights),
                                       Point{Vector(std::move(common))}};
  } else if (kind == "tverberg") {
    out.kind = CertificateKind::Tverberg;
    PartitionCertificate c;
    c.r = size_field(doc, "r");
    c.iterations = doc.contains("iterations") ? size_field(doc, "iterations") : 0;
    c.groups = std::move(groups);
    c.weights = std::move(weights);
    c.common_point = Point{Vector(std::move(common))};
    out.certificate = std::move(c);
  } else {
    throw ParseError("unknown certificate kind \"" + kind.get<std::string>() + "\"");
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

namespace {

Rational cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain, exact; collinear points dropped.
std::vector<Vector> hull_2d(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

constexpr std::array<const char*, 8> kPalette{"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                              "#66a61e", "#e6ab02", "#a6761d", "#666666"};

}  // namespace

std::string render_svg(std::span<const Point> points, const PartitionCertificate& cert) {
  if (points.empty() || points.front().dim() != 2) throw DimensionError("render_svg: drawing needs points in R^2");
  constexpr double kSize = 400.0;

  double min_x = points.front().coords[0].to_double(), max_x = min_x;
  double min_y = points.front().coords[1].to_double(), max_y = min_y;
  auto extend = [&](const Vector& v) {
    min_x = std::min(min_x, v[0].to_double());
    max_x = std::max(max_x, v[0].to_double());
    min_y = std::min(min_y, v[1].to_double());
    max_y = std::max(max_y, v[1].to_double());
  };
  for (const auto& p : points) extend(p.coords);
  if (cert.common_point.dim() == 2) extend(cert.common_point.coords);

  double span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0.0) span = 1.0;
  const double margin = 0.05 * span;
  const double scale = kSize / (span + 2 * margin);
  const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
  auto sx = [&](const Rational& x) { return kSize / 2 + (x.to_double() - cx) * scale; };
  auto sy = [&](const Rational& y) { return kSize / 2 - (y.to_double() - cy) * scale; };

  std::string out;
  out += fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{0:.0f}\" viewBox=\"0 0 {0:.0f} {0:.0f}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0:.0f}\" height=\"{0:.0f}\" fill=\"white\"/>\n",
      kSize);

  for (std::size_t j = 0; j < cert.groups.size(); ++j) {
    const char* color = kPalette[j % kPalette.size()];
    std::vector<Vector> pts;
    for (auto i : cert.groups[j]) {
      if (i < points.size()) pts.push_back(points[i].coords);
    }
    auto hull = hull_2d(std::move(pts));
    if (hull.size() >= 2) {
      std::string coords;
      for (const auto& v : hull) coords += fmt::format("{:.3f},{:.3f} ", sx(v[0]), sy(v[1]));
      coords.pop_back();
      out += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                         coords, color, color);
    }
    for (auto i : cert.groups[j]) {
      if (i >= points.size()) continue;
      const auto& v = points[i].coords;
      out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"{}\"><title>{} (group {})</title></circle>\n",
                         sx(v[0]), sy(v[1]), color, i, j + 1);
    }
  }

  if (cert.common_point.dim() == 2) {
    const double px = sx(cert.common_point.coords[0]), py = sy(cert.common_point.coords[1]);
    out += fmt::format(
        "<g stroke=\"black\" stroke-width=\"2\"><line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>"
        "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/><title>common point {}</title></g>\n",
        px - 6, py - 6, px + 6, py + 6, px - 6, py + 6, px + 6, py - 6, cert.common_point.coords.str());
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tvp::io
