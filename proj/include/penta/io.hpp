#pragma once

// Snapshot files.
//
// JSONL: a header line {"header":{...}} followed by one record per point,
//   {"a":[a0,a1,a2,a3],"x":...,"y":...,"iabs":[p,q],"class":"short"}
// CSV: "# radius_sq=...,window_sq=...,version=..." then the column row
//   a0,a1,a2,a3,x,y,iabs_p,iabs_q,class
// Doubles are written with 17 significant digits. Integer fields are
// authoritative; everything else is recomputed and checked on read.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "penta/errors.hpp"
#include "penta/model_set.hpp"
#include "penta/version.hpp"

namespace penta {

enum class Format { jsonl, csv };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "jsonl") return Format::jsonl;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string stored_dist_class(const PointRecord& p) { return std::string(to_string(p.dist_class)); }

inline std::optional<GoldenInt> dist_for_class(DistClass c) {
  if (c == DistClass::Short) return kShortDistSq;
  if (c == DistClass::Long) return kLongDistSq;
  return std::nullopt;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& s, std::size_t line, const char* field) {
  std::istringstream in(s);
  T v{};
  in >> v;
  if (!in || !in.eof()) throw format_error(line, std::string("bad ") + field + ": '" + s + "'");
  return v;
}

// Rebuilds a point from its stored fields and cross-checks them.
inline PointRecord restore_point(const CycInt& z, double x, double y, const GoldenInt& iabs,
                                 DistClass cls, const Snapshot& snap, std::size_t line) {
  PointRecord p = PointRecord::from(z);
  if (p.abs_sq_internal != iabs) throw format_error(line, "iabs does not match coordinates");
  if (std::abs(p.x - x) > 1e-9 || std::abs(p.y - y) > 1e-9)
    throw format_error(line, "x/y do not match coordinates");
  if (!contains(z, snap.window)) throw format_error(line, "point lies outside the window");
  if (golden_cmp(p.abs_sq_physical, snap.radius_sq) == std::strong_ordering::greater)
    throw format_error(line, "point lies outside the radius");
  p.dist_class = cls;
  p.min_dist_sq = dist_for_class(cls);
  return p;
}

inline DistClass class_field(const std::string& s, std::size_t line) {
  const auto c = parse_dist_class(s);
  if (!c) throw format_error(line, "unknown class '" + s + "'");
  return *c;
}

inline Snapshot header_snapshot(const std::string& radius_sq, const std::string& window_sq,
                                std::size_t line) {
  try {
    Snapshot s;
    s.radius_sq = Rational::parse(radius_sq);
    s.window = Window(Rational::parse(window_sq));
    if (s.radius_sq < Rational(0)) throw std::invalid_argument("negative radius");
    return s;
  } catch (const std::invalid_argument& e) {
    throw format_error(line, std::string("bad header: ") + e.what());
  }
}

inline Snapshot read_jsonl(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  std::optional<Snapshot> snap;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw format_error(line, "invalid JSON");
    }
    try {
      if (!snap) {
        if (!j.is_object() || !j.contains("header")) throw format_error(line, "header required");
        const auto& h = j.at("header");
        snap = header_snapshot(h.at("radius_sq").get<std::string>(),
                               h.at("window_sq").get<std::string>(), line);
        continue;
      }
      const auto a = j.at("a").get<std::array<std::int64_t, 4>>();
      const auto iabs = j.at("iabs").get<std::array<std::int64_t, 2>>();
      snap->points.push_back(restore_point(CycInt(a), j.at("x").get<double>(), j.at("y").get<double>(),
                                           GoldenInt{iabs[0], iabs[1]},
                                           class_field(j.at("class").get<std::string>(), line), *snap,
                                           line));
    } catch (const nlohmann::json::exception& e) {
      throw format_error(line, std::string("malformed record: ") + e.what());
    }
  }
  if (!snap) throw format_error(line, "header required");
  return std::move(*snap);
}

inline constexpr std::string_view kCsvColumns = "a0,a1,a2,a3,x,y,iabs_p,iabs_q,class";

inline Snapshot read_csv(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  std::optional<Snapshot> snap;
  bool columns_seen = false;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    if (!snap) {
      if (text.rfind("# ", 0) != 0) throw format_error(line, "header required");
      std::string radius, window;
      for (const auto& kv : split(std::string_view(text).substr(2), ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw format_error(line, "bad header field '" + kv + "'");
        const auto key = kv.substr(0, eq);
        if (key == "radius_sq") radius = kv.substr(eq + 1);
        if (key == "window_sq") window = kv.substr(eq + 1);
      }
      snap = header_snapshot(radius, window, line);
      continue;
    }
    if (!columns_seen) {
      if (text != kCsvColumns) throw format_error(line, "unexpected column row");
      columns_seen = true;
      continue;
    }
    const auto f = split(text, ',');
    if (f.size() != 9) throw format_error(line, "expected 9 fields");
    const CycInt z{parse_number<std::int64_t>(f[0], line, "a0"), parse_number<std::int64_t>(f[1], line, "a1"),
                   parse_number<std::int64_t>(f[2], line, "a2"), parse_number<std::int64_t>(f[3], line, "a3")};
    const GoldenInt iabs{parse_number<std::int64_t>(f[6], line, "iabs_p"),
                         parse_number<std::int64_t>(f[7], line, "iabs_q")};
    snap->points.push_back(restore_point(z, parse_number<double>(f[4], line, "x"),
                                         parse_number<double>(f[5], line, "y"), iabs,
                                         class_field(f[8], line), *snap, line));
  }
  if (!snap) throw format_error(line, "header required");
  return std::move(*snap);
}

}  // namespace detail

inline void write_snapshot(const Snapshot& snap, Format format, std::ostream& out) {
  using detail::format_double;
  if (format == Format::jsonl) {
    out << R"({"header":{"format":"penta-snapshot","radius_sq":")" << snap.radius_sq.str()
        << R"(","window_sq":")" << snap.window.w().str() << R"(","version":")" << kVersion
        << "\"}}\n";
    for (const auto& p : snap.points) {
      out << R"({"a":[)" << p.z[0] << ',' << p.z[1] << ',' << p.z[2] << ',' << p.z[3] << R"(],"x":)"
          << format_double(p.x) << R"(,"y":)" << format_double(p.y) << R"(,"iabs":[)"
          << p.abs_sq_internal.p << ',' << p.abs_sq_internal.q << R"(],"class":")"
          << detail::stored_dist_class(p) << "\"}\n";
    }
  } else {
    out << "# radius_sq=" << snap.radius_sq.str() << ",window_sq=" << snap.window.w().str()
        << ",version=" << kVersion << '\n'
        << detail::kCsvColumns << '\n';
    for (const auto& p : snap.points) {
      out << p.z[0] << ',' << p.z[1] << ',' << p.z[2] << ',' << p.z[3] << ',' << format_double(p.x) << ','
          << format_double(p.y) << ',' << p.abs_sq_internal.p << ',' << p.abs_sq_internal.q << ','
          << detail::stored_dist_class(p) << '\n';
    }
  }
  if (!out) throw io_error("failed to write snapshot");
}

/// Reads a snapshot written by write_snapshot. The stored class is kept;
/// min_dist_sq is restored for short and long points only.
inline Snapshot read_snapshot(std::istream& in, Format format) {
  return format == Format::jsonl ? detail::read_jsonl(in) : detail::read_csv(in);
}

/// Format from the extension (.csv is CSV, anything else JSONL).
inline Format format_for_path(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0 ? Format::csv : Format::jsonl;
}

inline Snapshot read_snapshot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_snapshot(in, format_for_path(path));
}

inline void write_snapshot_file(const Snapshot& snap, Format format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_snapshot(snap, format, out);
}

}  // namespace penta
