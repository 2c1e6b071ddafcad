#include "scgeo/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace scgeo {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  has_items_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_ += '[';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  has_items_.pop_back();
  return *this;
}

void JsonWriter::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;  // value directly after "key":
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ += ',';
    has_items_.back() = true;
  }
}

JsonWriter& JsonWriter::key(std::string_view k) {
  comma();
  out_ += '"';
  out_ += k;
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  comma();
  out_ += format_g17(v);
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  comma();
  out_ += '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default: out_ += c;
    }
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::raw_number(std::string_view v) {
  comma();
  out_ += v;
  return *this;
}

const std::string& JsonWriter::str() const { return out_; }

std::string curve_to_csv(const TimedPolyline& curve) {
  std::string out = "t,x,y\n";
  for (std::size_t k = 0; k < curve.vertices.size(); ++k) {
    out += format_g17(curve.params[k]);
    out += ',';
    out += format_g17(curve.vertices[k].x);
    out += ',';
    out += format_g17(curve.vertices[k].y);
    out += '\n';
  }
  return out;
}

namespace {

bool parse_field(std::string_view s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  const std::string tmp(s);
  out = std::strtod(tmp.c_str(), &end);
  return errno == 0 && end == tmp.c_str() + tmp.size() && std::isfinite(out);
}

}  // namespace

TimedPolyline curve_from_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  TimedPolyline curve;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    std::string_view line = lines[idx];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) throw CsvError("empty line", line_no);
    if (line_no == 1) {
      if (line != "t,x,y") throw CsvError("expected header t,x,y", line_no);
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      throw CsvError("expected three comma-separated fields", line_no);
    double t, x, y;
    if (!parse_field(line.substr(0, c1), t) || !parse_field(line.substr(c1 + 1, c2 - c1 - 1), x) ||
        !parse_field(line.substr(c2 + 1), y))
      throw CsvError("malformed number", line_no);
    if (!curve.params.empty()) {
      if (!(t > curve.params.back())) throw CsvError("params must be strictly increasing", line_no);
      if (x == curve.vertices.back().x && y == curve.vertices.back().y)
        throw CsvError("consecutive duplicate vertex", line_no);
    }
    curve.params.push_back(t);
    curve.vertices.push_back({x, y});
  }
  if (curve.vertices.empty()) throw CsvError("no vertices", lines.size());
  return curve;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed for " + path);
  return ss.str();
}

void atomic_write_file(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed for " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("rename failed for " + path);
  }
}

}  // namespace scgeo
