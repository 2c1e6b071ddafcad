#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scgeo/curves.hpp"

namespace scgeo {

// Doubles are printed with %.17g everywhere so identical runs produce
// byte-identical artifacts.
std::string format_g17(double v);

// Streaming JSON writer that preserves insertion order (reports have a stable
// field order for golden comparisons). No escaping beyond the JSON required
// set; keys and values are ASCII in this codebase.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  // without this overload a string literal would convert to bool, not string_view
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  // pre-formatted numeric token, emitted without quotes
  JsonWriter& raw_number(std::string_view v);
  const std::string& str() const;

 private:
  void comma();
  std::string out_;
  std::vector<bool> has_items_;  // per open container
  bool pending_key_ = false;
};

struct CsvError : std::runtime_error {
  CsvError(const std::string& msg, std::size_t line_arg)
      : std::runtime_error(msg + " (line " + std::to_string(line_arg) + ")"), line(line_arg) {}
  std::size_t line;
};

// Curve CSV: header "t,x,y", LF endings. Reading validates the TimedPolyline
// invariants (strictly increasing params, no consecutive duplicate vertices)
// and reports the offending 1-based line in CsvError.
std::string curve_to_csv(const TimedPolyline& curve);
TimedPolyline curve_from_csv(std::string_view text);

// Whole-file helpers; writes go to a sibling temp file then rename, so no
// partial file survives an error.
std::string read_file(const std::string& path);
void atomic_write_file(const std::string& path, std::string_view content);

}  // namespace scgeo
