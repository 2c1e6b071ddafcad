#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "scgeo/io.hpp"

using namespace scgeo;

TEST_SUITE("io") {

TEST_CASE("g17 formatting round-trips doubles exactly") {
  for (double v : {1.0 / 3.0, 3.141592653589793, 1e300, 5e-324, -0.0, 123456789.123456789,
                   -1.9281011960243153e-06}) {
    const std::string s = format_g17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("json writer produces ordered, escaped output") {
  JsonWriter w;
  w.begin_object();
  w.key("name").value("a\"b\\c\nd");
  w.key("n").value(42);
  w.key("x").value(0.5);
  w.key("flag").value(true);
  w.key("big").value(std::uint64_t{1} << 60);
  w.key("list").begin_array().value(1).value(2).end_array();
  w.key("nested").begin_object().key("k").raw_number("7").end_object();
  w.end_object();
  CHECK(w.str() ==
        "{\"name\":\"a\\\"b\\\\c\\nd\",\"n\":42,\"x\":0.5,\"flag\":true,"
        "\"big\":1152921504606846976,\"list\":[1,2],\"nested\":{\"k\":7}}");
}

TEST_CASE("curve csv round-trips bit-exactly") {
  TimedPolyline curve;
  curve.params = {0.0, 1.0, 2.5};
  curve.vertices = {{0, 0}, {1.0 / 3.0, -2e-9}, {5.5, 7.25}};
  const std::string csv = curve_to_csv(curve);
  CHECK(csv.substr(0, 6) == "t,x,y\n");
  const TimedPolyline back = curve_from_csv(csv);
  REQUIRE(back.vertices.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(back.params[k] == curve.params[k]);
    CHECK(back.vertices[k].x == curve.vertices[k].x);
    CHECK(back.vertices[k].y == curve.vertices[k].y);
  }
}

TEST_CASE("curve csv accepts CRLF") {
  const TimedPolyline c = curve_from_csv("t,x,y\r\n0,1,2\r\n1,3,4\r\n");
  REQUIRE(c.vertices.size() == 2);
  CHECK(c.vertices[1].x == 3);
}

TEST_CASE("curve csv rejects malformed input with the right line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      curve_from_csv(text);
    } catch (const CsvError& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("x,y\n0,1,2\n") == 1);               // wrong header
  CHECK(line_of("t,x,y\n0,1\n") == 2);               // two fields
  CHECK(line_of("t,x,y\n0,1,2,3\n") == 2);           // four fields
  CHECK(line_of("t,x,y\n0,1,zebra\n") == 2);         // not a number
  CHECK(line_of("t,x,y\n0,1,inf\n") == 2);           // not finite
  CHECK(line_of("t,x,y\n0,1,2\n0,3,4\n") == 3);      // t not increasing
  CHECK(line_of("t,x,y\n0,1,2\n\n1,3,4\n") == 3);    // blank line
  CHECK(line_of("t,x,y\n0,1,2\n1,1,2\n") == 3);      // duplicate vertex
  CHECK(line_of("t,x,y\n") == 1);                    // no vertices
  CHECK_THROWS_AS(curve_from_csv(""), CsvError);     // empty file
}

TEST_CASE("atomic file write and read back") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "scgeo_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "out.txt").string();
  atomic_write_file(path, "first");
  CHECK(read_file(path) == "first");
  atomic_write_file(path, "second");  // overwrite goes through the same rename
  CHECK(read_file(path) == "second");
  CHECK_FALSE(fs::exists(path + ".tmp"));
  CHECK_THROWS_AS(read_file((dir / "missing.txt").string()), std::runtime_error);
  fs::remove_all(dir);
}

}  // TEST_SUITE
