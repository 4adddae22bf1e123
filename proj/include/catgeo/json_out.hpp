#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catgeo {

// Streaming JSON writer with a fixed number format: finite doubles use 17
// significant digits, infinities and NaN are written as the strings "inf",
// "-inf" and "nan". Output is indented by two spaces per level; arrays of
// scalars stay on one line.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(const std::vector<double>& v);

  const std::string& str() const { return out_; }

 private:
  struct Level {
    bool object;
    int count;
    bool inline_scalars;
  };
  void before_value();
  void newline();
  void raw(std::string_view s) { out_.append(s); }

  std::string out_;
  std::vector<Level> stack_;
  bool after_key_ = false;
};

std::string format_double(double v);
std::string json_escape(std::string_view s);

}  // namespace catgeo
