#include "catgeo/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace catgeo {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

void JsonWriter::newline() {
  out_ += '\n';
  out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Level& top = stack_.back();
  if (top.count++ > 0) out_ += top.inline_scalars ? ", " : ",";
  if (!top.inline_scalars) newline();
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  raw("{");
  stack_.push_back({true, 0, false});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool empty = stack_.back().count == 0;
  stack_.pop_back();
  if (!empty) newline();
  raw("}");
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  raw("[");
  stack_.push_back({false, 0, false});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const Level top = stack_.back();
  stack_.pop_back();
  if (top.count > 0 && !top.inline_scalars) newline();
  raw("]");
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  before_value();
  raw(json_escape(name));
  raw(": ");
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_value();
  if (std::isfinite(v))
    raw(format_double(v));
  else
    raw(json_escape(format_double(v)));
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  before_value();
  raw(std::to_string(v));
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  before_value();
  raw(std::to_string(v));
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  before_value();
  raw(v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  before_value();
  raw(json_escape(v));
  return *this;
}

JsonWriter& JsonWriter::value(const std::vector<double>& v) {
  before_value();
  raw("[");
  stack_.push_back({false, 0, true});
  for (double x : v) value(x);
  stack_.pop_back();
  raw("]");
  return *this;
}

}  // namespace catgeo
