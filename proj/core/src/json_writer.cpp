#include "nrwalk/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace nrw {

std::string format_double(double d) {
  if (std::isnan(d)) return "null";
  if (std::isinf(d)) return d > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

void JsonWriter::prepare_value() {
  if (key_pending_) {
    key_pending_ = false;
    return;
  }
  if (!stack_.empty()) {
    if (!stack_.back().first) out_ += ',';
    stack_.back().first = false;
  }
}

void JsonWriter::write_escaped(std::string_view s) {
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out_ += "\\\"";
        break;
      case '\\':
        out_ += "\\\\";
        break;
      case '\n':
        out_ += "\\n";
        break;
      case '\t':
        out_ += "\\t";
        break;
      case '\r':
        out_ += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
}

JsonWriter& JsonWriter::begin_object() {
  prepare_value();
  out_ += '{';
  stack_.push_back({'{', true});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  prepare_value();
  out_ += '[';
  stack_.push_back({'[', true});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  if (!stack_.back().first) out_ += ',';
  stack_.back().first = false;
  write_escaped(k);
  out_ += ':';
  key_pending_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  prepare_value();
  write_escaped(s);
  return *this;
}

JsonWriter& JsonWriter::value(long long i) {
  prepare_value();
  out_ += std::to_string(i);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t u) {
  prepare_value();
  out_ += std::to_string(u);
  return *this;
}

JsonWriter& JsonWriter::value(double d) {
  prepare_value();
  out_ += format_double(d);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  prepare_value();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value_null() {
  prepare_value();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::value(const BigInt& i) {
  prepare_value();
  write_escaped(i.str());
  return *this;
}

JsonWriter& JsonWriter::value(const Rational& q) {
  prepare_value();
  out_ += "{\"num\":";
  write_escaped(BigInt(boost::multiprecision::numerator(q)).str());
  out_ += ",\"den\":";
  write_escaped(BigInt(boost::multiprecision::denominator(q)).str());
  out_ += '}';
  return *this;
}

}  // namespace nrw
