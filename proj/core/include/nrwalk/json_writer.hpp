#ifndef NRWALK_JSON_WRITER_HPP
#define NRWALK_JSON_WRITER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nrwalk/numeric.hpp"

namespace nrw {

// Streaming JSON writer with deterministic output: keys appear in insertion
// order, floats are printed with 12 significant digits, and big integers /
// rationals are rendered as decimal strings, so identical data always
// serializes to identical bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(long long i);
  JsonWriter& value(int i) { return value(static_cast<long long>(i)); }
  JsonWriter& value(std::uint64_t u);
  JsonWriter& value(double d);
  JsonWriter& value(bool b);
  JsonWriter& value_null();
  JsonWriter& value(const BigInt& i);        // decimal string
  JsonWriter& value(const Rational& q);      // {"num":"..","den":".."}

  // Convenience: key followed by value.
  template <typename T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }
  JsonWriter& field_null(std::string_view k) {
    key(k);
    return value_null();
  }

  const std::string& str() const { return out_; }
  std::string take() { return std::move(out_); }

 private:
  void prepare_value();
  void write_escaped(std::string_view s);

  std::string out_;
  // One frame per open container: '{' or '['; `first` tracks comma need.
  struct Frame {
    char kind;
    bool first = true;
  };
  std::vector<Frame> stack_;
  bool key_pending_ = false;
};

// 12-significant-digit rendering used for every float in JSON and text
// output ("-0" normalized to "0").
std::string format_double(double d);

}  // namespace nrw

#endif
