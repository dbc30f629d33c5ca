#pragma once

// Deterministic JSON emitter for the certificate and report files: keys stay
// in insertion order and doubles are printed with 17 significant digits, so
// identical configurations produce byte-identical output.

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace cliffsymtool {

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class JsonWriter {
 public:
  void begin_object() {
    item_prefix();
    out_ += '{';
    levels_.push_back(false);
  }
  void end_object() {
    levels_.pop_back();
    out_ += '}';
  }
  void begin_array() {
    item_prefix();
    out_ += '[';
    levels_.push_back(false);
  }
  void end_array() {
    levels_.pop_back();
    out_ += ']';
  }

  void key(std::string_view k) {
    if (!levels_.empty() && levels_.back()) out_ += ',';
    if (!levels_.empty()) levels_.back() = true;
    write_string(k);
    out_ += ':';
    after_key_ = true;
  }

  void value(double x) {
    item_prefix();
    out_ += fmt17(x);
  }
  void value(int x) { value(static_cast<long long>(x)); }
  void value(long long x) {
    item_prefix();
    out_ += std::to_string(x);
  }
  void value(bool b) {
    item_prefix();
    out_ += b ? "true" : "false";
  }
  void value(std::string_view s) {
    item_prefix();
    write_string(s);
  }
  // Keep string literals away from the bool overload.
  void value(const char* s) { value(std::string_view(s)); }

  void key_value(std::string_view k, double x) {
    key(k);
    value(x);
  }
  void key_value(std::string_view k, int x) {
    key(k);
    value(x);
  }
  void key_value(std::string_view k, bool b) {
    key(k);
    value(b);
  }
  void key_value(std::string_view k, std::string_view s) {
    key(k);
    value(s);
  }
  void key_value(std::string_view k, const char* s) {
    key(k);
    value(std::string_view(s));
  }

  const std::string& str() const { return out_; }

 private:
  void item_prefix() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!levels_.empty() && levels_.back()) out_ += ',';
    if (!levels_.empty()) levels_.back() = true;
  }

  void write_string(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
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

  std::string out_;
  std::vector<bool> levels_;
  bool after_key_ = false;
};

}  // namespace cliffsymtool
