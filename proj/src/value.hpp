#pragma once

#include <cstdint>
#include <string>

namespace miniproc {

// Runtime values. Integers and booleans are distinct; there is no coercion.
class Value {
 public:
  enum class Kind { Int, Bool };

  static Value from_int(std::int64_t v) { return Value(v); }
  static Value from_bool(bool v) { return Value(v); }

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_bool() const { return kind_ == Kind::Bool; }

  std::int64_t as_int() const { return int_; }
  bool as_bool() const { return bool_; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == Kind::Int ? a.int_ == b.int_ : a.bool_ == b.bool_;
  }

 private:
  explicit Value(std::int64_t v) : kind_(Kind::Int), int_(v) {}
  explicit Value(bool v) : kind_(Kind::Bool), bool_(v) {}

  Kind kind_;
  std::int64_t int_ = 0;
  bool bool_ = false;
};

std::string to_string(const Value& value);
std::string kind_name(Value::Kind kind);

}  // namespace miniproc
