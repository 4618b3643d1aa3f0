#include "value.hpp"

namespace miniproc {

std::string to_string(const Value& value) {
  if (value.is_bool()) return value.as_bool() ? "true" : "false";
  return std::to_string(value.as_int());
}

std::string kind_name(Value::Kind kind) {
  return kind == Value::Kind::Int ? "integer" : "boolean";
}

}  // namespace miniproc
