// Copyright 2026 The qagi-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qagi {

/// Insertion-ordered JSON value used for report and trace emission.
/// Numbers serialize with 17 significant digits, so every double
/// round-trips exactly and identical reports are identical byte-for-byte.
/// (Input parsing uses a full JSON library; this type only writes.)
class JValue {
 public:
  using Array = std::vector<JValue>;
  using Object = std::vector<std::pair<std::string, JValue>>;

  JValue() : value_(nullptr) {}
  JValue(std::nullptr_t) : value_(nullptr) {}
  JValue(bool b) : value_(b) {}
  JValue(int v) : value_(static_cast<std::int64_t>(v)) {}
  JValue(unsigned v) : value_(static_cast<std::uint64_t>(v)) {}
  JValue(std::int64_t v) : value_(v) {}
  JValue(std::uint64_t v) : value_(v) {}
  JValue(double v) : value_(v) {}
  JValue(const char* s) : value_(std::string(s)) {}
  JValue(std::string s) : value_(std::move(s)) {}
  JValue(Array a) : value_(std::move(a)) {}
  JValue(Object o) : value_(std::move(o)) {}

  static JValue object() { return JValue(Object{}); }
  static JValue array() { return JValue(Array{}); }

  bool is_object() const { return std::holds_alternative<Object>(value_); }
  bool is_array() const { return std::holds_alternative<Array>(value_); }

  /// Object access: inserts the key at the end when missing.
  JValue& operator[](const std::string& key);
  const JValue* find(const std::string& key) const;

  void push_back(JValue v);

  const Object& as_object() const { return std::get<Object>(value_); }
  const Array& as_array() const { return std::get<Array>(value_); }

  /// Compact single-line serialization.
  std::string dump() const;
  /// Pretty serialization with two-space indentation.
  std::string dump_pretty() const;

 private:
  void write(std::string& out, int indent, int depth) const;

  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string,
               Array, Object>
      value_;
};

/// %.17g formatting shared by the JSON and CSV emitters.
std::string format_double_17(double v);

}  // namespace qagi
