#pragma once

// Line-oriented instance files with exact rational text:
//
//   corner n=1
//   name = bad-family
//   epsilon = 1/10
//   f = 1/2
//   q: 11/20
//   q: 3/5
//
// '#' starts a comment; blank lines are ignored. Serialization is canonical:
// header, optional name and epsilon, f, then r lines, then q lines, with
// single spaces between entries.

#include <optional>
#include <string>
#include <string_view>

#include "splitcut/corner.hpp"

namespace splitcut {

struct InstanceFile {
  CornerRelaxation relaxation;
  std::optional<std::string> name;
  std::optional<Rational> epsilon;
};

// Throws InputError with a line number on malformed text.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& instance);

InstanceFile read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const InstanceFile& instance);

}  // namespace splitcut
