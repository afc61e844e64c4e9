#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "rookdual/diagrams.hpp"

namespace rookdual {

// Syntax error in the element notation; position is a 0-based offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// composition accepts any partition of a subset of the 2k points; missing
// points are completed with singletons where a C_k element is needed.
enum class Family { is, istar, pistar, hat, tilde, composition };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

using Element = std::variant<PartialInjection, SetPartition, HatElement>;

// `[2,-,3,5,-]`: the length must equal n.
PartialInjection parse_partial_injection(std::string_view text, int n);
// `{1,2,1'}|{3,2',3'}`, or `{}` for the empty partition.
SetPartition parse_set_partition(std::string_view text, int k);

// Parses and checks the family predicate. `ambient` is n for IS_n and k for
// diagram families. Hat elements also accept `0`.
Element parse_element(std::string_view text, Family family, int ambient);

std::string format(const PartialInjection& pi);
std::string format(const SetPartition& p);
std::string format(const HatElement& a);
std::string format(const Element& e);

}  // namespace rookdual
