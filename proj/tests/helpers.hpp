#pragma once

#include <string>

#include "rookdual/notation.hpp"

namespace testing {

inline rookdual::SetPartition P(int k, const std::string& text) { return rookdual::parse_set_partition(text, k); }
inline rookdual::PartialInjection I(int n, const std::string& text) {
  return rookdual::parse_partial_injection(text, n);
}
inline rookdual::HatElement H(int k, const std::string& text) {
  return text == "0" ? rookdual::HatElement::zero(k) : rookdual::HatElement(P(k, text));
}

}  // namespace testing
