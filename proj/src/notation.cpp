#include "rookdual/notation.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace rookdual {

namespace {

constexpr std::array<std::pair<Family, const char*>, 6> kFamilies{{
    {Family::is, "is"},
    {Family::istar, "istar"},
    {Family::pistar, "pistar"},
    {Family::hat, "hat"},
    {Family::tilde, "tilde"},
    {Family::composition, "composition"},
}};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message), position_(position) {}

const char* family_name(Family f) {
  for (const auto& [family, name] : kFamilies) {
    if (family == f) return name;
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [family, n] : kFamilies) {
    if (name == n) return family;
  }
  return std::nullopt;
}

PartialInjection parse_partial_injection(std::string_view text, int n) {
  Cursor cur(text);
  cur.expect('[');
  std::vector<int> images;
  do {
    if (cur.accept('-')) {
      images.push_back(PartialInjection::undefined);
    } else {
      std::size_t at = cur.position();
      int target = cur.integer();
      if (target == 0) throw ParseError("syntax error at position " + std::to_string(at) + ": targets start at 1", at);
      images.push_back(target);
    }
  } while (cur.accept(','));
  cur.expect(']');
  cur.finish();
  if (static_cast<int>(images.size()) != n) {
    throw std::invalid_argument("partial injection has " + std::to_string(images.size()) + " entries, expected n = " +
                                std::to_string(n));
  }
  return PartialInjection(std::move(images));
}

SetPartition parse_set_partition(std::string_view text, int k) {
  Cursor cur(text);
  std::vector<Block> blocks;
  cur.expect('{');
  if (cur.accept('}')) {
    cur.finish();
    return SetPartition(k, {});
  }
  while (true) {
    Block block;
    do {
      int index = cur.integer();
      block.push_back(cur.accept('\'') ? primed(index) : unprimed(index));
    } while (cur.accept(','));
    cur.expect('}');
    blocks.push_back(std::move(block));
    if (!cur.accept('|')) break;
    cur.expect('{');
  }
  cur.finish();
  return SetPartition(k, std::move(blocks));
}

Element parse_element(std::string_view text, Family family, int ambient) {
  switch (family) {
    case Family::is:
      return parse_partial_injection(text, ambient);
    case Family::istar: {
      auto p = parse_set_partition(text, ambient);
      if (!is_dual_element(p)) throw std::invalid_argument("not an I*_k element: " + format(p));
      return p;
    }
    case Family::hat: {
      Cursor cur(text);
      if (cur.accept('0')) {
        cur.finish();
        return HatElement::zero(ambient);
      }
      auto p = parse_set_partition(text, ambient);
      if (!is_partial_dual_element(p)) throw std::invalid_argument("not a PI*_k element: " + format(p));
      return HatElement(std::move(p));
    }
    case Family::pistar:
    case Family::tilde: {
      auto p = parse_set_partition(text, ambient);
      if (!is_partial_dual_element(p)) throw std::invalid_argument("not a PI*_k element: " + format(p));
      return p;
    }
    case Family::composition:
      return parse_set_partition(text, ambient);
  }
  throw std::invalid_argument("unknown family");
}

std::string format(const PartialInjection& pi) {
  std::string out = "[";
  for (std::size_t d = 0; d < pi.images().size(); ++d) {
    if (d > 0) out += ',';
    int t = pi.images()[d];
    out += t == PartialInjection::undefined ? std::string("-") : std::to_string(t);
  }
  return out + "]";
}

std::string format(const SetPartition& p) {
  if (p.num_blocks() == 0) return "{}";
  std::string out;
  for (std::size_t b = 0; b < p.num_blocks(); ++b) {
    if (b > 0) out += '|';
    out += '{';
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i].index);
      if (block[i].side == Side::primed) out += '\'';
    }
    out += '}';
  }
  return out;
}

std::string format(const HatElement& a) { return a.is_zero() ? "0" : format(a.diagram()); }

std::string format(const Element& e) {
  return std::visit([](const auto& x) { return format(x); }, e);
}

}  // namespace rookdual
