#include "satlattice/text.hpp"

#include <vector>

namespace satlattice {

namespace {

char element_char(int e) {
  return e <= 9 ? static_cast<char>('0' + e) : static_cast<char>('a' + (e - 10));
}

// -1 if c does not name an element.
int element_value(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'k') return c - 'a' + 10;
  return -1;
}

constexpr std::string_view kEmptySetUtf8 = "\xe2\x88\x85";  // ∅

}  // namespace

std::string render_set(SetWord s) {
  if (s == 0) return "0";
  std::string out;
  for (int e : elements_of(s)) out.push_back(element_char(e));
  return out;
}

std::string render_family(const Family& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += render_set(f.members()[i]);
  }
  return out;
}

namespace {

SetWord parse_set_at(std::string_view token, int n, std::size_t base) {
  if (token.empty()) throw ParseError("empty set token", base);
  if (token == "0" || token == kEmptySetUtf8) return 0;
  SetWord s = 0;
  for (std::size_t i = 0; i < token.size(); ++i) {
    int e = element_value(token[i]);
    if (e < 0)
      throw ParseError(std::string("unexpected character '") + token[i] + "' in set",
                       base + i);
    if (e > n)
      throw ParseError("element " + std::to_string(e) + " exceeds ground size " +
                           std::to_string(n),
                       base + i);
    if (has_element(s, e))
      throw ParseError("duplicate element " + std::to_string(e) + " in set", base + i);
    s |= singleton(e);
  }
  return s;
}

}  // namespace

SetWord parse_set(std::string_view token, int n) {
  require_ground_size(n);
  return parse_set_at(token, n, 0);
}

Family parse_family(std::string_view text, int n) {
  require_ground_size(n);
  std::vector<SetWord> members;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t lo = pos, hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    members.push_back(parse_set_at(text.substr(lo, hi - lo), n, lo));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Family(n, std::move(members));
}

}  // namespace satlattice
