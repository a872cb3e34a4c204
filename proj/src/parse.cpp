#include "jordkit/parse.hpp"

#include <charconv>
#include <stdexcept>

namespace jordkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_positive(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::pair<std::string_view, int> split_block(std::string_view tok) {
  auto colon = tok.rfind(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("expected <label>:<m>, got '" + std::string(tok) + "'");
  auto id = trim(tok.substr(0, colon));
  int m = parse_positive(trim(tok.substr(colon + 1)), "block length");
  if (id.empty() || m < 1) throw std::invalid_argument("expected <label>:<m>, got '" + std::string(tok) + "'");
  return {id, m};
}

}  // namespace

GroupFamily parse_family(std::string_view text) {
  text = trim(text);
  GroupFamily f;
  std::string_view digits;
  if (text.starts_with("Sp")) {
    f.series = Series::Sp;
    digits = text.substr(2);
  } else if (text.starts_with("SO")) {
    f.series = Series::SO_odd;
    digits = text.substr(2);
  } else {
    throw std::invalid_argument("family must be Sp<n> or SO<n>, got '" + std::string(text) + "'");
  }
  f.rank = parse_positive(digits, "rank");
  return f;
}

JordanSet parse_blocks(std::string_view text, const LabelTable& labels) {
  text = trim(text);
  std::vector<JordanBlock> blocks;
  if (text.empty()) return JordanSet{};
  for (auto tok : split(text, ',')) {
    auto [id, m] = split_block(tok);
    blocks.push_back(JordanBlock{labels.at(id), m});
  }
  return JordanSet(std::move(blocks));
}

FamilyJordan parse_jordan(std::string_view text, const LabelTable& labels) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("Jordan set must start with '<family><rank>:', got '" + std::string(text) + "'");
  return {parse_family(text.substr(0, colon)), parse_blocks(text.substr(colon + 1), labels)};
}

std::string format_jordan(const GroupFamily& fam, const JordanSet& j) {
  std::string s = fam.name() + ":";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : " ") + to_string(j[i]);
  return s;
}

Subset parse_element(const JordanSet& j, std::string_view text) {
  text = trim(text);
  if (text == "1") return 0;
  Subset e = 0;
  for (auto tok : split(text, '*')) {
    auto [id, m] = split_block(tok);
    auto idx = j.index_of(id, m);
    if (!idx) throw std::invalid_argument("block " + std::string(id) + ":" + std::to_string(m) + " is not in the Jordan set");
    auto b = gf2::bit(static_cast<int>(*idx));
    if (e & b) throw std::invalid_argument("block repeated in element '" + std::string(text) + "'");
    e |= b;
  }
  return e;
}

std::vector<Subset> parse_basis(const JordanSet& j, std::string_view text) {
  std::vector<Subset> out;
  for (auto tok : split(text, ';')) out.push_back(parse_element(j, tok));
  return out;
}

}  // namespace jordkit
