#include "rowmotion/poset_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "rowmotion/errors.hpp"

namespace rowmotion {

namespace {

bool is_token_char(char c) {
  return !(c == '<' || c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n');
}

}  // namespace

Poset read_poset(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<std::pair<std::string, std::string>> covers;
  auto declare = [&](const std::string& name) {
    if (seen.emplace(name, labels.size()).second)
      labels.push_back(name);
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    // Tokenize into names separated by '<'.
    std::vector<std::string> names;
    std::size_t pos = 0;
    bool expect_name = true;
    bool any = false;
    while (pos < line.size()) {
      char c = line[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
        continue;
      }
      any = true;
      if (c == '<') {
        if (expect_name)
          throw ParseError("'<' without a lower element", line_no);
        expect_name = true;
        ++pos;
        continue;
      }
      if (!expect_name)
        throw ParseError("expected '<' before '" + line.substr(pos) + "'", line_no);
      std::size_t end = pos;
      while (end < line.size() && is_token_char(line[end]))
        ++end;
      names.push_back(line.substr(pos, end - pos));
      expect_name = false;
      pos = end;
    }
    if (!any)
      continue;
    if (expect_name)
      throw ParseError("dangling '<' at end of line", line_no);
    for (const auto& n : names)
      declare(n);
    for (std::size_t k = 0; k + 1 < names.size(); ++k)
      covers.emplace_back(names[k], names[k + 1]);
  }
  return Poset::from_cover_relations(std::move(labels), covers);
}

Poset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_poset(in);
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open poset file '" + path + "'");
  return read_poset(in);
}

std::string format_poset(const Poset& p) {
  std::string out;
  std::vector<bool> mentioned(p.size(), false);
  for (auto [lo, hi] : p.covers()) {
    out += p.label(lo) + " < " + p.label(hi) + "\n";
    mentioned[lo] = mentioned[hi] = true;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!mentioned[i])
      out += p.label(i) + "\n";
  return out;
}

}  // namespace rowmotion
