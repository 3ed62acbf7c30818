#include "guess/topology.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "guess/error.hpp"

namespace guess {

void TopologySpec::set(Nat i, Nat j, FinitePrefix p) { entries_[{i, j}] = std::move(p); }

Nat TopologySpec::row_count() const {
  Nat rows = 0;
  for (const auto& [key, _] : entries_) rows = std::max(rows, key.first + 1);
  return rows;
}

Nat TopologySpec::column_count() const {
  Nat cols = 0;
  for (const auto& [key, _] : entries_) cols = std::max(cols, key.second + 1);
  return cols;
}

const FinitePrefix& TopologySpec::lookup(Nat i, Nat j) const {
  if (i >= row_count()) return whole_space_;
  auto it = entries_.find({i, j});
  return it == entries_.end() ? default_ : it->second;
}

Nat TopologySpec::tau(std::span<const Nat> tuple) const {
  if (tuple.size() < 2) return 0;
  const auto& want = lookup(tuple[0], tuple[1]).entries();
  auto rest = tuple.subspan(2);
  return std::equal(rest.begin(), rest.end(), want.begin(), want.end()) ? 1 : 0;
}

bool TopologySpec::contains(SequenceOracle& o) const {
  // Every row is a union over all columns; columns at or beyond column_count()
  // all use the default, so one representative suffices.
  const Nat rows = row_count();
  for (Nat i = 0; i < rows; ++i) {
    bool row_hit = false;
    for (Nat j = 0; j <= column_count() && !row_hit; ++j) {
      const auto& p = lookup(i, j);
      bool extends = true;
      for (std::size_t k = 0; k < p.size() && extends; ++k) extends = o.query(k) == p[k];
      row_hit = extends;
    }
    if (!row_hit) return false;
  }
  return true;
}

namespace {

FinitePrefix parse_values(const std::string& text, std::size_t lineno) {
  FinitePrefix out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw ParseError("empty value in list", lineno, 1);
    }
    auto e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    std::size_t pos = 0;
    Nat v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item[0] == '-') throw ParseError("bad natural '" + item + "'", lineno, 1);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TopologySpec TopologySpec::parse(std::istream& in) {
  TopologySpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':'", lineno, 1);
    std::istringstream head(line.substr(0, colon));
    std::vector<std::string> words;
    for (std::string w; head >> w;) words.push_back(w);
    auto values = parse_values(line.substr(colon + 1), lineno);
    if (words.size() == 1 && words[0] == "default") {
      spec.set_default(std::move(values));
    } else if (words.size() == 2) {
      Nat ij[2];
      for (int k = 0; k < 2; ++k) {
        std::size_t pos = 0;
        try {
          ij[k] = std::stoull(words[k], &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != words[k].size() || words[k][0] == '-') throw ParseError("bad index '" + words[k] + "'", lineno, 1);
      }
      spec.set(ij[0], ij[1], std::move(values));
    } else {
      throw ParseError("expected '<i> <j> : values' or 'default : values'", lineno, 1);
    }
  }
  return spec;
}

}  // namespace guess
