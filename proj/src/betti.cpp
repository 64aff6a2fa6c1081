#include "syzlab/betti.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "syzlab/errors.hpp"

namespace syz {

long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  if (it == entries.end())
    throw RangeTooSmall("Betti cell (" + std::to_string(i) + "," + std::to_string(j) + ") was not computed");
  return it->second;
}

bool BettiTable::same_cells(const BettiTable& o) const {
  return imax == o.imax && jmax == o.jmax && entries == o.entries;
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j;
  j["path"] = path;
  j["field"] = field.label();
  if (heuristic()) j["heuristic"] = true;
  j["imax"] = imax;
  j["jmax"] = jmax;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [ij, k] : entries) {
    nlohmann::ordered_json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["k"] = k;
    j["entries"].push_back(e);
  }
  return j.dump();
}

std::string BettiTable::to_pretty() const {
  std::ostringstream out;
  int width = 3;
  for (const auto& [ij, k] : entries) width = std::max<int>(width, static_cast<int>(std::to_string(k).size()) + 1);
  out << path << " over " << field.label() << (heuristic() ? " (heuristic)" : "") << "\n";
  out << "     ";
  for (int i = 0; i <= imax; ++i) {
    std::string s = std::to_string(i);
    out << std::string(width - s.size(), ' ') << s;
  }
  out << "\n";
  for (int j = 0; j <= jmax; ++j) {
    std::string s = std::to_string(j) + ":";
    out << s << std::string(5 - std::min<std::size_t>(5, s.size()), ' ');
    for (int i = 0; i <= imax; ++i) {
      auto it = entries.find({i, j});
      std::string c = it == entries.end() ? "?" : it->second == 0 ? "." : std::to_string(it->second);
      out << std::string(width - c.size(), ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

std::string BettiTable::to_tsv() const {
  std::ostringstream out;
  out << "i\tj\tk\n";
  for (const auto& [ij, k] : entries) out << ij.first << "\t" << ij.second << "\t" << k << "\n";
  return out.str();
}

namespace {

int top_row(const BettiTable& b) {
  int top = -1;
  for (const auto& [ij, k] : b.entries)
    if (k != 0) top = std::max(top, ij.second);
  return top;
}

}  // namespace

int regularity_from_betti(const BettiTable& b) {
  int top = top_row(b);
  if (top >= b.jmax)
    throw RangeTooSmall("nonzero Betti number on the last computed row j = " + std::to_string(b.jmax));
  if (b.nvars > 0 && b.imax < b.nvars)
    throw RangeTooSmall("window stops at i = " + std::to_string(b.imax) + " before the projective dimension bound " +
                        std::to_string(b.nvars));
  for (int i = 0; i <= b.imax; ++i)
    for (int j = 0; j <= b.jmax; ++j)
      if (!b.has(i, j)) throw RangeTooSmall("window has holes");
  return top + 1;
}

NpVerdict np_from_betti(const BettiTable& b, bool linearly_normal) {
  if (b.jmax < 3) throw RangeTooSmall("N_p needs rows j <= 3");
  NpVerdict v;
  if (linearly_normal && b.at(0, 1) != 0) return v;
  for (int i = 0; i <= b.imax; ++i) {
    for (int j = 2; j <= b.jmax; ++j)
      if (b.at(i, j) != 0) return v;
    v.p = i;
  }
  v.all_computed = true;
  return v;
}

}  // namespace syz
