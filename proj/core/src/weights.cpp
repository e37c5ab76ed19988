#include <cliffalg/error.hpp>
#include <cliffalg/weights.hpp>

#include <sstream>

namespace cliffalg {

void WeightMultiset::add(const Weight& w, long long mult) {
  if (mult == 0) return;
  if (mult < 0) {
    remove(w, -mult);
    return;
  }
  counts_[w] += mult;
}

void WeightMultiset::remove(const Weight& w, long long mult) {
  auto it = counts_.find(w);
  const long long have = it == counts_.end() ? 0 : it->second;
  if (have < mult) {
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : ",") + to_string(x);
    throw NotACharacter("weight (" + s + ") has multiplicity " + std::to_string(have) + ", cannot remove " +
                        std::to_string(mult));
  }
  if (have == mult)
    counts_.erase(it);
  else
    it->second -= mult;
}

long long WeightMultiset::multiplicity(const Weight& w) const {
  auto it = counts_.find(w);
  return it == counts_.end() ? 0 : it->second;
}

long long WeightMultiset::total() const {
  long long t = 0;
  for (const auto& [w, k] : counts_) t += k;
  return t;
}

std::string to_tsv(const WeightMultiset& W) {
  std::string out;
  for (const auto& [w, k] : W.counts()) {
    for (const auto& x : w) out += to_string(x) + "\t";
    out += std::to_string(k) + "\n";
  }
  return out;
}

WeightMultiset weights_from_tsv(const std::string& text) {
  WeightMultiset W;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    if (cells.empty()) continue;
    Weight w;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) w.push_back(parse_rational(cells[i]));
    long long k = 0;
    try {
      k = std::stoll(cells.back());
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad multiplicity \"" + cells.back() + "\"");
    }
    if (k <= 0) throw ParseError("line " + std::to_string(lineno) + ": multiplicity must be positive");
    W.add(w, k);
  }
  return W;
}

Weight negate(const Weight& w) {
  Weight r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = -w[i];
  return r;
}

}  // namespace cliffalg
