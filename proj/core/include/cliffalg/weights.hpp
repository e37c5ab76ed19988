#pragma once

#include <cliffalg/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace cliffalg {

using Weight = std::vector<Rational>;

/// Weights with positive multiplicities.
class WeightMultiset {
 public:
  using Map = std::map<Weight, long long>;

  void add(const Weight& w, long long mult = 1);
  /// Removes `mult` copies; throws NotACharacter if not enough are present.
  void remove(const Weight& w, long long mult = 1);

  long long multiplicity(const Weight& w) const;
  /// Sum of multiplicities.
  long long total() const;
  /// Number of distinct weights.
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  const Map& counts() const noexcept { return counts_; }

  /// Image under a coordinatewise map.
  template <class F>
  WeightMultiset map(F&& f) const {
    WeightMultiset r;
    for (const auto& [w, k] : counts_) r.add(f(w), k);
    return r;
  }

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  Map counts_;
};

/// One weight per line: tab-separated coordinates followed by the multiplicity.
std::string to_tsv(const WeightMultiset& W);
WeightMultiset weights_from_tsv(const std::string& text);

Weight negate(const Weight& w);

}  // namespace cliffalg
