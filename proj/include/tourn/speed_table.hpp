#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourn/canon.hpp"

namespace tourn {

/// Canonical forms of the n-vertex members of a hereditary property, per n.
/// Each level is sorted and duplicate-free.
struct SpeedTable {
  std::string seed;
  int max_seed_size = 0;
  std::map<int, std::vector<CanonicalForm>> levels;

  bool has(int n) const { return levels.count(n) != 0; }
  const std::vector<CanonicalForm>& at(int n) const {
    auto it = levels.find(n);
    if (it == levels.end())
      throw std::out_of_range("SpeedTable: level " + std::to_string(n) + " not computed");
    return it->second;
  }
  std::uint64_t count(int n) const { return at(n).size(); }
  int max_level() const { return levels.empty() ? 0 : levels.rbegin()->first; }
  bool contains(const CanonicalForm& f) const {
    auto it = levels.find(f.size());
    return it != levels.end() &&
           std::binary_search(it->second.begin(), it->second.end(), f);
  }
};

}  // namespace tourn
