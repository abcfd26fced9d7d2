#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tourn {

enum class WitnessKind { kType1FlavorA, kType1FlavorB, kType2, kTransitive, kEmbedding };

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kType1FlavorA: return "type1-flavorA";
    case WitnessKind::kType1FlavorB: return "type1-flavorB";
    case WitnessKind::kType2: return "type2";
    case WitnessKind::kTransitive: return "transitive";
    case WitnessKind::kEmbedding: return "embedding";
  }
  return "unknown";
}

/// Host vertices realizing a pattern. For structures the order is
/// x_1..x_2k followed by the y vertices; for embeddings entry i is the image
/// of pattern vertex i; for transitive sets the chain order (source first).
struct StructureWitness {
  WitnessKind kind = WitnessKind::kEmbedding;
  std::vector<int> assignment;
};

}  // namespace tourn
