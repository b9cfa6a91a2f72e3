#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arp/coloring.hpp"

// Rainbow path detection in edge-colored graphs: exact backtracking and a
// randomized color-coding accelerator, plus certificate validation.

namespace arp {

// Path on k distinct vertices whose k-1 edge colors are pairwise distinct.
struct RainbowCertificate {
  std::vector<int> vertices;
  std::vector<int> colors;
};

// Exact detector: backtracking over partial paths carrying the used color
// set, branching by ascending vertex id. Returns the first witness found,
// so results are deterministic.
std::optional<RainbowCertificate> find_rainbow_path_exact(
    const EdgeColoring& col, int k);

// One-sided randomized detector: per iteration, colors are hashed into
// k-1 buckets and a (vertex, bucket-subset) dynamic program searches for
// a path with pairwise-distinct edge buckets (which forces distinct
// colors). A nullopt does not prove absence; per-iteration success on a
// positive instance is at least (k-1)!/(k-1)^(k-1).
std::optional<RainbowCertificate> find_rainbow_path_colorcoding(
    const EdgeColoring& col, int k, int iterations, std::uint64_t seed);

// Iteration count giving >= 99% success on positive instances.
int default_colorcoding_iterations(int k);

// True iff cert is a genuine rainbow path of col.
bool validate_certificate(const EdgeColoring& col,
                          const RainbowCertificate& cert);

}  // namespace arp
