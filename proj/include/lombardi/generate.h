#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lombardi/drawing.h"
#include "lombardi/tree.h"

namespace lombardi {

// SplitMix64; the documented PRNG so seeds are portable across
// implementations.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
    double uniform01() { return (next() >> 11) * 0x1.0p-53; }
};

enum class TreeFamily { Path, Star, Kary, Random, FibonacciCaterpillar };

struct GenSpec {
    TreeFamily family = TreeFamily::Random;
    int n = 1;          // node count (path, star, kary, random)
    int k = 1;          // spine length (caterpillar)
    int arity = 2;      // kary
    uint64_t seed = 0;  // random
    bool ordered = false;
};

TreeFamily family_from_name(const std::string& s);

// Caterpillar: k-vertex spine, each spine vertex carrying 3 leaves on the
// same cyclic side between the spine edges; n = 4k, always ordered.
// Random: node i attaches to a uniform parent among 0..i-1 (SplitMix64).
Tree gen(const GenSpec& spec);

struct SpiralDemoRow {
    int k = 0;
    int n = 0;
    double enclosing_radius = 0.0;
    double min_vertex_distance = 0.0;
    double area_ratio = 0.0;
};

struct SpiralDemoResult {
    std::vector<Drawing> drawings;  // one per k in [2, kmax]
    std::vector<Tree> trees;
    std::vector<SpiralDemoRow> rows;
};

// Greedy perfect-resolution straight-line drawing of the ordered Fibonacci
// caterpillar: double spiral grown from the spine midpoint, each edge length
// maximized by binary search against the crossing checks. Demonstrates the
// exponential growth of the area ratio.
SpiralDemoResult spiral_demo(int kmax);
Drawing spiral_demo_single(const Tree& caterpillar);

}  // namespace lombardi
