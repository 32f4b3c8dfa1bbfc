#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oshape/path.hpp"
#include "oshape/shape.hpp"

namespace oshape {

// Hard cap on oracle instance size (vertices). Overridable via the
// SOLVER_ORACLE_CAP environment variable, read once per process.
int oracle_cap();

struct BruteResult {
    int length = 0;       // vertices on the best path found
    PathSeq witness;      // lexicographically first maximum by neighbor order
    bool exhausted = true;  // false when the step budget ran out
};

// Exact longest (s,t)-path by depth-first search over bitset visited state
// with reachability pruning. Deterministic. Throws on |V| > cap.
BruteResult brute_longest_path(const ShapeSpec& spec, GridPoint s, GridPoint t,
                               std::uint64_t budget = 0);

// Exact Hamiltonian (s,t)-path existence by dynamic programming over
// (visited set, current vertex). Throws on |V| > cap (cap + 4 at most 24).
bool brute_hamiltonian_exists(const ShapeSpec& spec, GridPoint s, GridPoint t);

// Same DP run, but reporting the maximum path length to every target at once.
// Used to cross-validate the DFS oracle.
std::vector<int> dp_longest_from(const ShapeSpec& spec, GridPoint s);
int dp_longest_path(const ShapeSpec& spec, GridPoint s, GridPoint t);

struct InstanceFilter {
    int max_vertices = 16;
    int max_m = 64;
    int max_n = 64;
    bool rect = false, lshape = false, cshape = false, oshape = true;
};

// Every valid spec within bounds, lexicographic on (kind, m, n, k, l, a, c).
std::vector<ShapeSpec> enumerate_specs(const InstanceFilter& f);

// Unordered endpoint pairs of a spec, lexicographic.
void for_each_endpoint_pair(const ShapeSpec& spec,
                            const std::function<void(GridPoint, GridPoint)>& fn);

}  // namespace oshape
