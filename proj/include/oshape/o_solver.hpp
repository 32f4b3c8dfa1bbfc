#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oshape/conditions.hpp"
#include "oshape/path.hpp"
#include "oshape/shape.hpp"
#include "oshape/subsolvers.hpp"

namespace oshape {

struct SubproblemRecord {
    std::string role;   // which part of the assembly the piece played
    ShapeSpec spec;
    GridPoint from, to;
};

struct SolveResult {
    Verdict verdict;
    std::optional<PathSeq> path;
    int bound = 0;  // upper bound on the longest (s,t)-path length
    std::vector<SubproblemRecord> trace;
};

// Hamiltonian cycle; every valid O-shape has one. When a = 1 the restriction
// to the leftmost column is a flat face.
PathSeq o_hamiltonian_cycle(const ShapeSpec& spec);

// Hamiltonian (s,t)-path, or nullopt exactly when check_o_forbidden fires.
std::optional<PathSeq> o_hamiltonian_st_path(const ShapeSpec& spec, GridPoint s,
                                             GridPoint t);

// The longest-path upper bound together with the verdict it was derived from.
std::pair<int, Verdict> upper_bound(const ShapeSpec& spec, GridPoint s, GridPoint t);

// Longest (s,t)-path; the returned path length always equals the bound.
SolveResult o_longest_st_path(const ShapeSpec& spec, GridPoint s, GridPoint t);

}  // namespace oshape
