#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oshape/canonical.hpp"
#include "oshape/shape.hpp"

namespace oshape {

// Connectivity probes, decided by breadth-first search over the shape.
bool is_cut_vertex(const ShapeSpec& spec, GridPoint v);
bool is_vertex_cut_pair(const ShapeSpec& spec, GridPoint s, GridPoint t);
// Size of the largest connected component of the shape minus {s, t}.
int largest_component_without(const ShapeSpec& spec, GridPoint s, GridPoint t);

// Forbidden conditions for rectangular, L- and C-shaped pieces.
enum class RlcCondition : std::uint8_t { F1, F2, F3, F4, F5, F6 };
const char* to_string(RlcCondition c);

std::optional<RlcCondition> check_rlc_forbidden(const ShapeSpec& spec, GridPoint s,
                                                GridPoint t);

// Classification labels for O-shape instances. O0 means no forbidden
// condition holds (a Hamiltonian (s,t)-path exists); the rest follow the
// Hamiltonicity conditions F1/F10-F13 and the longest-path cases O1-O4.
enum class ConditionClass : std::uint8_t {
    O0,
    O1,
    O2,
    O3,
    O4a,
    O4b,
    F11,
    F12_1,
    F12_2,
    F13_1_1,
    F13_1_2,
    F13_1_3,
    F13_2_1,
    F13_2_2,
    F13_2_3,
    F13_3,
    F1,
    F10_1,
    F10_2,
};
const char* to_string(ConditionClass c);

// Whether the class forbids a Hamiltonian (s,t)-path (everything except O0).
inline bool forbids_hamiltonian(ConditionClass c) { return c != ConditionClass::O0; }

struct Verdict {
    ConditionClass cls = ConditionClass::O0;
    // The orientation in which the condition fired. `frame` maps original
    // coordinates into it; `fs`/`ft` play the roles the condition names s/t.
    ShapeSpec frame_spec;
    SymmetryTransform frame;
    GridPoint fs, ft;
    bool s_role_swapped = false;  // fs is the image of the original t
    std::vector<std::pair<std::string, GridPoint>> witnesses;  // frame coordinates

    std::string describe() const;
};

// Existence test: nullopt iff a Hamiltonian (s,t)-path exists (Theorem-7
// contract, verified exhaustively against the oracle at desk scale).
std::optional<Verdict> check_o_forbidden(const ShapeSpec& spec, GridPoint s, GridPoint t);

// Full longest-path case classification (always produces a class).
Verdict classify_longest_case(const ShapeSpec& spec, GridPoint s, GridPoint t);

}  // namespace oshape
