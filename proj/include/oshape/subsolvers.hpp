#pragma once

#include <cstdint>
#include <optional>

#include "oshape/conditions.hpp"
#include "oshape/path.hpp"
#include "oshape/shape.hpp"

namespace oshape {

enum class Side : std::uint8_t { Left, Right, Top, Bottom };
const char* to_string(Side s);
Side side_after(Side s, Sym sym);  // where a side lands under a box symmetry

// Extra requirement a caller may place on a constructed Hamiltonian path:
// the path must contain at least one boundary edge lying on `side`
// (both endpoints on that boundary line). Used to expose a parallel edge
// toward an adjacent piece before a combinator merge.
struct EdgeConstraint {
    Side side;
};

// Vertex threshold below which the constraint-aware exhaustive search may be
// used as a fallback when the structured constructions decline an instance.
inline constexpr int kFallbackVertexThreshold = 20;

// Thrown when a structured construction fails above the fallback threshold;
// indicates an implementation gap, never a valid runtime outcome.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Budgeted exhaustive Hamiltonian (s,t)-path search with optional forced
// edges and side constraint. Independent of the oracle module.
struct SearchRequest {
    const ShapeSpec* spec = nullptr;
    GridPoint s, t;
    std::vector<GridEdge> forced_edges;
    std::optional<Side> side_edge;
    std::uint64_t budget = 40'000'000;
};
std::optional<PathSeq> exact_hamiltonian_search(const SearchRequest& req);

// Budgeted exhaustive longest-path search (construction fallback at desk
// scale; separate from the oracle implementations).
PathSeq exact_longest_search(const ShapeSpec& spec, GridPoint s, GridPoint t,
                             std::uint64_t budget = 80'000'000);

// Canonical Hamiltonian cycle of R(m,n): flat faces on all boundaries except
// `concave`, which still carries at least one boundary edge. For 3-row/col
// rectangles the concave side must be a longer boundary.
PathSeq rect_hamiltonian_cycle(int m, int n, Side concave);

// Canonical Hamiltonian (s,t)-path of R(m,n); requires that condition F1
// fails. Contains at least one boundary edge of every boundary whenever the
// instance admits it.
PathSeq rect_hamiltonian_st_path(int m, int n, GridPoint s, GridPoint t);

// Lemma-3 contract: Hamiltonian (s,t)-path of R(m,n), m >= 3, n >= 2,
// containing edge ((2,1),(3,1)) when F7 holds and edge ((1,1),(2,1)) otherwise,
// where F7 is: n = 2 and {s,t} in {{(1,1),(2,1)},{(1,1),(2,2)},{(2,1),(1,2)}},
// or n >= 3 and {s,t} = {(1,1),(2,1)}.
bool rect_f7_holds(int m, int n, GridPoint s, GridPoint t);
PathSeq rect_hp_forced_first_edge(int m, int n, GridPoint s, GridPoint t);

// Lemma-4 contract: Hamiltonian (s,t)-path of R(m,3) containing the two
// last-column boundary edges ((m,1),(m,2)) and ((m,2),(m,3)); requires that
// neither endpoint lies in column m.
PathSeq rect3_hp_forced_boundary_edges(int m, GridPoint s, GridPoint t);

// Hamiltonian cycle of an L- or C-shaped piece with a flat face on the
// requested full straight boundary. Fails (throws) under F8/F9.
PathSeq lc_hamiltonian_cycle(const ShapeSpec& spec, Side flat);

// Hamiltonian (s,t)-path of an R/L/C piece; requires check_rlc_forbidden to
// return nullopt. An optional constraint requests a boundary edge on a side.
PathSeq lc_hamiltonian_st_path(const ShapeSpec& spec, GridPoint s, GridPoint t,
                               std::optional<EdgeConstraint> constraint = {});

// Longest (s,t)-path of an R/L/C piece; length matches the brute-force
// maximum (checked exhaustively at desk scale).
PathSeq rlc_longest_st_path(const ShapeSpec& spec, GridPoint s, GridPoint t);

// Helpers shared with the O-level solver.
namespace detail {

// Hamiltonian path across a 2-row or 2-column strip between any two cells in
// the extreme ranks; the zigzag phase is free, so any entry/exit pair works.
PathSeq strip2_path(int len, bool horizontal, GridPoint from, GridPoint to);

// Hamiltonian path of R(m,n) whose endpoints are the two corners of one
// side (works for every m,n >= 1 where the corners differ).
PathSeq rect_corner_to_corner_same_side(int m, int n, Side side);

bool path_has_side_edge(const PathSeq& p, const ShapeSpec& spec, Side side);

}  // namespace detail

}  // namespace oshape
