// Exhaustive list-coloring oracle.
//
// Independent of the structured algorithms: a plain backtracking search over
// the raw adjacency structure.  Used to freeze expected values in tests, to
// cross-check structured colorings, and as the fallback when an internal case
// gap fires.

#pragma once

#include <optional>

#include "crosscolor/lists.hpp"

namespace crosscolor {

struct OracleOptions {
    // Backtracking node budget; exceeded -> InternalError.  Generous default,
    // the instances this library handles stay far below it.
    long long node_budget = 200'000'000;
};

// Finds an L-coloring of the alive part of g, or nullopt when none exists.
// Deterministic: most-constrained vertex first (ties by id), colors ascending,
// with color-class symmetry breaking among globally unused colors.
std::optional<Coloring> oracle_color(const Graph& g, const ListAssignment& lists,
                                     const OracleOptions& opts = {});

bool oracle_colorable(const Graph& g, const ListAssignment& lists,
                      const OracleOptions& opts = {});

// Decides k-choosability of the alive part of g by enumerating list
// assignments in first-appearance canonical order.  Exponential; intended for
// tiny graphs in tests.  Returns a witness assignment with no L-coloring when
// the graph is not k-choosable.
struct ChoosabilityResult {
    bool choosable = true;
    ListAssignment bad_lists;  // populated when !choosable
    long long assignments_checked = 0;
};

ChoosabilityResult oracle_choosable(const Graph& g, int k, const OracleOptions& opts = {});

}  // namespace crosscolor
