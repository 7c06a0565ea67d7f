#pragma once

#include <optional>
#include <vector>

#include "trop/plfunction.hpp"

namespace trop {

// Distance to a nonempty closed subgraph; piecewise linear with slopes in
// {-1, 0, +1}.
PLFunction dist_to_subgraph(GraphPtr g, const ClosedSubgraph& sub);

// x -> -min(l, dist(x, sub)).  Requires sub nonempty and proper, l > 0.
PLFunction chip_firing_function(GraphPtr g, const ClosedSubgraph& sub, const Rat& l);

// Largest l such that firing sub by l moves every boundary chip without any
// chip passing a branch point, another chip, or a returning front.  Returns
// nullopt when some boundary point of sub lacks enough chips to fire at all.
std::optional<Rat> can_fire(GraphPtr g, const Divisor& d, const ClosedSubgraph& sub);

// A function taking exactly two values on its corner set: `high_value` on the
// level set `high` and `high_value - drop` on `low`.
struct WeightedChipFiringMove {
    ClosedSubgraph low, high;
    Rat high_value;
    Rat drop;  // > 0
    PLFunction f;

    static WeightedChipFiringMove from_function(const PLFunction& f);
};

// Splits f into weighted moves whose functions sum to f - max(f).
std::vector<WeightedChipFiringMove> decompose_function(const PLFunction& f);

// Splits a weighted move into simple moves of common unit depth; the returned
// functions sum to m.f - m.high_value.
std::vector<PLFunction> decompose_weighted_move(const WeightedChipFiringMove& m);

}  // namespace trop
