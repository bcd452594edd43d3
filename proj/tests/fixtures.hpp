#pragma once

#include "kcrit/graph.hpp"

namespace fixture {

/// O(K_4, K_4) built by hand: x = 0, y = 1, the K_4 side is {2, 3} and the
/// split side is {4, 5, 6}.
inline auto ore_k4k4() -> kcrit::Graph
{
    return kcrit::Graph::from_edges(7, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
            {4, 5}, {4, 6}, {5, 6}, {0, 4}, {1, 5}, {1, 6}});
}

inline auto moser_spindle() -> kcrit::Graph
{
    return kcrit::Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
            {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
}

}
