#pragma once

// Seeds for the 3-connected family at k = 4 and k = 5. Copies of
// data/seed_k4.el and data/seed_k5.el; the test suite checks they match.

#include <vector>

namespace kcrit {

inline auto builtin_seeds() -> const std::vector<FamilySeed> &
{
    static const std::vector<FamilySeed> seeds = {
        {4, R"(8 13
0 1
0 2
0 3
0 7
1 2
1 3
1 7
2 4
3 5
4 5
4 6
5 6
6 7
)", 2, 3, {{2, 4}}, {}},
        {5, R"(10 22
0 1
0 2
0 3
0 4
0 9
1 2
1 3
1 4
1 9
2 3
2 4
2 9
3 5
3 7
4 6
5 6
5 7
5 8
6 7
6 8
7 8
8 9
)", 3, 4, {{3, 5}}, {}},
    };
    return seeds;
}

}
