#pragma once

#include "unistoch/count_tables.hpp"

#include <map>
#include <utility>
#include <vector>

namespace unistoch {

/// Frozen expected values of the small orbit-count tables, used as golden
/// data by the verification suite and the CLI table checker. Rows are
/// m = 1.., columns follow the canonical partition order.
inline const std::map<std::pair<TableFamily, int>, std::vector<std::vector<long long>>>&
reference_tables() {
    static const std::map<std::pair<TableFamily, int>, std::vector<std::vector<long long>>> tables = {
        {{TableFamily::FU, 2}, {{1, 2}, {1, 0}}},
        {{TableFamily::FU, 3}, {{5, 12, 9}, {0, 6, 3}, {1, 0, 0}}},
        {{TableFamily::FU, 4},
         {{16, 112, 50, 144, 104}, {7, 20, 20, 44, 40}, {0, 12, 2, 4, 0}, {1, 0, 0, 0, 0}}},

        {{TableFamily::FO, 2}, {{2, 6}, {1, 0}}},
        {{TableFamily::FO, 3}, {{14, 78, 108}, {0, 12, 12}, {1, 0, 0}}},
        {{TableFamily::FO, 4},
         {{88, 1136, 1112, 3072, 4576}, {16, 100, 140, 272, 464}, {0, 24, 8, 16, 0}, {1, 0, 0, 0, 0}}},

        {{TableFamily::FAI, 2}, {{6, 14}, {2, 2}}},
        {{TableFamily::FAI, 3}, {{38, 234, 320}, {9, 51, 60}, {1, 3, 4}}},
        {{TableFamily::FAI, 4},
         {{306, 3800, 3862, 10312, 15608},
          {67, 724, 689, 1820, 2636},
          {10, 80, 54, 152, 184},
          {1, 4, 3, 4, 4}}},

        {{TableFamily::FAII, 2}, {{-2, 2}, {2, -2}}},
        {{TableFamily::FAII, 3}, {{-2, 6, -4}, {3, -9, 6}, {-1, 3, -2}}},
        {{TableFamily::FAII, 4},
         {{-14, 72, -42, -88, 72}, {11, -44, 33, 44, -44}, {2, -24, 6, 40, -24}, {1, -4, 3, 4, -4}}},

        {{TableFamily::FAIII, 1}, {{1, 1}}},
        {{TableFamily::FAIII, 2}, {{1, 6, 1, 8, 4}, {0, 0, 2, 0, 2}}},
        {{TableFamily::FAIII, 3},
         {{1, 15, 39, 11, 40, 96, 30, 84, 66, 120, 90},
          {0, 0, 6, 3, 0, 24, 9, 6, 21, 24, 27},
          {0, 0, 0, 1, 0, 0, 1, 0, 3, 0, 3}}},

        {{TableFamily::FBDI, 1}, {{1, 2}, {0, 0}}},
        {{TableFamily::FBDI, 2},
         {{1, 12, 9, 32, 42}, {0, 0, 3, 0, 6}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}},
    };
    return tables;
}

} // namespace unistoch
