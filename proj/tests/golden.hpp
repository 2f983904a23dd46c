#pragma once

// Rows of the published ugly-number and maximal-value tables for {1,S,*}.

#include <cstdint>
#include <string_view>

namespace minrep::golden {

struct UglyRow {
    std::uint64_t n;
    std::string_view witness;
    unsigned complexity;
    bool prime;
};

inline constexpr UglyRow kUglyRows[] = {
    {10, "S*SS1SS1", 8, false},
    {11, "SS*SS1SS1", 9, true},
    {14, "SS*SS1SSS1", 10, false},
    {19, "S*S1*SS1SS1", 11, true},
    {22, "SS*SSS1SSSS1", 12, false},
    {23, "SSS*SSS1SSSS1", 13, true},
    {38, "SS*SS1*SS1SSS1", 14, false},
    {43, "S*S1S*SSS1SSSS1", 15, true},
    {58, "S*SS1S*S1*SS1SS1", 16, false},
    {59, "SS*SS1S*S1*SS1SS1", 17, true},
    {89, "S*S1*SSS1SS*SS1SS1", 18, true},
    {107, "SS*SS1*SSSS1SSSSSS1", 19, true},
    {134, "SS*SS1*SSS1SS*SS1SS1", 20, false},
    {167, "SS*SS1S*S1*SS1*SS1SS1", 21, true},
    {179, "SSS*SSS1*SSS1SS*SS1SS1", 22, true},
    {263, "SSS*SSS1S*SSS1*SSS1SSS1", 23, true},
    {347, "SS*SSSS1S*SSS1S*SSS1SSS1", 24, true},
    {383, "SSS*SSS1*SSSS1S*S1*SS1SS1", 25, true},
    {537, "S*S1*SSS1SSS*SSS1*SSS1SSS1", 26, false},
    {713, "SS*SS1*SS1S*S1*SS1S*SS1SSS1", 27, false},
    {719, "SS*SS1S*S1*SSSSSS1S*SSS1SSS1", 28, true},
    {1103, "SSS*SSS1*SSSS1S*S1*SS1*SS1SS1", 29, true},
    {1319, "SSS*SSS1S*SSS1S*SS1*SS1*SS1SS1", 30, true},
    {1439, "SS*SS1SS*SS1*SS1S*SSS1S*SS1SSS1", 31, true},
    {2099, "SSS*SSS1*SSS1S*S1S*SSS1*SSS1SSS1", 32, true},
    {2879, "SS*SS1*SSSSSS1SS*SS1*SS1*SS1SSSS1", 33, true},
    {3833, "SSS*SSSS1S*SS1*SS1*SSSS1S*SSS1SSS1", 34, true},
    {4283, "SSS*SSSS1S*SS1*SS1*SSSS1S*S1*SS1SS1", 35, true},
    {5939, "SSS*SSS1*SSS1S*S1*SSSS1S*SS1*SS1SSS1", 36, true},
    {6299, "SSS*SSS1S*S*SS1SSS1S*S1*SS1*SSS1SSSS1", 37, true},
    {9059, "SSS*SSS1*SSS1S*SSSS1S*SSS1S*SS1*SS1SS1", 38, true},
    {12239, "SSS*SSS1*SSSSSS1S*SSS1S*SS1*SS1*SS1SSS1", 39, true},
    {15118, "SS*SSS1S*S1S*SSS1*SSS1S*SS1*SS1S*SS1SSS1", 40, false},
    {19079, "SSSS*SSSS1*SSSS1*SSSSSS1S*SS1*SS1*SS1SSS1", 41, true},
    {23039, "SSSS*SSSS1*S*SSS1SSS1S*S1*SS1*SS1*SS1SSSS1", 42, true},
    {26459, "SSSS*SSSS1*SS*SS1SS1S*S1*SS1*SSS1*SSS1SSSS1", 43, true},
    {44879, "SS*SS1S*S1*SS1*SS1*SS1S*S1*SS1S*SS1*SS1SSSS1", 44, true},
    {49559, "SSSS*SSSS1*SS*SS1SS1S*SS1*SS1*SSS1*SSSS1SSSS1", 45, true},
    {66239, "SSS*SSS1S*S1*S*SSS1SSS1S*S1*SS1*SS1*SS1*SS1SS1", 46, true},
    {78839, "SSS*SSS1S*SSS1*S*SS1SSS1S*S1*SS1*SS1S*SSS1SSSS1", 47, true},
    {98999, "SS*SS1SS*S*SSS1SSS1S*SSS1*SSSS1S*S1*SS1*SSS1SSS1", 48, true},
    {137339, "SSSS*SSSS1*SS*SS1SS1S*SS1*SSS1*SSS1*SSS1S*SS1SSS1", 49, true},
    {172583, "SSS*SSS1S*S1*SSS1S*SSS1*SSS1S*SS1*SSS1S*SS1*SS1SS1", 50, true},
    {228479, "SSSS*SSSS1*SSSS1*S*SS1SSS1S*S1*SS1*SS1*SS1S*SS1SSS1", 51, true},
    {280223, "SSS*SSS1*SSSS1S*S1*SSSS1S*S1*SSS1*SSSS1*SSSS1SSSSSS1", 52, true},
    {355679, "SSS*SSS1S*S*SS1*SS1SSSS1S*SS1*SSS1S*S1*SSS1*SSS1SSSS1", 53, true},
    {460079, "SSSS*SSSS1*SSSS1*SSSSSS1S*SS1*SS1*SSS1S*S1*SS1*SS1SSS1", 54, true},
    {590398, "SSS*SSSS1*S*SS1SSS1SS*SS1*SS1S*SS1*SS1*SSS1S*SS1*SS1SS1", 55, false},
    {590399, "SSSS*SSSS1*S*SS1SSS1SS*SS1*SS1S*SS1*SS1*SSS1S*SS1*SS1SS1", 56, true},
    {907199, "SSS*SSS1S*S1S*S*SS1*SS1S*SS1SSS1S*SS1*SSS1*SSS1*SSS1SSSS1", 57, true},
    {1081079, "SSSS*SSSS1*SSSS1S*S1S*SSS1*SSSS1S*S1*SS1*SS1*SS1*SSS1SSSS1", 58, true},
    {1650983, "SSS*SSS1*SSSS1S*SS1*SS1*SSS1S*SS1S*SSSSSS1S*SS1*SS1*SS1SSS1", 59, true},
    {1851119, "SSSS*SSSS1S*S*SS1*SS1SSS1S*SSSS1S*SSS1*SSS1*SSSS1*SSSS1SSSS1", 60, true},
    {2497499, "SSSS*SSSS1*SSSSSS1*S*SS1SSS1S*SSS1*SSS1*SSSSSS1S*SS1*SSS1SSS1", 61, true},
    {3243239, "SSSS*SSSS1*SS*SS1*SS1SSSS1S*SS1*SSS1*SSSS1*SSSS1S*SS1*SS1SSSS1", 62, true},
    {4344479, "SSSS*SSSS1*SSSS1S*SS1S*SSSS1S*SSS1*SSS1*SSS1S*SS1*SS1*SSS1SSSS1", 63, true},
};

struct MaxRow {
    std::uint64_t value;
    std::string_view witness;
};

// Row i is k = i + 1 (k is the witness length).
inline constexpr MaxRow kMaxRows[] = {
    {1, "1"},
    {2, "S1"},
    {3, "SS1"},
    {4, "SSS1"},
    {5, "SSSS1"},
    {6, "SSSSS1"},
    {9, "*SS1SS1"},
    {12, "*SS1SSS1"},
    {16, "*SSS1SSS1"},
    {20, "*SSS1SSSS1"},
    {27, "*SS1*SS1SS1"},
    {36, "*SS1*SS1SSS1"},
    {48, "*SS1*SSS1SSS1"},
    {64, "*SSS1*SSS1SSS1"},
    {81, "*SS1*SS1*SS1SS1"},
    {108, "*SS1*SS1*SS1SSS1"},
    {144, "*SS1*SS1*SSS1SSS1"},
    {192, "*SS1*SSS1*SSS1SSS1"},
    {256, "*SSS1*SSS1*SSS1SSS1"},
    {324, "*SS1*SS1*SS1*SS1SSS1"},
    {432, "*SS1*SS1*SS1*SSS1SSS1"},
    {576, "*SS1*SS1*SSS1*SSS1SSS1"},
    {768, "*SS1*SSS1*SSS1*SSS1SSS1"},
    {1024, "*SSS1*SSS1*SSS1*SSS1SSS1"},
    {1296, "*SS1*SS1*SS1*SS1*SSS1SSS1"},
    {1728, "*SS1*SS1*SS1*SSS1*SSS1SSS1"},
    {2304, "*SS1*SS1*SSS1*SSS1*SSS1SSS1"},
    {3072, "*SS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {4096, "*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {5184, "*SS1*SS1*SS1*SS1*SSS1*SSS1SSS1"},
    {6912, "*SS1*SS1*SS1*SSS1*SSS1*SSS1SSS1"},
    {9216, "*SS1*SS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {12288, "*SS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {16384, "*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {20736, "*SS1*SS1*SS1*SS1*SSS1*SSS1*SSS1SSS1"},
    {27648, "*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {36864, "*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {49152, "*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {65536, "*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {82944, "*SS1*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {110592, "*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {147456, "*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {196608, "*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {262144, "*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {331776, "*SS1*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {442368, "*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {589824, "*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {786432, "*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {1048576, "*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {1327104, "*SS1*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {1769472, "*SS1*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {2359296, "*SS1*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {3145728, "*SS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
    {4194304, "*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1*SSS1SSS1"},
};

}  // namespace minrep::golden
