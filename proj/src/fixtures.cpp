#include "molr/fixtures.hpp"
#include <sstream>
namespace molr::fixtures {
namespace {
const char *const kSixMols9 = R"fix(
0 1 2 3 4 5 6 7 8
8 7 6 5 3 2 4 1 0
7 0 8 4 1 6 5 3 2
6 2 0 1 8 7 3 5 4
5 8 4 6 2 3 7 0 1
4 3 5 7 0 1 8 2 6
3 4 1 0 7 8 2 6 5
2 6 7 8 5 0 1 4 3
1 5 3 2 6 4 0 8 7

0 1 2 3 4 5 6 7 8
7 8 5 4 2 6 3 0 1
1 7 6 0 3 8 2 4 5
2 0 3 6 5 4 1 8 7
3 4 8 7 1 0 5 6 2
6 5 1 2 8 7 0 3 4
8 2 4 5 6 3 7 1 0
4 3 0 1 7 2 8 5 6
5 6 7 8 0 1 4 2 3

0 1 2 3 4 5 6 7 8
6 5 8 0 7 3 1 4 2
8 4 7 6 2 1 3 5 0
4 7 5 8 1 2 0 6 3
7 3 0 2 6 8 4 1 5
5 6 4 1 3 0 2 8 7
2 8 6 7 0 4 5 3 1
1 0 3 5 8 6 7 2 4
3 2 1 4 5 7 8 0 6

0 1 2 3 4 5 6 7 8
3 0 7 6 8 1 5 2 4
6 5 4 8 7 2 0 1 3
1 6 8 5 0 3 7 4 2
2 7 1 0 5 4 8 3 6
7 2 3 4 6 8 1 0 5
5 3 0 1 2 6 4 8 7
8 4 5 2 1 7 3 6 0
4 8 6 7 3 0 2 5 1

0 1 2 3 4 5 6 7 8
2 6 4 7 1 8 0 3 5
3 8 0 5 6 7 4 2 1
5 4 7 2 3 0 8 1 6
8 5 3 1 7 6 2 4 0
1 0 6 8 2 4 7 5 3
4 7 8 6 5 1 3 0 2
6 2 1 4 0 3 5 8 7
7 3 5 0 8 2 1 6 4

0 1 2 3 4 5 6 7 8
1 4 0 8 6 7 2 5 3
2 6 5 7 8 3 1 0 4
8 3 1 4 7 6 5 2 0
4 2 6 5 0 1 3 8 7
3 8 7 0 5 2 4 6 1
7 5 3 2 1 0 8 4 6
5 7 8 6 3 4 0 1 2
6 0 4 1 2 8 7 3 5
)fix";
const char *const kThreeMols8 = R"fix(
0 1 2 3 4 5 6 7
7 6 5 4 3 2 1 0
6 7 4 5 2 3 0 1
5 4 7 6 1 0 3 2
4 5 6 7 0 1 2 3
3 2 1 0 7 6 5 4
2 0 3 1 6 4 7 5
1 3 0 2 5 7 4 6

0 1 2 3 4 5 6 7
6 7 4 5 2 3 0 1
5 4 7 6 1 0 3 2
2 3 0 1 6 7 4 5
1 0 3 2 5 4 7 6
7 6 5 4 3 2 1 0
4 2 1 7 0 6 5 3
3 5 6 0 7 1 2 4

0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
3 2 1 0 7 6 5 4
7 6 5 4 3 2 1 0
5 4 7 6 1 0 3 2
4 5 6 7 0 1 2 3
6 3 0 5 2 7 4 1
2 7 4 1 6 3 0 5
)fix";
const char *const kThreeMolr9x10 = R"fix(
0 1 2 3 4 5 6 7 8 9
9 8 7 6 5 4 3 1 0 2
8 9 3 5 7 1 0 2 6 4
7 6 4 0 3 2 9 8 5 1
6 7 5 4 1 8 2 0 9 3
5 4 6 1 9 0 8 3 2 7
4 5 0 7 2 6 1 9 3 8
3 0 1 2 8 9 4 6 7 5
2 3 8 9 6 7 5 4 1 0

0 1 2 3 4 5 6 7 8 9
8 9 6 5 0 7 2 4 3 1
4 7 0 6 2 3 1 8 9 5
5 3 8 9 1 4 0 2 7 6
2 4 3 1 8 0 9 5 6 7
1 0 4 2 3 6 7 9 5 8
9 2 7 0 6 8 5 1 4 3
6 8 9 7 5 2 3 0 1 4
3 5 1 4 7 9 8 6 0 2

0 1 2 3 4 5 6 7 8 9
4 5 3 2 6 9 1 8 7 0
9 6 7 0 8 4 2 5 1 3
1 9 0 4 5 3 8 6 2 7
3 0 8 6 2 1 7 9 5 4
7 2 5 9 1 8 3 0 4 6
8 4 1 5 9 7 0 3 6 2
2 3 6 8 7 0 5 4 9 1
6 8 4 7 0 2 9 1 3 5
)fix";
const char *const kEightMols9_0 = R"fix(
0 1 2 3 4 5 6 7 8
8 7 6 2 1 0 3 4 5
7 6 8 0 2 1 5 3 4
6 8 7 1 0 2 4 5 3
5 4 3 6 7 8 2 1 0
4 3 5 8 6 7 0 2 1
3 5 4 7 8 6 1 0 2
2 0 1 4 5 3 7 8 6
1 2 0 5 3 4 8 6 7

0 1 2 3 4 5 6 7 8
7 6 8 0 2 1 5 3 4
5 4 3 6 7 8 2 1 0
2 0 1 4 5 3 7 8 6
3 5 4 7 8 6 1 0 2
1 2 0 5 3 4 8 6 7
8 7 6 2 1 0 3 4 5
4 3 5 8 6 7 0 2 1
6 8 7 1 0 2 4 5 3

0 1 2 3 4 5 6 7 8
6 8 7 1 0 2 4 5 3
2 0 1 4 5 3 7 8 6
3 5 4 7 8 6 1 0 2
4 3 5 8 6 7 0 2 1
7 6 8 0 2 1 5 3 4
1 2 0 5 3 4 8 6 7
8 7 6 2 1 0 3 4 5
5 4 3 6 7 8 2 1 0

0 1 2 3 4 5 6 7 8
5 4 3 6 7 8 2 1 0
3 5 4 7 8 6 1 0 2
4 3 5 8 6 7 0 2 1
8 7 6 2 1 0 3 4 5
6 8 7 1 0 2 4 5 3
7 6 8 0 2 1 5 3 4
1 2 0 5 3 4 8 6 7
2 0 1 4 5 3 7 8 6

0 1 2 3 4 5 6 7 8
4 3 5 8 6 7 0 2 1
1 2 0 5 3 4 8 6 7
7 6 8 0 2 1 5 3 4
6 8 7 1 0 2 4 5 3
3 5 4 7 8 6 1 0 2
2 0 1 4 5 3 7 8 6
5 4 3 6 7 8 2 1 0
8 7 6 2 1 0 3 4 5

0 1 2 3 4 5 6 7 8
3 5 4 7 8 6 1 0 2
8 7 6 2 1 0 3 4 5
1 2 0 5 3 4 8 6 7
7 6 8 0 2 1 5 3 4
2 0 1 4 5 3 7 8 6
5 4 3 6 7 8 2 1 0
6 8 7 1 0 2 4 5 3
4 3 5 8 6 7 0 2 1

0 1 2 3 4 5 6 7 8
2 0 1 4 5 3 7 8 6
4 3 5 8 6 7 0 2 1
8 7 6 2 1 0 3 4 5
1 2 0 5 3 4 8 6 7
5 4 3 6 7 8 2 1 0
6 8 7 1 0 2 4 5 3
7 6 8 0 2 1 5 3 4
3 5 4 7 8 6 1 0 2

0 1 2 3 4 5 6 7 8
1 2 0 5 3 4 8 6 7
6 8 7 1 0 2 4 5 3
5 4 3 6 7 8 2 1 0
2 0 1 4 5 3 7 8 6
8 7 6 2 1 0 3 4 5
4 3 5 8 6 7 0 2 1
3 5 4 7 8 6 1 0 2
7 6 8 0 2 1 5 3 4
)fix";
const char *const kEightMols9_1 = R"fix(
0 1 2 3 4 5 6 7 8
8 7 6 2 1 0 3 4 5
7 6 8 0 2 1 5 3 4
6 8 7 1 0 2 4 5 3
5 4 3 6 7 8 2 1 0
4 3 5 8 6 7 0 2 1
3 5 4 7 8 6 1 0 2
2 0 1 4 5 3 7 8 6
1 2 0 5 3 4 8 6 7

0 1 2 3 4 5 6 7 8
7 6 8 0 2 1 5 3 4
5 4 3 6 7 8 2 1 0
2 0 1 4 5 3 7 8 6
3 5 4 7 8 6 1 0 2
1 2 0 5 3 4 8 6 7
8 7 6 2 1 0 3 4 5
4 3 5 8 6 7 0 2 1
6 8 7 1 0 2 4 5 3

0 1 2 3 4 5 6 7 8
6 8 7 1 0 2 4 5 3
1 2 0 5 3 4 8 6 7
5 4 3 6 7 8 2 1 0
4 3 5 8 6 7 0 2 1
8 7 6 2 1 0 3 4 5
2 0 1 4 5 3 7 8 6
7 6 8 0 2 1 5 3 4
3 5 4 7 8 6 1 0 2

0 1 2 3 4 5 6 7 8
5 4 3 6 7 8 2 1 0
3 5 4 7 8 6 1 0 2
4 3 5 8 6 7 0 2 1
8 7 6 2 1 0 3 4 5
6 8 7 1 0 2 4 5 3
7 6 8 0 2 1 5 3 4
1 2 0 5 3 4 8 6 7
2 0 1 4 5 3 7 8 6

0 1 2 3 4 5 6 7 8
4 3 5 8 6 7 0 2 1
2 0 1 4 5 3 7 8 6
8 7 6 2 1 0 3 4 5
6 8 7 1 0 2 4 5 3
5 4 3 6 7 8 2 1 0
1 2 0 5 3 4 8 6 7
3 5 4 7 8 6 1 0 2
7 6 8 0 2 1 5 3 4

0 1 2 3 4 5 6 7 8
3 5 4 7 8 6 1 0 2
8 7 6 2 1 0 3 4 5
1 2 0 5 3 4 8 6 7
7 6 8 0 2 1 5 3 4
2 0 1 4 5 3 7 8 6
5 4 3 6 7 8 2 1 0
6 8 7 1 0 2 4 5 3
4 3 5 8 6 7 0 2 1

0 1 2 3 4 5 6 7 8
2 0 1 4 5 3 7 8 6
6 8 7 1 0 2 4 5 3
3 5 4 7 8 6 1 0 2
1 2 0 5 3 4 8 6 7
7 6 8 0 2 1 5 3 4
4 3 5 8 6 7 0 2 1
5 4 3 6 7 8 2 1 0
8 7 6 2 1 0 3 4 5

0 1 2 3 4 5 6 7 8
1 2 0 5 3 4 8 6 7
4 3 5 8 6 7 0 2 1
7 6 8 0 2 1 5 3 4
2 0 1 4 5 3 7 8 6
3 5 4 7 8 6 1 0 2
6 8 7 1 0 2 4 5 3
8 7 6 2 1 0 3 4 5
5 4 3 6 7 8 2 1 0
)fix";
const char *const kEightMols9_2 = R"fix(
0 1 2 3 4 5 6 7 8
8 7 6 5 3 4 2 1 0
7 8 1 6 2 0 3 5 4
6 0 8 7 1 2 4 3 5
5 4 3 2 6 7 8 0 1
4 3 5 1 7 8 0 6 2
3 5 4 0 8 6 1 2 7
2 6 7 8 0 1 5 4 3
1 2 0 4 5 3 7 8 6

0 1 2 3 4 5 6 7 8
7 6 8 4 5 3 1 0 2
3 5 4 0 6 7 2 8 1
5 4 3 2 7 8 0 1 6
1 8 6 7 2 0 4 3 5
6 7 0 8 1 2 5 4 3
8 2 7 6 0 1 3 5 4
4 3 5 1 8 6 7 2 0
2 0 1 5 3 4 8 6 7

0 1 2 3 4 5 6 7 8
6 5 4 0 2 1 3 8 7
4 7 6 5 8 3 1 2 0
1 2 0 8 5 6 7 4 3
8 3 7 1 0 2 5 6 4
2 0 1 7 6 4 8 3 5
5 6 8 4 3 7 2 0 1
7 8 3 2 1 0 4 5 6
3 4 5 6 7 8 0 1 2

0 1 2 3 4 5 6 7 8
5 4 7 2 1 0 8 3 6
6 3 8 1 0 2 7 4 5
8 7 4 5 6 3 2 0 1
7 6 5 4 3 8 0 1 2
3 8 6 0 2 1 4 5 7
2 0 1 8 7 4 5 6 3
1 2 0 6 5 7 3 8 4
4 5 3 7 8 6 1 2 0

0 1 2 3 4 5 6 7 8
4 8 5 1 0 2 7 6 3
1 2 0 7 5 8 4 3 6
3 6 7 0 2 1 5 8 4
2 0 1 6 8 4 3 5 7
7 5 8 4 3 6 1 2 0
6 7 3 2 1 0 8 4 5
8 4 6 5 7 3 0 1 2
5 3 4 8 6 7 2 0 1

0 1 2 3 4 5 6 7 8
3 2 1 6 8 7 0 5 4
8 6 7 4 3 1 5 0 2
2 3 5 1 0 4 8 6 7
4 5 0 8 7 6 1 2 3
1 4 3 2 5 0 7 8 6
7 8 6 5 2 3 4 1 0
5 0 4 7 6 8 2 3 1
6 7 8 0 1 2 3 4 5

0 1 2 3 4 5 6 7 8
2 3 0 8 7 6 5 4 1
5 0 3 2 1 4 8 6 7
4 5 1 6 8 7 3 2 0
3 2 4 0 5 1 7 8 6
8 6 7 5 0 3 2 1 4
1 4 5 7 6 8 0 3 2
6 7 8 4 3 2 1 0 5
7 8 6 1 2 0 4 5 3

0 1 2 3 4 5 6 7 8
1 0 3 7 6 8 4 2 5
2 4 5 8 7 6 0 1 3
7 8 6 4 3 0 1 5 2
6 7 8 5 1 3 2 4 0
5 2 4 6 8 7 3 0 1
4 3 0 1 5 2 7 8 6
3 5 1 0 2 4 8 6 7
8 6 7 2 0 1 5 3 4
)fix";
const char *const kEightMols9_3 = R"fix(
0 1 2 3 4 5 6 7 8
8 7 6 5 3 2 4 1 0
7 8 4 6 5 3 2 0 1
6 4 8 1 0 7 3 5 2
5 0 1 8 2 4 7 6 3
4 2 5 7 1 0 8 3 6
3 5 0 2 8 6 1 4 7
2 6 3 0 7 1 5 8 4
1 3 7 4 6 8 0 2 5

0 1 2 3 4 5 6 7 8
7 8 5 6 2 1 3 0 4
6 5 1 7 8 4 0 3 2
2 7 3 4 5 0 8 1 6
3 2 8 1 7 6 5 4 0
8 3 0 2 6 7 4 5 1
1 4 6 5 0 8 7 2 3
4 0 7 8 1 3 2 6 5
5 6 4 0 3 2 1 8 7

0 1 2 3 4 5 6 7 8
6 0 8 7 5 4 2 3 1
1 2 6 4 3 7 8 5 0
7 3 1 8 6 2 4 0 5
8 4 7 5 1 0 3 2 6
5 7 4 6 2 8 0 1 3
2 6 3 0 7 1 5 8 4
3 5 0 2 8 6 1 4 7
4 8 5 1 0 3 7 6 2

0 1 2 3 4 5 6 7 8
5 6 0 8 7 3 1 4 2
3 4 8 2 1 0 7 6 5
1 0 7 6 3 8 5 2 4
4 8 3 0 6 7 2 5 1
2 5 6 4 0 1 3 8 7
6 7 5 1 2 4 8 3 0
8 3 4 7 5 2 0 1 6
7 2 1 5 8 6 4 0 3

0 1 2 3 4 5 6 7 8
4 5 7 1 0 6 8 2 3
2 3 0 5 7 8 1 4 6
3 6 5 0 1 4 2 8 7
6 7 4 2 8 3 0 1 5
1 0 3 8 5 2 7 6 4
7 2 8 4 6 0 3 5 1
5 8 1 6 3 7 4 0 2
8 4 6 7 2 1 5 3 0

0 1 2 3 4 5 6 7 8
3 2 1 4 8 7 0 5 6
8 7 5 0 6 2 3 1 4
5 8 4 7 2 6 1 3 0
2 3 0 6 5 1 4 8 7
7 6 8 1 3 4 5 0 2
4 0 7 8 1 3 2 6 5
1 4 6 5 0 8 7 2 3
6 5 3 2 7 0 8 4 1

0 1 2 3 4 5 6 7 8
2 3 4 0 1 8 7 6 5
4 0 3 1 2 6 5 8 7
8 5 6 2 7 1 0 4 3
1 6 5 7 0 2 8 3 4
6 4 7 5 8 3 1 2 0
5 8 1 6 3 7 4 0 2
7 2 8 4 6 0 3 5 1
3 7 0 8 5 4 2 1 6

0 1 2 3 4 5 6 7 8
1 4 3 2 6 0 5 8 7
5 6 7 8 0 1 4 2 3
4 2 0 5 8 3 7 6 1
7 5 6 4 3 8 1 0 2
3 8 1 0 7 6 2 4 5
8 3 4 7 5 2 0 1 6
6 7 5 1 2 4 8 3 0
2 0 8 6 1 7 3 5 4
)fix";
const char *const kEightMols9_4 = R"fix(
0 1 2 3 4 5 6 7 8
8 7 6 2 1 0 3 4 5
7 6 8 0 2 1 5 3 4
6 8 7 1 0 2 4 5 3
5 4 3 6 7 8 2 1 0
4 3 5 8 6 7 0 2 1
3 5 4 7 8 6 1 0 2
2 0 1 4 5 3 7 8 6
1 2 0 5 3 4 8 6 7

0 1 2 3 4 5 6 7 8
7 8 5 1 2 4 0 6 3
2 0 1 6 3 8 4 5 7
3 4 6 5 7 0 8 1 2
6 3 4 8 5 2 7 0 1
5 7 8 0 1 3 2 4 6
1 2 0 4 6 7 3 8 5
8 5 7 2 0 6 1 3 4
4 6 3 7 8 1 5 2 0

0 1 2 3 4 5 6 7 8
6 3 4 8 5 2 7 0 1
1 2 0 4 6 7 3 8 5
5 7 8 0 1 3 2 4 6
7 8 5 1 2 4 0 6 3
3 4 6 5 7 0 8 1 2
2 0 1 6 3 8 4 5 7
4 6 3 7 8 1 5 2 0
8 5 7 2 0 6 1 3 4

0 1 2 3 4 5 6 7 8
5 4 3 6 7 8 2 1 0
3 5 4 7 8 6 1 0 2
4 3 5 8 6 7 0 2 1
8 7 6 2 1 0 3 4 5
6 8 7 1 0 2 4 5 3
7 6 8 0 2 1 5 3 4
1 2 0 5 3 4 8 6 7
2 0 1 4 5 3 7 8 6

0 1 2 3 4 5 6 7 8
4 5 8 0 3 6 1 2 7
6 7 3 5 1 2 8 4 0
2 0 1 7 8 4 3 6 5
3 6 7 4 0 1 5 8 2
1 2 0 6 5 8 7 3 4
8 4 5 2 7 3 0 1 6
7 3 6 8 2 0 4 5 1
5 8 4 1 6 7 2 0 3

0 1 2 3 4 5 6 7 8
3 6 7 4 0 1 5 8 2
8 4 5 2 7 3 0 1 6
1 2 0 6 5 8 7 3 4
4 5 8 0 3 6 1 2 7
2 0 1 7 8 4 3 6 5
6 7 3 5 1 2 8 4 0
5 8 4 1 6 7 2 0 3
7 3 6 8 2 0 4 5 1

0 1 2 3 4 5 6 7 8
2 0 1 5 6 7 8 3 4
5 3 7 8 0 4 2 6 1
8 6 4 2 3 1 5 0 7
1 2 0 7 8 3 4 5 6
7 5 3 4 2 6 1 8 0
4 8 6 1 5 0 7 2 3
6 4 8 0 7 2 3 1 5
3 7 5 6 1 8 0 4 2

0 1 2 3 4 5 6 7 8
1 2 0 7 8 3 4 5 6
4 8 6 1 5 0 7 2 3
7 5 3 4 2 6 1 8 0
2 0 1 5 6 7 8 3 4
8 6 4 2 3 1 5 0 7
5 3 7 8 0 4 2 6 1
3 7 5 6 1 8 0 4 2
6 4 8 0 7 2 3 1 5
)fix";

MolrSet parse_fixture(const char *text, int k, int n, int t) {
    std::istringstream in(text);
    std::vector<LatinRectangle> rects;
    for (int q = 0; q < t; ++q) {
        std::vector<Symbol> cells;
        cells.reserve(static_cast<size_t>(k) * n);
        for (int i = 0; i < k * n; ++i) {
            int v;
            in >> v;
            cells.push_back(static_cast<Symbol>(v));
        }
        rects.push_back(validate_rectangle(k, n, cells));
    }
    return validate_molr(rects);
}

}  // namespace

const MolrSet &six_mols_order9() {
    static const MolrSet set = parse_fixture(kSixMols9, 9, 9, 6);
    return set;
}

const MolrSet &three_mols_order8() {
    static const MolrSet set = parse_fixture(kThreeMols8, 8, 8, 3);
    return set;
}

const MolrSet &three_molr_9x10() {
    static const MolrSet set = parse_fixture(kThreeMolr9x10, 9, 10, 3);
    return set;
}

const std::vector<MolrSet> &eight_mols_order9() {
    static const std::vector<MolrSet> sets = [] {
        std::vector<MolrSet> v;
        v.push_back(parse_fixture(kEightMols9_0, 9, 9, 8));
        v.push_back(parse_fixture(kEightMols9_1, 9, 9, 8));
        v.push_back(parse_fixture(kEightMols9_2, 9, 9, 8));
        v.push_back(parse_fixture(kEightMols9_3, 9, 9, 8));
        v.push_back(parse_fixture(kEightMols9_4, 9, 9, 8));
        return v;
    }();
    return sets;
}

const std::vector<std::uint64_t> &eight_mols_order9_aut_orders() {
    static const std::vector<std::uint64_t> orders = {10368, 31104, 384, 384, 3456};
    return orders;
}

}  // namespace molr::fixtures
