#include "molr/tables.hpp"

namespace molr::tables {
namespace {
PopulationRow row(std::uint64_t total, std::vector<HistEntry> hist) {
    return PopulationRow{true, total, std::move(hist)};
}

std::vector<ExpectedCell> build_cells() {
    std::vector<ExpectedCell> v;
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=4";
        c.n = 4; c.t = 2; c.k = 2;
        c.all = row(3, {{8, 1}, {16, 2}});
        c.homogeneous = row(2, {{16, 2}});
        c.transitive = row(2, {{16, 2}});
        c.stepwise_homogeneous = row(2, {{16, 2}});
        c.stepwise_transitive = row(2, {{16, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=4";
        c.n = 4; c.t = 2; c.k = 3;
        c.all = row(2, {{8, 1}, {24, 1}});
        c.homogeneous = row(2, {{8, 1}, {24, 1}});
        c.transitive = row(2, {{8, 1}, {24, 1}});
        c.stepwise_homogeneous = row(1, {{24, 1}});
        c.stepwise_transitive = row(1, {{24, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=4";
        c.n = 4; c.t = 2; c.k = 4;
        c.all = row(1, {{96, 1}});
        c.homogeneous = row(1, {{96, 1}});
        c.transitive = row(1, {{96, 1}});
        c.stepwise_homogeneous = row(1, {{96, 1}});
        c.stepwise_transitive = row(1, {{96, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=4";
        c.n = 4; c.t = 3; c.k = 2;
        c.all = row(2, {{16, 1}, {48, 1}});
        c.homogeneous = row(1, {{48, 1}});
        c.transitive = row(1, {{48, 1}});
        c.stepwise_homogeneous = row(1, {{48, 1}});
        c.stepwise_transitive = row(1, {{48, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=4";
        c.n = 4; c.t = 3; c.k = 3;
        c.all = row(1, {{72, 1}});
        c.homogeneous = row(1, {{72, 1}});
        c.transitive = row(1, {{72, 1}});
        c.stepwise_homogeneous = row(1, {{72, 1}});
        c.stepwise_transitive = row(1, {{72, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=4";
        c.n = 4; c.t = 3; c.k = 4;
        c.all = row(1, {{288, 1}});
        c.homogeneous = row(1, {{288, 1}});
        c.transitive = row(1, {{288, 1}});
        c.stepwise_homogeneous = row(1, {{288, 1}});
        c.stepwise_transitive = row(1, {{288, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=5";
        c.n = 5; c.t = 2; c.k = 2;
        c.all = row(5, {{2, 1}, {4, 2}, {10, 1}, {20, 1}});
        c.homogeneous = row(4, {{4, 2}, {10, 1}, {20, 1}});
        c.transitive = row(3, {{4, 2}, {20, 1}});
        c.stepwise_homogeneous = row(4, {{4, 2}, {10, 1}, {20, 1}});
        c.stepwise_transitive = row(3, {{4, 2}, {20, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=5";
        c.n = 5; c.t = 2; c.k = 3;
        c.all = row(14, {{1, 1}, {2, 7}, {4, 3}, {10, 2}, {20, 1}});
        c.homogeneous = row(11, {{1, 1}, {2, 4}, {4, 3}, {10, 2}, {20, 1}});
        c.transitive = row(9, {{2, 4}, {4, 3}, {10, 1}, {20, 1}});
        c.stepwise_homogeneous = row(7, {{2, 1}, {4, 3}, {10, 2}, {20, 1}});
        c.stepwise_transitive = row(6, {{2, 1}, {4, 3}, {10, 1}, {20, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=5";
        c.n = 5; c.t = 2; c.k = 4;
        c.all = row(2, {{20, 1}, {40, 1}});
        c.homogeneous = row(2, {{20, 1}, {40, 1}});
        c.transitive = row(1, {{40, 1}});
        c.stepwise_homogeneous = row(2, {{20, 1}, {40, 1}});
        c.stepwise_transitive = row(1, {{40, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=5";
        c.n = 5; c.t = 2; c.k = 5;
        c.all = row(2, {{100, 1}, {200, 1}});
        c.homogeneous = row(2, {{100, 1}, {200, 1}});
        c.transitive = row(1, {{200, 1}});
        c.stepwise_homogeneous = row(2, {{100, 1}, {200, 1}});
        c.stepwise_transitive = row(1, {{200, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=5";
        c.n = 5; c.t = 3; c.k = 2;
        c.all = row(4, {{2, 1}, {6, 2}, {10, 1}});
        c.homogeneous = row(3, {{6, 2}, {10, 1}});
        c.transitive = row(2, {{6, 2}});
        c.stepwise_homogeneous = row(3, {{6, 2}, {10, 1}});
        c.stepwise_transitive = row(2, {{6, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=5";
        c.n = 5; c.t = 3; c.k = 3;
        c.all = row(1, {{10, 1}});
        c.homogeneous = row(1, {{10, 1}});
        c.stepwise_homogeneous = row(1, {{10, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=5";
        c.n = 5; c.t = 3; c.k = 4;
        c.all = row(1, {{20, 1}});
        c.homogeneous = row(1, {{20, 1}});
        c.stepwise_homogeneous = row(1, {{20, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=5";
        c.n = 5; c.t = 3; c.k = 5;
        c.all = row(1, {{100, 1}});
        c.homogeneous = row(1, {{100, 1}});
        // the published block omits this row, but the class is homogeneous
        // and its unique 4x5 construction parent is stepwise homogeneous,
        // so the chain cannot break here
        c.stepwise_homogeneous = row(1, {{100, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=5";
        c.n = 5; c.t = 4; c.k = 2;
        c.all = row(3, {{6, 1}, {24, 1}, {40, 1}});
        c.homogeneous = row(2, {{24, 1}, {40, 1}});
        c.transitive = row(2, {{24, 1}, {40, 1}});
        c.stepwise_homogeneous = row(2, {{24, 1}, {40, 1}});
        c.stepwise_transitive = row(2, {{24, 1}, {40, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=5";
        c.n = 5; c.t = 4; c.k = 3;
        c.all = row(1, {{40, 1}});
        c.homogeneous = row(1, {{40, 1}});
        c.transitive = row(1, {{40, 1}});
        c.stepwise_homogeneous = row(1, {{40, 1}});
        c.stepwise_transitive = row(1, {{40, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=5";
        c.n = 5; c.t = 4; c.k = 4;
        c.all = row(1, {{80, 1}});
        c.homogeneous = row(1, {{80, 1}});
        c.transitive = row(1, {{80, 1}});
        c.stepwise_homogeneous = row(1, {{80, 1}});
        c.stepwise_transitive = row(1, {{80, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=5";
        c.n = 5; c.t = 4; c.k = 5;
        c.all = row(1, {{400, 1}});
        c.homogeneous = row(1, {{400, 1}});
        c.transitive = row(1, {{400, 1}});
        c.stepwise_homogeneous = row(1, {{400, 1}});
        c.stepwise_transitive = row(1, {{400, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=6";
        c.n = 6; c.t = 2; c.k = 2;
        c.all = row(28, {{1, 1}, {2, 7}, {4, 7}, {6, 1}, {8, 3}, {12, 6}, {24, 2}, {72, 1}});
        c.homogeneous = row(12, {{2, 3}, {4, 2}, {8, 3}, {12, 1}, {24, 2}, {72, 1}});
        c.transitive = row(11, {{2, 2}, {4, 2}, {8, 3}, {12, 1}, {24, 2}, {72, 1}});
        c.stepwise_homogeneous = row(12, {{2, 3}, {4, 2}, {8, 3}, {12, 1}, {24, 2}, {72, 1}});
        c.stepwise_transitive = row(11, {{2, 2}, {4, 2}, {8, 3}, {12, 1}, {24, 2}, {72, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=6";
        c.n = 6; c.t = 2; c.k = 3;
        c.all = row(1526, {{1, 1155}, {2, 252}, {3, 18}, {4, 59}, {6, 19}, {8, 8}, {12, 11}, {24, 3}, {216, 1}});
        c.homogeneous = row(280, {{1, 89}, {2, 117}, {3, 1}, {4, 40}, {6, 13}, {8, 8}, {12, 8}, {24, 3}, {216, 1}});
        c.transitive = row(170, {{2, 100}, {4, 40}, {6, 10}, {8, 8}, {12, 8}, {24, 3}, {216, 1}});
        c.stepwise_homogeneous = row(158, {{1, 43}, {2, 63}, {3, 1}, {4, 26}, {6, 9}, {8, 8}, {12, 4}, {24, 3}, {216, 1}});
        c.stepwise_transitive = row(103, {{2, 52}, {4, 26}, {6, 9}, {8, 8}, {12, 4}, {24, 3}, {216, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=6";
        c.n = 6; c.t = 2; c.k = 4;
        c.all = row(2036, {{1, 1425}, {2, 425}, {3, 30}, {4, 78}, {6, 35}, {8, 16}, {12, 21}, {16, 1}, {24, 3}, {48, 2}});
        c.homogeneous = row(229, {{1, 36}, {2, 112}, {3, 5}, {4, 31}, {6, 11}, {8, 16}, {12, 12}, {16, 1}, {24, 3}, {48, 2}});
        c.transitive = row(160, {{2, 92}, {4, 29}, {6, 9}, {8, 15}, {12, 9}, {16, 1}, {24, 3}, {48, 2}});
        c.stepwise_homogeneous = row(66, {{1, 7}, {2, 27}, {3, 1}, {4, 11}, {6, 3}, {8, 8}, {12, 6}, {24, 2}, {48, 1}});
        c.stepwise_transitive = row(50, {{2, 22}, {4, 10}, {6, 3}, {8, 6}, {12, 6}, {24, 2}, {48, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=6";
        c.n = 6; c.t = 2; c.k = 5;
        c.all = row(85, {{1, 5}, {2, 25}, {3, 2}, {4, 26}, {6, 4}, {8, 11}, {12, 7}, {16, 2}, {24, 1}, {48, 2}});
        c.homogeneous = row(43, {{2, 10}, {4, 13}, {6, 3}, {8, 6}, {12, 7}, {16, 2}, {48, 2}});
        c.transitive = row(36, {{2, 6}, {4, 11}, {6, 2}, {8, 6}, {12, 7}, {16, 2}, {48, 2}});
        c.stepwise_homogeneous = row(13, {{2, 2}, {6, 1}, {8, 4}, {12, 2}, {16, 2}, {48, 2}});
        c.stepwise_transitive = row(12, {{2, 1}, {6, 1}, {8, 4}, {12, 2}, {16, 2}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=6";
        c.n = 6; c.t = 3; c.k = 2;
        c.all = row(103, {{1, 24}, {2, 25}, {4, 26}, {6, 2}, {8, 7}, {12, 13}, {24, 4}, {36, 1}, {72, 1}});
        c.homogeneous = row(16, {{1, 3}, {2, 4}, {4, 3}, {12, 3}, {24, 1}, {36, 1}, {72, 1}});
        c.transitive = row(6, {{12, 3}, {24, 1}, {36, 1}, {72, 1}});
        c.stepwise_homogeneous = row(16, {{1, 3}, {2, 4}, {4, 3}, {12, 3}, {24, 1}, {36, 1}, {72, 1}});
        c.stepwise_transitive = row(6, {{12, 3}, {24, 1}, {36, 1}, {72, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=6";
        c.n = 6; c.t = 3; c.k = 3;
        c.all = row(2572, {{1, 1980}, {2, 442}, {3, 54}, {4, 27}, {6, 55}, {12, 6}, {18, 4}, {36, 4}});
        c.homogeneous = row(115, {{1, 41}, {2, 32}, {3, 11}, {4, 2}, {6, 18}, {12, 3}, {18, 4}, {36, 4}});
        c.transitive = row(29, {{3, 6}, {6, 13}, {12, 2}, {18, 4}, {36, 4}});
        c.stepwise_homogeneous = row(32, {{1, 11}, {2, 11}, {3, 2}, {4, 2}, {6, 2}, {12, 1}, {18, 1}, {36, 2}});
        c.stepwise_transitive = row(4, {{12, 1}, {18, 1}, {36, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=6";
        c.n = 6; c.t = 3; c.k = 4;
        c.all = row(513, {{1, 93}, {2, 194}, {3, 96}, {4, 37}, {6, 64}, {8, 3}, {9, 2}, {12, 11}, {18, 9}, {24, 1}, {36, 3}});
        c.homogeneous = row(62, {{1, 1}, {2, 8}, {3, 11}, {4, 1}, {6, 23}, {9, 2}, {12, 3}, {18, 9}, {24, 1}, {36, 3}});
        c.transitive = row(39, {{3, 3}, {6, 18}, {9, 2}, {12, 3}, {18, 9}, {24, 1}, {36, 3}});
        c.stepwise_homogeneous = row(4, {{6, 3}, {36, 1}});
        c.stepwise_transitive = row(1, {{36, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=6";
        c.n = 6; c.t = 3; c.k = 5;
        c.all = row(7, {{3, 2}, {6, 2}, {9, 1}, {18, 2}});
        c.homogeneous = row(4, {{6, 1}, {9, 1}, {18, 2}});
        c.transitive = row(3, {{9, 1}, {18, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=6";
        c.n = 6; c.t = 4; c.k = 2;
        c.all = row(92, {{1, 14}, {2, 18}, {3, 1}, {4, 28}, {8, 8}, {12, 10}, {16, 2}, {18, 1}, {24, 4}, {36, 4}, {48, 2}});
        c.homogeneous = row(9, {{2, 1}, {4, 2}, {8, 2}, {16, 2}, {48, 2}});
        c.transitive = row(8, {{4, 2}, {8, 2}, {16, 2}, {48, 2}});
        c.stepwise_homogeneous = row(9, {{2, 1}, {4, 2}, {8, 2}, {16, 2}, {48, 2}});
        c.stepwise_transitive = row(8, {{4, 2}, {8, 2}, {16, 2}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=6";
        c.n = 6; c.t = 4; c.k = 3;
        c.all = row(118, {{1, 16}, {2, 38}, {3, 5}, {4, 22}, {6, 10}, {8, 6}, {12, 9}, {16, 2}, {18, 4}, {24, 1}, {36, 3}, {48, 1}, {144, 1}});
        c.homogeneous = row(19, {{4, 5}, {6, 1}, {8, 6}, {12, 2}, {16, 2}, {24, 1}, {48, 1}, {144, 1}});
        c.transitive = row(17, {{4, 5}, {8, 6}, {12, 1}, {16, 2}, {24, 1}, {48, 1}, {144, 1}});
        c.stepwise_homogeneous = row(15, {{4, 3}, {8, 6}, {12, 1}, {16, 2}, {24, 1}, {48, 1}, {144, 1}});
        c.stepwise_transitive = row(15, {{4, 3}, {8, 6}, {12, 1}, {16, 2}, {24, 1}, {48, 1}, {144, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=6";
        c.n = 6; c.t = 4; c.k = 4;
        c.all = row(12, {{3, 2}, {6, 2}, {9, 2}, {12, 1}, {18, 3}, {24, 1}, {72, 1}});
        c.homogeneous = row(4, {{9, 1}, {12, 1}, {24, 1}, {72, 1}});
        c.transitive = row(3, {{12, 1}, {24, 1}, {72, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=6";
        c.n = 6; c.t = 4; c.k = 5;
        c.all = row(8, {{6, 1}, {9, 2}, {18, 1}, {24, 1}, {36, 1}, {72, 2}});
        c.homogeneous = row(4, {{24, 1}, {36, 1}, {72, 2}});
        c.transitive = row(4, {{24, 1}, {36, 1}, {72, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=6";
        c.n = 6; c.t = 5; c.k = 2;
        c.all = row(33, {{1, 1}, {2, 5}, {4, 6}, {6, 1}, {8, 7}, {12, 1}, {16, 2}, {20, 1}, {24, 3}, {36, 2}, {48, 1}, {72, 2}, {240, 1}});
        c.homogeneous = row(2, {{20, 1}, {240, 1}});
        c.transitive = row(2, {{20, 1}, {240, 1}});
        c.stepwise_homogeneous = row(2, {{20, 1}, {240, 1}});
        c.stepwise_transitive = row(2, {{20, 1}, {240, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=7";
        c.n = 7; c.t = 2; c.k = 2;
        c.all = row(100, {{1, 21}, {2, 55}, {4, 18}, {14, 2}, {24, 1}, {28, 1}, {48, 2}});
        c.homogeneous = row(42, {{1, 3}, {2, 16}, {4, 18}, {14, 2}, {28, 1}, {48, 2}});
        c.transitive = row(29, {{2, 8}, {4, 18}, {28, 1}, {48, 2}});
        c.stepwise_homogeneous = row(42, {{1, 3}, {2, 16}, {4, 18}, {14, 2}, {28, 1}, {48, 2}});
        c.stepwise_transitive = row(29, {{2, 8}, {4, 18}, {28, 1}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=7";
        c.n = 7; c.t = 2; c.k = 3;
        c.all = row(514162, {{1, 508132}, {2, 5880}, {3, 48}, {4, 65}, {6, 23}, {7, 4}, {14, 4}, {21, 2}, {24, 1}, {28, 1}, {42, 1}, {72, 1}});
        c.homogeneous = row(14464, {{1, 10835}, {2, 3524}, {3, 6}, {4, 65}, {6, 23}, {7, 1}, {14, 4}, {21, 2}, {24, 1}, {28, 1}, {42, 1}, {72, 1}});
        c.transitive = row(3549, {{2, 3455}, {4, 65}, {6, 23}, {14, 2}, {24, 1}, {28, 1}, {42, 1}, {72, 1}});
        c.stepwise_homogeneous = row(7423, {{1, 5017}, {2, 2302}, {3, 6}, {4, 65}, {6, 23}, {7, 1}, {14, 4}, {21, 2}, {28, 1}, {42, 1}, {72, 1}});
        c.stepwise_transitive = row(2175, {{2, 2082}, {4, 65}, {6, 23}, {14, 2}, {28, 1}, {42, 1}, {72, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=7";
        c.n = 7; c.t = 2; c.k = 4;
        c.all = row(49415812, {{1, 49363791}, {2, 51060}, {3, 428}, {4, 444}, {6, 54}, {7, 11}, {8, 14}, {14, 6}, {21, 2}, {28, 1}, {42, 1}});
        c.homogeneous = row(65156, {{1, 37639}, {2, 27054}, {3, 16}, {4, 365}, {6, 54}, {7, 4}, {8, 14}, {14, 6}, {21, 2}, {28, 1}, {42, 1}});
        c.transitive = row(27299, {{2, 26867}, {4, 361}, {6, 54}, {8, 14}, {14, 1}, {28, 1}, {42, 1}});
        c.stepwise_homogeneous = row(14960, {{1, 4249}, {2, 10418}, {3, 16}, {4, 205}, {6, 54}, {8, 11}, {14, 3}, {21, 2}, {28, 1}, {42, 1}});
        c.stepwise_transitive = row(10029, {{2, 9775}, {4, 187}, {6, 54}, {8, 11}, {28, 1}, {42, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=7";
        c.n = 7; c.t = 2; c.k = 5;
        c.all = row(21290125, {{1, 21243988}, {2, 45872}, {4, 227}, {5, 10}, {7, 6}, {10, 12}, {14, 9}, {28, 1}});
        c.homogeneous = row(22432, {{1, 3508}, {2, 18672}, {4, 227}, {5, 1}, {7, 6}, {10, 8}, {14, 9}, {28, 1}});
        c.transitive = row(18836, {{2, 18599}, {4, 227}, {10, 5}, {14, 4}, {28, 1}});
        c.stepwise_homogeneous = row(4163, {{1, 99}, {2, 3935}, {4, 121}, {10, 5}, {14, 2}, {28, 1}});
        c.stepwise_transitive = row(3923, {{2, 3799}, {4, 118}, {10, 5}, {28, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=7";
        c.n = 7; c.t = 2; c.k = 6;
        c.all = row(11582, {{1, 10912}, {2, 492}, {3, 20}, {4, 24}, {5, 102}, {6, 11}, {7, 1}, {10, 12}, {12, 4}, {42, 3}, {84, 1}});
        c.homogeneous = row(409, {{1, 2}, {2, 345}, {4, 24}, {5, 8}, {6, 9}, {7, 1}, {10, 12}, {12, 4}, {42, 3}, {84, 1}});
        c.transitive = row(392, {{2, 342}, {4, 24}, {6, 8}, {10, 12}, {12, 4}, {42, 1}, {84, 1}});
        c.stepwise_homogeneous = row(91, {{2, 61}, {4, 4}, {5, 2}, {6, 7}, {10, 12}, {12, 2}, {42, 2}, {84, 1}});
        c.stepwise_transitive = row(84, {{2, 60}, {4, 3}, {6, 7}, {10, 12}, {12, 1}, {84, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=7";
        c.n = 7; c.t = 2; c.k = 7;
        c.all = row(20, {{2, 5}, {3, 5}, {6, 3}, {12, 1}, {21, 1}, {42, 2}, {294, 2}, {588, 1}});
        c.homogeneous = row(9, {{2, 1}, {6, 2}, {12, 1}, {42, 2}, {294, 2}, {588, 1}});
        c.transitive = row(6, {{6, 2}, {12, 1}, {42, 2}, {588, 1}});
        c.stepwise_homogeneous = row(6, {{6, 1}, {12, 1}, {42, 1}, {294, 2}, {588, 1}});
        c.stepwise_transitive = row(4, {{6, 1}, {12, 1}, {42, 1}, {588, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=7";
        c.n = 7; c.t = 3; c.k = 2;
        c.all = row(2858, {{1, 2300}, {2, 512}, {3, 3}, {4, 28}, {6, 9}, {12, 2}, {14, 3}, {42, 1}});
        c.homogeneous = row(318, {{1, 194}, {2, 100}, {3, 3}, {4, 6}, {6, 9}, {12, 2}, {14, 3}, {42, 1}});
        c.transitive = row(15, {{3, 3}, {6, 9}, {12, 2}, {42, 1}});
        c.stepwise_homogeneous = row(318, {{1, 194}, {2, 100}, {3, 3}, {4, 6}, {6, 9}, {12, 2}, {14, 3}, {42, 1}});
        c.stepwise_transitive = row(15, {{3, 3}, {6, 9}, {12, 2}, {42, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=7";
        c.n = 7; c.t = 3; c.k = 3;
        c.all = row(65883453, {{1, 65822447}, {2, 60195}, {3, 635}, {6, 143}, {7, 17}, {9, 3}, {14, 3}, {18, 4}, {21, 4}, {42, 1}, {63, 1}});
        c.homogeneous = row(49370, {{1, 48126}, {2, 566}, {3, 542}, {6, 116}, {7, 4}, {9, 3}, {14, 3}, {18, 4}, {21, 4}, {42, 1}, {63, 1}});
        c.transitive = row(647, {{3, 524}, {6, 113}, {9, 3}, {18, 4}, {21, 1}, {42, 1}, {63, 1}});
        c.stepwise_homogeneous = row(13975, {{1, 13397}, {2, 305}, {3, 189}, {6, 64}, {7, 4}, {9, 3}, {14, 3}, {18, 4}, {21, 4}, {42, 1}, {63, 1}});
        c.stepwise_transitive = row(185, {{3, 125}, {6, 51}, {9, 3}, {18, 4}, {42, 1}, {63, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=7";
        c.n = 7; c.t = 3; c.k = 4;
        c.all = row(323112477, {{1, 323002195}, {2, 107997}, {3, 1975}, {4, 120}, {6, 116}, {7, 43}, {9, 10}, {12, 3}, {14, 8}, {18, 2}, {21, 6}, {42, 1}, {63, 1}});
        c.homogeneous = row(2985, {{1, 1232}, {2, 147}, {3, 1474}, {4, 1}, {6, 91}, {7, 9}, {9, 10}, {12, 3}, {14, 8}, {18, 2}, {21, 6}, {42, 1}, {63, 1}});
        c.transitive = row(1578, {{3, 1468}, {6, 90}, {9, 10}, {12, 3}, {18, 2}, {21, 3}, {42, 1}, {63, 1}});
        c.stepwise_homogeneous = row(283, {{1, 59}, {2, 27}, {3, 136}, {4, 1}, {6, 34}, {7, 2}, {9, 10}, {12, 3}, {14, 4}, {18, 2}, {21, 3}, {42, 1}, {63, 1}});
        c.stepwise_transitive = row(160, {{3, 113}, {6, 30}, {9, 10}, {12, 3}, {18, 2}, {42, 1}, {63, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=7";
        c.n = 7; c.t = 3; c.k = 5;
        c.all = row(55545, {{1, 52981}, {2, 2500}, {3, 32}, {4, 5}, {6, 2}, {7, 15}, {14, 8}, {21, 1}, {42, 1}});
        c.homogeneous = row(111, {{1, 31}, {2, 21}, {3, 32}, {6, 2}, {7, 15}, {14, 8}, {21, 1}, {42, 1}});
        c.transitive = row(36, {{3, 32}, {6, 2}, {21, 1}, {42, 1}});
        c.stepwise_homogeneous = row(8, {{3, 2}, {6, 2}, {14, 3}, {42, 1}});
        c.stepwise_transitive = row(5, {{3, 2}, {6, 2}, {42, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=7";
        c.n = 7; c.t = 3; c.k = 6;
        c.all = row(16, {{1, 1}, {2, 4}, {3, 1}, {4, 1}, {6, 3}, {12, 2}, {42, 3}, {126, 1}});
        c.homogeneous = row(11, {{2, 1}, {4, 1}, {6, 3}, {12, 2}, {42, 3}, {126, 1}});
        c.transitive = row(6, {{6, 3}, {12, 2}, {126, 1}});
        c.stepwise_homogeneous = row(4, {{42, 3}, {126, 1}});
        c.stepwise_transitive = row(1, {{126, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=7";
        c.n = 7; c.t = 3; c.k = 7;
        c.all = row(4, {{294, 3}, {882, 1}});
        c.homogeneous = row(4, {{294, 3}, {882, 1}});
        c.transitive = row(1, {{882, 1}});
        c.stepwise_homogeneous = row(4, {{294, 3}, {882, 1}});
        c.stepwise_transitive = row(1, {{882, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=7";
        c.n = 7; c.t = 4; c.k = 2;
        c.all = row(17609, {{1, 15981}, {2, 1545}, {4, 64}, {8, 12}, {14, 2}, {16, 4}, {28, 1}});
        c.homogeneous = row(691, {{1, 489}, {2, 164}, {4, 19}, {8, 12}, {14, 2}, {16, 4}, {28, 1}});
        c.transitive = row(21, {{4, 5}, {8, 12}, {16, 4}});
        c.stepwise_homogeneous = row(691, {{1, 489}, {2, 164}, {4, 19}, {8, 12}, {14, 2}, {16, 4}, {28, 1}});
        c.stepwise_transitive = row(21, {{4, 5}, {8, 12}, {16, 4}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=7";
        c.n = 7; c.t = 4; c.k = 3;
        c.all = row(35469948, {{1, 35420362}, {2, 48685}, {3, 626}, {4, 226}, {6, 21}, {7, 12}, {12, 1}, {14, 7}, {21, 6}, {28, 1}, {42, 1}});
        c.homogeneous = row(1622, {{1, 949}, {2, 539}, {3, 9}, {4, 110}, {6, 4}, {7, 1}, {12, 1}, {14, 4}, {21, 3}, {28, 1}, {42, 1}});
        c.transitive = row(110, {{4, 109}, {12, 1}});
        c.stepwise_homogeneous = row(585, {{1, 251}, {2, 243}, {3, 9}, {4, 67}, {6, 4}, {7, 1}, {12, 1}, {14, 4}, {21, 3}, {28, 1}, {42, 1}});
        c.stepwise_transitive = row(48, {{4, 47}, {12, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=7";
        c.n = 7; c.t = 4; c.k = 4;
        c.all = row(68659, {{1, 67073}, {2, 1354}, {3, 74}, {4, 110}, {6, 2}, {7, 20}, {8, 12}, {14, 5}, {16, 1}, {21, 3}, {28, 2}, {42, 1}, {56, 1}, {84, 1}});
        c.homogeneous = row(84, {{1, 3}, {2, 5}, {4, 52}, {7, 1}, {8, 12}, {14, 3}, {16, 1}, {21, 2}, {28, 2}, {42, 1}, {56, 1}, {84, 1}});
        c.transitive = row(67, {{4, 51}, {8, 12}, {16, 1}, {28, 1}, {56, 1}, {84, 1}});
        c.stepwise_homogeneous = row(12, {{2, 1}, {4, 2}, {8, 2}, {14, 2}, {16, 1}, {21, 2}, {28, 1}, {42, 1}});
        c.stepwise_transitive = row(1, {{8, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=7";
        c.n = 7; c.t = 4; c.k = 5;
        c.all = row(204, {{1, 96}, {2, 41}, {4, 32}, {7, 6}, {8, 18}, {14, 6}, {28, 4}, {56, 1}});
        c.homogeneous = row(67, {{1, 1}, {4, 31}, {7, 6}, {8, 18}, {14, 6}, {28, 4}, {56, 1}});
        c.transitive = row(53, {{4, 31}, {8, 18}, {28, 3}, {56, 1}});
        c.stepwise_homogeneous = row(3, {{14, 2}, {28, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=7";
        c.n = 7; c.t = 4; c.k = 6;
        c.all = row(7, {{4, 1}, {6, 1}, {24, 2}, {42, 2}, {84, 1}});
        c.homogeneous = row(7, {{4, 1}, {6, 1}, {24, 2}, {42, 2}, {84, 1}});
        c.transitive = row(3, {{4, 1}, {24, 2}});
        c.stepwise_homogeneous = row(3, {{42, 2}, {84, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=7";
        c.n = 7; c.t = 4; c.k = 7;
        c.all = row(3, {{294, 2}, {588, 1}});
        c.homogeneous = row(3, {{294, 2}, {588, 1}});
        c.stepwise_homogeneous = row(3, {{294, 2}, {588, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=7";
        c.n = 7; c.t = 5; c.k = 2;
        c.all = row(10626, {{1, 9590}, {2, 957}, {4, 48}, {5, 4}, {8, 24}, {10, 2}, {14, 1}});
        c.homogeneous = row(176, {{1, 122}, {2, 37}, {4, 4}, {5, 4}, {8, 6}, {10, 2}, {14, 1}});
        c.transitive = row(6, {{5, 4}, {10, 2}});
        c.stepwise_homogeneous = row(176, {{1, 122}, {2, 37}, {4, 4}, {5, 4}, {8, 6}, {10, 2}, {14, 1}});
        c.stepwise_transitive = row(6, {{5, 4}, {10, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=7";
        c.n = 7; c.t = 5; c.k = 3;
        c.all = row(22982, {{1, 21848}, {2, 1039}, {3, 39}, {5, 30}, {6, 7}, {7, 1}, {10, 12}, {14, 1}, {21, 5}});
        c.homogeneous = row(49, {{1, 3}, {2, 1}, {5, 30}, {10, 12}, {14, 1}, {21, 2}});
        c.transitive = row(42, {{5, 30}, {10, 12}});
        c.stepwise_homogeneous = row(48, {{1, 2}, {2, 1}, {5, 30}, {10, 12}, {14, 1}, {21, 2}});
        c.stepwise_transitive = row(42, {{5, 30}, {10, 12}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=7";
        c.n = 7; c.t = 5; c.k = 4;
        c.all = row(19, {{1, 2}, {2, 4}, {4, 8}, {8, 3}, {14, 1}, {21, 1}});
        c.homogeneous = row(2, {{14, 1}, {21, 1}});
        c.stepwise_homogeneous = row(2, {{14, 1}, {21, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=7";
        c.n = 7; c.t = 5; c.k = 5;
        c.all = row(5, {{4, 2}, {14, 1}, {20, 2}});
        c.homogeneous = row(4, {{4, 1}, {14, 1}, {20, 2}});
        c.transitive = row(2, {{20, 2}});
        c.stepwise_homogeneous = row(1, {{14, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=7";
        c.n = 7; c.t = 5; c.k = 6;
        c.all = row(5, {{20, 1}, {24, 1}, {42, 1}, {120, 2}});
        c.homogeneous = row(5, {{20, 1}, {24, 1}, {42, 1}, {120, 2}});
        c.transitive = row(3, {{20, 1}, {120, 2}});
        c.stepwise_homogeneous = row(1, {{42, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=7";
        c.n = 7; c.t = 5; c.k = 7;
        c.all = row(1, {{294, 1}});
        c.homogeneous = row(1, {{294, 1}});
        c.stepwise_homogeneous = row(1, {{294, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=7";
        c.n = 7; c.t = 6; c.k = 2;
        c.all = row(1895, {{1, 1505}, {2, 328}, {3, 2}, {4, 29}, {5, 4}, {6, 5}, {8, 14}, {10, 2}, {12, 1}, {16, 2}, {48, 2}, {84, 1}});
        c.homogeneous = row(26, {{1, 7}, {2, 7}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {10, 1}, {12, 1}, {16, 2}, {48, 2}, {84, 1}});
        c.transitive = row(5, {{6, 1}, {12, 1}, {48, 2}, {84, 1}});
        c.stepwise_homogeneous = row(26, {{1, 7}, {2, 7}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {10, 1}, {12, 1}, {16, 2}, {48, 2}, {84, 1}});
        c.stepwise_transitive = row(5, {{6, 1}, {12, 1}, {48, 2}, {84, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=7";
        c.n = 7; c.t = 6; c.k = 3;
        c.all = row(23, {{1, 8}, {2, 4}, {3, 1}, {6, 5}, {12, 1}, {21, 1}, {84, 1}, {126, 2}});
        c.homogeneous = row(7, {{6, 3}, {12, 1}, {84, 1}, {126, 2}});
        c.transitive = row(7, {{6, 3}, {12, 1}, {84, 1}, {126, 2}});
        c.stepwise_homogeneous = row(6, {{6, 2}, {12, 1}, {84, 1}, {126, 2}});
        c.stepwise_transitive = row(4, {{12, 1}, {84, 1}, {126, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=7";
        c.n = 7; c.t = 6; c.k = 4;
        c.all = row(2, {{84, 1}, {126, 1}});
        c.homogeneous = row(2, {{84, 1}, {126, 1}});
        c.transitive = row(2, {{84, 1}, {126, 1}});
        c.stepwise_homogeneous = row(2, {{84, 1}, {126, 1}});
        c.stepwise_transitive = row(2, {{84, 1}, {126, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=7";
        c.n = 7; c.t = 6; c.k = 5;
        c.all = row(1, {{84, 1}});
        c.homogeneous = row(1, {{84, 1}});
        c.transitive = row(1, {{84, 1}});
        c.stepwise_homogeneous = row(1, {{84, 1}});
        c.stepwise_transitive = row(1, {{84, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=7";
        c.n = 7; c.t = 6; c.k = 6;
        c.all = row(1, {{252, 1}});
        c.homogeneous = row(1, {{252, 1}});
        c.transitive = row(1, {{252, 1}});
        c.stepwise_homogeneous = row(1, {{252, 1}});
        c.stepwise_transitive = row(1, {{252, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=7";
        c.n = 7; c.t = 6; c.k = 7;
        c.all = row(1, {{1764, 1}});
        c.homogeneous = row(1, {{1764, 1}});
        c.transitive = row(1, {{1764, 1}});
        c.stepwise_homogeneous = row(1, {{1764, 1}});
        c.stepwise_transitive = row(1, {{1764, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 2;
        c.stepwise_homogeneous = row(186, {{1, 52}, {2, 65}, {4, 43}, {8, 10}, {12, 2}, {16, 2}, {30, 1}, {32, 6}, {60, 1}, {64, 2}, {128, 2}});
        c.stepwise_transitive = row(99, {{2, 35}, {4, 39}, {8, 10}, {12, 2}, {16, 2}, {32, 6}, {60, 1}, {64, 2}, {128, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 3;
        c.stepwise_homogeneous = row(446443, {{1, 394387}, {2, 50556}, {3, 11}, {4, 1311}, {6, 28}, {8, 101}, {12, 22}, {16, 12}, {30, 2}, {32, 8}, {48, 1}, {60, 1}, {64, 1}, {192, 2}});
        c.stepwise_transitive = row(45429, {{2, 43990}, {4, 1265}, {6, 27}, {8, 99}, {12, 22}, {16, 12}, {30, 1}, {32, 8}, {48, 1}, {60, 1}, {64, 1}, {192, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 4;
        c.stepwise_homogeneous = row(4432284, {{1, 3196674}, {2, 1222057}, {3, 168}, {4, 11703}, {6, 343}, {8, 1002}, {12, 50}, {16, 194}, {24, 11}, {32, 54}, {48, 11}, {64, 14}, {192, 1}, {768, 2}});
        c.stepwise_transitive = row(1097655, {{2, 1086038}, {4, 10123}, {6, 317}, {8, 857}, {12, 50}, {16, 181}, {24, 9}, {32, 52}, {48, 11}, {64, 14}, {192, 1}, {768, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 5;
        c.stepwise_homogeneous = row(3826527, {{1, 884803}, {2, 2929324}, {4, 11629}, {8, 702}, {16, 65}, {32, 4}});
        c.stepwise_transitive = row(2569679, {{2, 2558291}, {4, 10693}, {8, 629}, {16, 62}, {32, 4}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 6;
        c.stepwise_homogeneous = row(242732, {{1, 7954}, {2, 227619}, {3, 2}, {4, 6289}, {6, 46}, {8, 611}, {12, 23}, {16, 181}, {32, 6}, {96, 1}});
        c.stepwise_transitive = row(206612, {{2, 200153}, {4, 5745}, {6, 35}, {8, 503}, {12, 22}, {16, 147}, {32, 6}, {96, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 7;
        c.stepwise_homogeneous = row(484, {{1, 28}, {2, 175}, {3, 5}, {4, 109}, {6, 72}, {8, 48}, {12, 29}, {16, 9}, {24, 2}, {32, 2}, {48, 2}, {56, 1}, {96, 2}});
        c.stepwise_transitive = row(305, {{2, 92}, {4, 82}, {6, 64}, {8, 24}, {12, 29}, {16, 7}, {24, 2}, {32, 2}, {48, 1}, {96, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=8";
        c.n = 8; c.t = 2; c.k = 8;
        c.stepwise_homogeneous = row(70, {{4, 9}, {8, 19}, {16, 22}, {32, 8}, {64, 11}, {448, 1}});
        c.stepwise_transitive = row(13, {{8, 2}, {16, 4}, {32, 4}, {64, 3}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 2;
        c.homogeneous = row(11565, {{1, 10583}, {2, 803}, {3, 24}, {4, 83}, {6, 22}, {8, 20}, {12, 14}, {16, 6}, {24, 2}, {32, 4}, {48, 2}, {96, 1}, {384, 1}});
        c.transitive = row(66, {{3, 24}, {6, 22}, {12, 14}, {24, 2}, {48, 2}, {96, 1}, {384, 1}});
        c.stepwise_homogeneous = row(11565, {{1, 10583}, {2, 803}, {3, 24}, {4, 83}, {6, 22}, {8, 20}, {12, 14}, {16, 6}, {24, 2}, {32, 4}, {48, 2}, {96, 1}, {384, 1}});
        c.stepwise_transitive = row(66, {{3, 24}, {6, 22}, {12, 14}, {24, 2}, {48, 2}, {96, 1}, {384, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 3;
        c.stepwise_homogeneous = row(9144025, {{1, 9121524}, {2, 13878}, {3, 7463}, {4, 479}, {6, 564}, {8, 27}, {12, 64}, {16, 8}, {18, 4}, {24, 3}, {36, 3}, {48, 5}, {144, 1}, {576, 2}});
        c.stepwise_transitive = row(7627, {{3, 7067}, {6, 485}, {12, 57}, {18, 4}, {24, 3}, {36, 3}, {48, 5}, {144, 1}, {576, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 4;
        c.stepwise_homogeneous = row(178502, {{1, 91562}, {2, 40127}, {3, 41876}, {4, 2464}, {6, 1665}, {8, 397}, {9, 38}, {12, 177}, {16, 94}, {18, 26}, {24, 39}, {32, 8}, {36, 3}, {48, 10}, {64, 5}, {72, 2}, {96, 3}, {144, 1}, {192, 3}, {2304, 2}});
        c.stepwise_transitive = row(41505, {{3, 39650}, {6, 1566}, {9, 38}, {12, 168}, {18, 26}, {24, 36}, {36, 3}, {48, 7}, {72, 2}, {96, 3}, {144, 1}, {192, 3}, {2304, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 5;
        c.stepwise_homogeneous = row(628, {{1, 34}, {2, 142}, {3, 311}, {4, 59}, {6, 34}, {8, 26}, {12, 5}, {16, 5}, {24, 10}, {48, 2}});
        c.stepwise_transitive = row(75, {{3, 38}, {6, 25}, {12, 3}, {24, 7}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 6;
        c.stepwise_homogeneous = row(111, {{2, 18}, {3, 8}, {4, 42}, {6, 8}, {8, 8}, {12, 12}, {16, 8}, {24, 2}, {48, 5}});
        c.stepwise_transitive = row(32, {{3, 8}, {6, 8}, {12, 12}, {24, 2}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 7;
        c.stepwise_homogeneous = row(10, {{8, 2}, {9, 3}, {24, 2}, {56, 1}, {168, 2}});
        c.stepwise_transitive = row(6, {{9, 3}, {24, 1}, {168, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=8";
        c.n = 8; c.t = 3; c.k = 8;
        c.stepwise_homogeneous = row(7, {{48, 1}, {64, 2}, {192, 1}, {448, 1}, {1344, 2}});
        c.stepwise_transitive = row(3, {{48, 1}, {1344, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 2;
        c.stepwise_homogeneous = row(216950, {{1, 212259}, {2, 4241}, {3, 20}, {4, 313}, {6, 8}, {8, 52}, {12, 2}, {16, 31}, {24, 1}, {32, 9}, {48, 6}, {64, 3}, {96, 1}, {128, 3}, {384, 1}});
        c.stepwise_transitive = row(152, {{4, 98}, {8, 17}, {16, 20}, {24, 1}, {32, 4}, {48, 5}, {64, 3}, {128, 3}, {384, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 3;
        c.stepwise_homogeneous = row(1648723, {{1, 1596362}, {2, 45732}, {3, 46}, {4, 6203}, {6, 20}, {8, 279}, {12, 5}, {16, 58}, {24, 6}, {32, 8}, {48, 4}});
        c.stepwise_transitive = row(4284, {{4, 4028}, {8, 196}, {12, 2}, {16, 46}, {24, 2}, {32, 8}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 4;
        c.stepwise_homogeneous = row(3547, {{1, 296}, {2, 1420}, {3, 14}, {4, 1273}, {6, 5}, {8, 340}, {12, 5}, {16, 106}, {24, 12}, {32, 45}, {48, 1}, {64, 26}, {96, 4}});
        c.stepwise_transitive = row(712, {{4, 510}, {8, 124}, {12, 4}, {16, 32}, {24, 6}, {32, 15}, {64, 21}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 5;
        c.stepwise_homogeneous = row(58, {{2, 2}, {4, 10}, {8, 25}, {16, 9}, {24, 4}, {32, 4}, {48, 2}, {64, 2}});
        c.stepwise_transitive = row(20, {{4, 3}, {8, 5}, {16, 3}, {24, 1}, {32, 4}, {48, 2}, {64, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 6;
        c.stepwise_homogeneous = row(4, {{16, 1}, {24, 1}, {48, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 7;
        c.stepwise_homogeneous = row(3, {{56, 1}, {168, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=8";
        c.n = 8; c.t = 4; c.k = 8;
        c.stepwise_homogeneous = row(3, {{448, 1}, {1344, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 2;
        c.stepwise_homogeneous = row(509622, {{1, 505439}, {2, 3896}, {4, 185}, {5, 9}, {8, 52}, {10, 8}, {16, 21}, {20, 2}, {32, 5}, {64, 3}, {128, 2}});
        c.stepwise_transitive = row(19, {{5, 9}, {10, 8}, {20, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 3;
        c.stepwise_homogeneous = row(2652, {{1, 2112}, {2, 419}, {3, 2}, {4, 75}, {6, 13}, {8, 15}, {12, 2}, {16, 9}, {24, 2}, {48, 3}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 4;
        c.stepwise_homogeneous = row(267, {{1, 129}, {2, 30}, {3, 12}, {4, 30}, {6, 1}, {8, 23}, {12, 3}, {16, 17}, {24, 2}, {32, 11}, {48, 1}, {64, 4}, {96, 2}, {192, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 5;
        c.stepwise_homogeneous = row(2, {{8, 1}, {16, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 6;
        c.stepwise_homogeneous = row(1, {{16, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 7;
        c.stepwise_homogeneous = row(1, {{56, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=8";
        c.n = 8; c.t = 5; c.k = 8;
        c.stepwise_homogeneous = row(1, {{448, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 2;
        c.stepwise_homogeneous = row(91013, {{1, 89017}, {2, 1597}, {3, 59}, {4, 138}, {5, 4}, {6, 71}, {8, 35}, {10, 8}, {12, 37}, {16, 22}, {24, 3}, {32, 7}, {48, 7}, {64, 2}, {96, 2}, {128, 2}, {384, 2}});
        c.stepwise_transitive = row(109, {{6, 60}, {12, 36}, {24, 3}, {48, 6}, {96, 2}, {384, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 3;
        c.stepwise_homogeneous = row(975, {{1, 3}, {2, 10}, {3, 18}, {4, 7}, {6, 797}, {8, 3}, {12, 120}, {18, 2}, {24, 5}, {36, 5}, {48, 1}, {96, 3}, {288, 1}});
        c.stepwise_transitive = row(908, {{6, 775}, {12, 119}, {24, 4}, {36, 5}, {48, 1}, {96, 3}, {288, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 4;
        c.stepwise_homogeneous = row(155, {{3, 2}, {6, 122}, {9, 2}, {12, 14}, {18, 8}, {24, 1}, {32, 1}, {36, 1}, {48, 1}, {96, 2}, {144, 1}});
        c.stepwise_transitive = row(146, {{6, 122}, {12, 13}, {18, 8}, {36, 1}, {48, 1}, {144, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 5;
        c.stepwise_homogeneous = row(1, {{24, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 6;
        c.stepwise_homogeneous = row(1, {{48, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 7;
        c.stepwise_homogeneous = row(1, {{168, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=8";
        c.n = 8; c.t = 6; c.k = 8;
        c.stepwise_homogeneous = row(1, {{1344, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 2;
        c.stepwise_homogeneous = row(4538, {{1, 4439}, {2, 67}, {3, 9}, {4, 3}, {5, 2}, {6, 3}, {7, 1}, {8, 2}, {10, 4}, {32, 1}, {42, 2}, {48, 1}, {84, 1}, {128, 1}, {192, 1}, {2688, 1}});
        c.stepwise_transitive = row(5, {{7, 1}, {42, 2}, {84, 1}, {2688, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 3;
        c.stepwise_homogeneous = row(2, {{21, 1}, {168, 1}});
        c.stepwise_transitive = row(2, {{21, 1}, {168, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 4;
        c.stepwise_homogeneous = row(2, {{168, 1}, {672, 1}});
        c.stepwise_transitive = row(2, {{168, 1}, {672, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 5;
        c.stepwise_homogeneous = row(1, {{168, 1}});
        c.stepwise_transitive = row(1, {{168, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 6;
        c.stepwise_homogeneous = row(1, {{336, 1}});
        c.stepwise_transitive = row(1, {{336, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 7;
        c.stepwise_homogeneous = row(1, {{1176, 1}});
        c.stepwise_transitive = row(1, {{1176, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=8";
        c.n = 8; c.t = 7; c.k = 8;
        c.stepwise_homogeneous = row(1, {{9408, 1}});
        c.stepwise_transitive = row(1, {{9408, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 2;
        c.stepwise_transitive = row(126, {{4, 95}, {6, 3}, {12, 13}, {16, 4}, {24, 3}, {36, 3}, {72, 2}, {80, 2}, {648, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 3;
        c.stepwise_transitive = row(1418577, {{2, 1413987}, {4, 3905}, {6, 511}, {8, 8}, {12, 115}, {18, 19}, {24, 8}, {36, 13}, {40, 3}, {54, 2}, {72, 3}, {108, 2}, {1944, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 4;
        c.stepwise_transitive = row(560524587, {{2, 560437428}, {4, 82404}, {6, 3520}, {8, 958}, {12, 220}, {16, 15}, {18, 19}, {24, 12}, {36, 5}, {54, 2}, {72, 1}, {80, 1}, {108, 1}, {144, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 5;
        c.stepwise_transitive = row(20019499500, {{2, 20019088250}, {4, 400369}, {6, 9228}, {8, 1223}, {12, 370}, {16, 6}, {18, 29}, {24, 9}, {36, 11}, {54, 2}, {72, 1}, {108, 1}, {144, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 6;
        c.stepwise_transitive = row(67480364637, {{2, 67479927127}, {4, 423557}, {6, 12685}, {8, 521}, {12, 577}, {18, 89}, {24, 32}, {36, 28}, {54, 3}, {72, 6}, {108, 9}, {324, 2}, {648, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 7;
        c.stepwise_transitive = row(1577270689, {{2, 1577056397}, {4, 208362}, {6, 4900}, {8, 384}, {12, 595}, {18, 13}, {24, 18}, {36, 13}, {54, 2}, {108, 4}, {216, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 8;
        c.stepwise_transitive = row(14940988, {{2, 14917761}, {4, 20900}, {6, 1879}, {8, 114}, {12, 268}, {16, 8}, {18, 22}, {24, 13}, {36, 13}, {54, 2}, {72, 1}, {96, 2}, {108, 4}, {864, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "2-MOLR for n=9";
        c.n = 9; c.t = 2; c.k = 9;
        c.stepwise_transitive = row(28955, {{2, 25570}, {4, 2802}, {6, 307}, {8, 110}, {12, 99}, {16, 3}, {18, 13}, {24, 11}, {36, 17}, {54, 2}, {72, 3}, {96, 2}, {108, 6}, {144, 1}, {162, 1}, {324, 5}, {972, 2}, {7776, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=9";
        c.n = 9; c.t = 3; c.k = 2;
        c.stepwise_transitive = row(202, {{3, 86}, {6, 102}, {12, 4}, {18, 3}, {24, 2}, {36, 3}, {54, 1}, {108, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=9";
        c.n = 9; c.t = 3; c.k = 3;
        c.stepwise_transitive = row(72836, {{3, 71109}, {6, 1618}, {9, 40}, {12, 6}, {18, 56}, {36, 1}, {54, 4}, {162, 1}, {324, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "3-MOLR for n=9";
        c.n = 9; c.t = 3; c.k = 4;
        c.stepwise_transitive = row(1746912, {{3, 1742486}, {6, 4209}, {9, 149}, {12, 37}, {18, 21}, {36, 4}, {54, 6}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 2;
        c.stepwise_transitive = row(1017, {{4, 881}, {8, 121}, {12, 5}, {16, 2}, {24, 7}, {144, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 3;
        c.stepwise_transitive = row(356680, {{4, 355023}, {8, 1511}, {12, 112}, {16, 6}, {24, 18}, {36, 4}, {48, 1}, {72, 3}, {108, 1}, {432, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 4;
        c.stepwise_transitive = row(2640163, {{4, 2635762}, {8, 4131}, {12, 95}, {16, 147}, {24, 1}, {32, 17}, {36, 2}, {72, 5}, {144, 2}, {288, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 5;
        c.stepwise_transitive = row(645453, {{4, 641633}, {8, 3467}, {12, 30}, {16, 305}, {32, 11}, {36, 1}, {72, 3}, {144, 2}, {288, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 6;
        c.stepwise_transitive = row(1816, {{4, 1662}, {8, 124}, {12, 15}, {16, 9}, {24, 1}, {36, 1}, {48, 1}, {72, 1}, {216, 1}, {432, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 7;
        c.stepwise_transitive = row(31, {{4, 3}, {8, 12}, {16, 14}, {72, 1}, {144, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 8;
        c.stepwise_transitive = row(7, {{8, 2}, {64, 3}, {288, 1}, {576, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "4-MOLR for n=9";
        c.n = 9; c.t = 4; c.k = 9;
        c.stepwise_transitive = row(5, {{64, 2}, {576, 1}, {2592, 1}, {5184, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "5-MOLR for n=9";
        c.n = 9; c.t = 5; c.k = 2;
        c.stepwise_transitive = row(17, {{5, 7}, {10, 10}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 2;
        c.stepwise_transitive = row(543, {{6, 422}, {12, 104}, {24, 7}, {36, 4}, {54, 1}, {72, 2}, {108, 2}, {216, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 3;
        c.stepwise_transitive = row(21620, {{6, 20528}, {12, 946}, {18, 69}, {24, 12}, {36, 48}, {54, 5}, {72, 3}, {108, 3}, {324, 5}, {648, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 4;
        c.stepwise_transitive = row(244, {{6, 157}, {12, 41}, {18, 24}, {24, 2}, {36, 8}, {54, 3}, {72, 3}, {108, 6}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 5;
        c.stepwise_transitive = row(33, {{6, 10}, {12, 11}, {18, 1}, {36, 4}, {54, 3}, {108, 4}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 6;
        c.stepwise_transitive = row(16, {{6, 1}, {12, 1}, {24, 1}, {36, 2}, {72, 2}, {108, 2}, {216, 2}, {324, 3}, {648, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 7;
        c.stepwise_transitive = row(1, {{12, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 8;
        c.stepwise_transitive = row(1, {{48, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "6-MOLR for n=9";
        c.n = 9; c.t = 6; c.k = 9;
        c.stepwise_transitive = row(1, {{432, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=9";
        c.n = 9; c.t = 7; c.k = 2;
        c.stepwise_transitive = row(39, {{7, 37}, {14, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=9";
        c.n = 9; c.t = 7; c.k = 3;
        c.stepwise_transitive = row(1532, {{7, 1522}, {21, 10}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "7-MOLR for n=9";
        c.n = 9; c.t = 7; c.k = 4;
        c.stepwise_transitive = row(300, {{7, 298}, {21, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 2;
        c.stepwise_transitive = row(54, {{8, 39}, {16, 9}, {32, 2}, {48, 1}, {56, 1}, {96, 1}, {864, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 3;
        c.stepwise_transitive = row(48, {{8, 22}, {16, 17}, {48, 3}, {96, 2}, {144, 1}, {288, 1}, {432, 1}, {2592, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 4;
        c.stepwise_transitive = row(27, {{16, 11}, {24, 2}, {32, 2}, {48, 3}, {64, 4}, {144, 1}, {288, 1}, {432, 1}, {576, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 5;
        c.stepwise_transitive = row(22, {{16, 8}, {24, 2}, {48, 3}, {64, 4}, {144, 1}, {288, 1}, {432, 1}, {576, 2}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 6;
        c.stepwise_transitive = row(16, {{16, 6}, {48, 3}, {96, 2}, {144, 1}, {288, 1}, {432, 1}, {864, 1}, {2592, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 7;
        c.stepwise_transitive = row(9, {{16, 2}, {48, 2}, {96, 3}, {288, 1}, {864, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 8;
        c.stepwise_transitive = row(7, {{48, 2}, {384, 3}, {1152, 1}, {3456, 1}});
        v.push_back(std::move(c));
    }
    {
        ExpectedCell c;
        c.caption = "8-MOLR for n=9";
        c.n = 9; c.t = 8; c.k = 9;
        c.stepwise_transitive = row(5, {{384, 2}, {3456, 1}, {10368, 1}, {31104, 1}});
        v.push_back(std::move(c));
    }
    return v;
}

std::vector<ExpectedCount> build_non_isotopic() {
    std::vector<ExpectedCount> v;
    v.push_back({"number of non-isotopic t-MOLR for n=4", 4, 2, 2, 3});
    v.push_back({"number of non-isotopic t-MOLR for n=4", 4, 2, 3, 2});
    v.push_back({"number of non-isotopic t-MOLR for n=4", 4, 2, 4, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=4", 4, 3, 2, 2});
    v.push_back({"number of non-isotopic t-MOLR for n=4", 4, 3, 3, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=4", 4, 3, 4, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 2, 2, 5});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 2, 3, 14});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 2, 4, 2});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 2, 5, 2});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 3, 2, 4});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 3, 3, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 3, 4, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 3, 5, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 4, 2, 3});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 4, 3, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 4, 4, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=5", 5, 4, 5, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 2, 2, 28});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 2, 3, 1526});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 2, 4, 2036});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 2, 5, 85});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 2, 6, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 3, 2, 103});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 3, 3, 2572});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 3, 4, 513});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 3, 5, 7});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 3, 6, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 4, 2, 92});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 4, 3, 118});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 4, 4, 12});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 4, 5, 8});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 4, 6, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 5, 2, 33});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 5, 3, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 5, 4, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 5, 5, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=6", 6, 5, 6, 0});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 2, 2, 100});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 2, 3, 514162});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 2, 4, 49415812});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 2, 5, 21290125});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 2, 6, 11582});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 2, 7, 20});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 3, 2, 2858});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 3, 3, 65883453});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 3, 4, 323112477});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 3, 5, 55545});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 3, 6, 16});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 3, 7, 4});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 4, 2, 17609});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 4, 3, 35469948});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 4, 4, 68659});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 4, 5, 204});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 4, 6, 7});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 4, 7, 3});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 5, 2, 10626});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 5, 3, 22982});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 5, 4, 19});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 5, 5, 5});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 5, 6, 5});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 5, 7, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 6, 2, 1895});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 6, 3, 23});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 6, 4, 2});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 6, 5, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 6, 6, 1});
    v.push_back({"number of non-isotopic t-MOLR for n=7", 7, 6, 7, 1});
    return v;
}

std::vector<ExpectedCount> build_paratopism() {
    std::vector<ExpectedCount> v;
    v.push_back({"paratopism classes of t-MOLR for n=4", 4, 2, 2, 2});
    v.push_back({"paratopism classes of t-MOLR for n=4", 4, 2, 3, 2});
    v.push_back({"paratopism classes of t-MOLR for n=4", 4, 2, 4, 1});
    v.push_back({"paratopism classes of t-MOLR for n=4", 4, 3, 2, 2});
    v.push_back({"paratopism classes of t-MOLR for n=4", 4, 3, 3, 1});
    v.push_back({"paratopism classes of t-MOLR for n=4", 4, 3, 4, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 2, 2, 3});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 2, 3, 9});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 2, 4, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 2, 5, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 3, 2, 3});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 3, 3, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 3, 4, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 3, 5, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 4, 2, 2});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 4, 3, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 4, 4, 1});
    v.push_back({"paratopism classes of t-MOLR for n=5", 5, 4, 5, 1});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 2, 2, 14});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 2, 3, 575});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 2, 4, 745});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 2, 5, 44});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 2, 6, 0});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 3, 2, 44});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 3, 3, 745});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 3, 4, 179});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 3, 5, 5});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 3, 6, 0});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 4, 2, 33});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 4, 3, 44});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 4, 4, 5});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 4, 5, 5});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 4, 6, 0});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 5, 2, 17});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 5, 3, 0});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 5, 4, 0});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 5, 5, 0});
    v.push_back({"paratopism classes of t-MOLR for n=6", 6, 5, 6, 0});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 2, 2, 45});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 2, 3, 172622});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 2, 4, 43969186});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 2, 5, 18888021});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 2, 6, 4013});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 2, 7, 7});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 3, 2, 808});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 3, 3, 56039128});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 3, 4, 315375530});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 3, 5, 14121});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 3, 6, 12});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 3, 7, 1});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 4, 2, 3712});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 4, 3, 28664773});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 4, 4, 14121});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 4, 5, 82});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 4, 6, 4});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 4, 7, 1});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 5, 2, 1895});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 5, 3, 4013});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 5, 4, 12});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 5, 5, 4});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 5, 6, 4});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 5, 7, 1});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 6, 2, 324});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 6, 3, 11});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 6, 4, 2});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 6, 5, 1});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 6, 6, 1});
    v.push_back({"paratopism classes of t-MOLR for n=7", 7, 6, 7, 1});
    return v;
}

}  // namespace

const std::vector<ExpectedCell> &expected_cells() {
    static const std::vector<ExpectedCell> v = build_cells();
    return v;
}

const std::vector<ExpectedCount> &expected_non_isotopic() {
    static const std::vector<ExpectedCount> v = build_non_isotopic();
    return v;
}

const std::vector<ExpectedCount> &expected_paratopism() {
    static const std::vector<ExpectedCount> v = build_paratopism();
    return v;
}

}  // namespace molr::tables
