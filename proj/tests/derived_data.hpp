#pragma once

// Full decomposition tables for n <= 9, computed with an independent
// implementation and frozen here as regression goldens. Every table was
// checked against the Betti numbers of the surface series at full rank.

namespace k3char::derived {

struct Cell {
  int n;
  int degree;
  char family;
  const char* weight;
  long long mult;
};

struct BettiRow {
  int n;
  int degree;
  long long betti;
};

inline constexpr Cell kCells[] = {
    {1, 0, 'D', "", 1},
    {1, 2, 'D', "1", 1},
    {2, 0, 'B', "", 1},
    {2, 2, 'B', "1", 1},
    {2, 4, 'B', "", 1},
    {2, 4, 'B', "2", 1},
    {3, 0, 'B', "", 1},
    {3, 2, 'B', "1", 1},
    {3, 4, 'B', "", 1},
    {3, 4, 'B', "1", 1},
    {3, 4, 'B', "2", 1},
    {3, 6, 'B', "", 1},
    {3, 6, 'B', "1", 1},
    {3, 6, 'B', "1,1", 1},
    {3, 6, 'B', "3", 1},
    {4, 0, 'B', "", 1},
    {4, 2, 'B', "1", 1},
    {4, 4, 'B', "", 2},
    {4, 4, 'B', "1", 1},
    {4, 4, 'B', "2", 1},
    {4, 6, 'B', "", 1},
    {4, 6, 'B', "1", 2},
    {4, 6, 'B', "2", 1},
    {4, 6, 'B', "1,1", 1},
    {4, 6, 'B', "3", 1},
    {4, 8, 'B', "", 3},
    {4, 8, 'B', "1", 2},
    {4, 8, 'B', "2", 2},
    {4, 8, 'B', "2,1", 1},
    {4, 8, 'B', "4", 1},
    {5, 0, 'B', "", 1},
    {5, 2, 'B', "1", 1},
    {5, 4, 'B', "", 2},
    {5, 4, 'B', "1", 1},
    {5, 4, 'B', "2", 1},
    {5, 6, 'B', "", 1},
    {5, 6, 'B', "1", 3},
    {5, 6, 'B', "2", 1},
    {5, 6, 'B', "1,1", 1},
    {5, 6, 'B', "3", 1},
    {5, 8, 'B', "", 4},
    {5, 8, 'B', "1", 3},
    {5, 8, 'B', "2", 3},
    {5, 8, 'B', "1,1", 1},
    {5, 8, 'B', "3", 1},
    {5, 8, 'B', "2,1", 1},
    {5, 8, 'B', "4", 1},
    {5, 10, 'B', "", 2},
    {5, 10, 'B', "1", 5},
    {5, 10, 'B', "2", 2},
    {5, 10, 'B', "1,1", 2},
    {5, 10, 'B', "3", 2},
    {5, 10, 'B', "2,1", 1},
    {5, 10, 'B', "3,1", 1},
    {5, 10, 'B', "5", 1},
    {6, 0, 'B', "", 1},
    {6, 2, 'B', "1", 1},
    {6, 4, 'B', "", 2},
    {6, 4, 'B', "1", 1},
    {6, 4, 'B', "2", 1},
    {6, 6, 'B', "", 2},
    {6, 6, 'B', "1", 3},
    {6, 6, 'B', "2", 1},
    {6, 6, 'B', "1,1", 1},
    {6, 6, 'B', "3", 1},
    {6, 8, 'B', "", 5},
    {6, 8, 'B', "1", 4},
    {6, 8, 'B', "2", 4},
    {6, 8, 'B', "1,1", 1},
    {6, 8, 'B', "3", 1},
    {6, 8, 'B', "2,1", 1},
    {6, 8, 'B', "4", 1},
    {6, 10, 'B', "", 4},
    {6, 10, 'B', "1", 7},
    {6, 10, 'B', "2", 4},
    {6, 10, 'B', "1,1", 3},
    {6, 10, 'B', "3", 3},
    {6, 10, 'B', "2,1", 2},
    {6, 10, 'B', "4", 1},
    {6, 10, 'B', "3,1", 1},
    {6, 10, 'B', "5", 1},
    {6, 12, 'B', "", 7},
    {6, 12, 'B', "1", 7},
    {6, 12, 'B', "2", 7},
    {6, 12, 'B', "1,1", 2},
    {6, 12, 'B', "3", 3},
    {6, 12, 'B', "2,1", 2},
    {6, 12, 'B', "1,1,1", 1},
    {6, 12, 'B', "4", 2},
    {6, 12, 'B', "3,1", 1},
    {6, 12, 'B', "2,2", 1},
    {6, 12, 'B', "4,1", 1},
    {6, 12, 'B', "6", 1},
    {7, 0, 'B', "", 1},
    {7, 2, 'B', "1", 1},
    {7, 4, 'B', "", 2},
    {7, 4, 'B', "1", 1},
    {7, 4, 'B', "2", 1},
    {7, 6, 'B', "", 2},
    {7, 6, 'B', "1", 3},
    {7, 6, 'B', "2", 1},
    {7, 6, 'B', "1,1", 1},
    {7, 6, 'B', "3", 1},
    {7, 8, 'B', "", 5},
    {7, 8, 'B', "1", 5},
    {7, 8, 'B', "2", 4},
    {7, 8, 'B', "1,1", 1},
    {7, 8, 'B', "3", 1},
    {7, 8, 'B', "2,1", 1},
    {7, 8, 'B', "4", 1},
    {7, 10, 'B', "", 5},
    {7, 10, 'B', "1", 9},
    {7, 10, 'B', "2", 5},
    {7, 10, 'B', "1,1", 4},
    {7, 10, 'B', "3", 4},
    {7, 10, 'B', "2,1", 2},
    {7, 10, 'B', "4", 1},
    {7, 10, 'B', "3,1", 1},
    {7, 10, 'B', "5", 1},
    {7, 12, 'B', "", 10},
    {7, 12, 'B', "1", 11},
    {7, 12, 'B', "2", 10},
    {7, 12, 'B', "1,1", 4},
    {7, 12, 'B', "3", 5},
    {7, 12, 'B', "2,1", 4},
    {7, 12, 'B', "1,1,1", 1},
    {7, 12, 'B', "4", 3},
    {7, 12, 'B', "3,1", 2},
    {7, 12, 'B', "2,2", 1},
    {7, 12, 'B', "5", 1},
    {7, 12, 'B', "4,1", 1},
    {7, 12, 'B', "6", 1},
    {7, 14, 'B', "", 7},
    {7, 14, 'B', "1", 14},
    {7, 14, 'B', "2", 9},
    {7, 14, 'B', "1,1", 7},
    {7, 14, 'B', "3", 7},
    {7, 14, 'B', "2,1", 5},
    {7, 14, 'B', "4", 3},
    {7, 14, 'B', "3,1", 3},
    {7, 14, 'B', "2,1,1", 1},
    {7, 14, 'B', "5", 2},
    {7, 14, 'B', "4,1", 1},
    {7, 14, 'B', "3,2", 1},
    {7, 14, 'B', "5,1", 1},
    {7, 14, 'B', "7", 1},
    {8, 0, 'B', "", 1},
    {8, 2, 'B', "1", 1},
    {8, 4, 'B', "", 2},
    {8, 4, 'B', "1", 1},
    {8, 4, 'B', "2", 1},
    {8, 6, 'B', "", 2},
    {8, 6, 'B', "1", 3},
    {8, 6, 'B', "2", 1},
    {8, 6, 'B', "1,1", 1},
    {8, 6, 'B', "3", 1},
    {8, 8, 'B', "", 6},
    {8, 8, 'B', "1", 5},
    {8, 8, 'B', "2", 4},
    {8, 8, 'B', "1,1", 1},
    {8, 8, 'B', "3", 1},
    {8, 8, 'B', "2,1", 1},
    {8, 8, 'B', "4", 1},
    {8, 10, 'B', "", 6},
    {8, 10, 'B', "1", 10},
    {8, 10, 'B', "2", 6},
    {8, 10, 'B', "1,1", 4},
    {8, 10, 'B', "3", 4},
    {8, 10, 'B', "2,1", 2},
    {8, 10, 'B', "4", 1},
    {8, 10, 'B', "3,1", 1},
    {8, 10, 'B', "5", 1},
    {8, 12, 'B', "", 13},
    {8, 12, 'B', "1", 14},
    {8, 12, 'B', "2", 13},
    {8, 12, 'B', "1,1", 5},
    {8, 12, 'B', "3", 6},
    {8, 12, 'B', "2,1", 5},
    {8, 12, 'B', "1,1,1", 1},
    {8, 12, 'B', "4", 4},
    {8, 12, 'B', "3,1", 2},
    {8, 12, 'B', "2,2", 1},
    {8, 12, 'B', "5", 1},
    {8, 12, 'B', "4,1", 1},
    {8, 12, 'B', "6", 1},
    {8, 14, 'B', "", 12},
    {8, 14, 'B', "1", 21},
    {8, 14, 'B', "2", 15},
    {8, 14, 'B', "1,1", 10},
    {8, 14, 'B', "3", 11},
    {8, 14, 'B', "2,1", 8},
    {8, 14, 'B', "1,1,1", 1},
    {8, 14, 'B', "4", 5},
    {8, 14, 'B', "3,1", 5},
    {8, 14, 'B', "2,2", 1},
    {8, 14, 'B', "2,1,1", 1},
    {8, 14, 'B', "5", 3},
    {8, 14, 'B', "4,1", 2},
    {8, 14, 'B', "3,2", 1},
    {8, 14, 'B', "6", 1},
    {8, 14, 'B', "5,1", 1},
    {8, 14, 'B', "7", 1},
    {8, 16, 'B', "", 18},
    {8, 16, 'B', "1", 21},
    {8, 16, 'B', "2", 21},
    {8, 16, 'B', "1,1", 9},
    {8, 16, 'B', "3", 11},
    {8, 16, 'B', "2,1", 10},
    {8, 16, 'B', "1,1,1", 2},
    {8, 16, 'B', "4", 8},
    {8, 16, 'B', "3,1", 5},
    {8, 16, 'B', "2,2", 3},
    {8, 16, 'B', "2,1,1", 1},
    {8, 16, 'B', "5", 3},
    {8, 16, 'B', "4,1", 3},
    {8, 16, 'B', "3,2", 1},
    {8, 16, 'B', "3,1,1", 1},
    {8, 16, 'B', "6", 2},
    {8, 16, 'B', "5,1", 1},
    {8, 16, 'B', "4,2", 1},
    {8, 16, 'B', "6,1", 1},
    {8, 16, 'B', "8", 1},
    {9, 0, 'B', "", 1},
    {9, 2, 'B', "1", 1},
    {9, 4, 'B', "", 2},
    {9, 4, 'B', "1", 1},
    {9, 4, 'B', "2", 1},
    {9, 6, 'B', "", 2},
    {9, 6, 'B', "1", 3},
    {9, 6, 'B', "2", 1},
    {9, 6, 'B', "1,1", 1},
    {9, 6, 'B', "3", 1},
    {9, 8, 'B', "", 6},
    {9, 8, 'B', "1", 5},
    {9, 8, 'B', "2", 4},
    {9, 8, 'B', "1,1", 1},
    {9, 8, 'B', "3", 1},
    {9, 8, 'B', "2,1", 1},
    {9, 8, 'B', "4", 1},
    {9, 10, 'B', "", 6},
    {9, 10, 'B', "1", 11},
    {9, 10, 'B', "2", 6},
    {9, 10, 'B', "1,1", 4},
    {9, 10, 'B', "3", 4},
    {9, 10, 'B', "2,1", 2},
    {9, 10, 'B', "4", 1},
    {9, 10, 'B', "3,1", 1},
    {9, 10, 'B', "5", 1},
    {9, 12, 'B', "", 15},
    {9, 12, 'B', "1", 16},
    {9, 12, 'B', "2", 14},
    {9, 12, 'B', "1,1", 6},
    {9, 12, 'B', "3", 7},
    {9, 12, 'B', "2,1", 5},
    {9, 12, 'B', "1,1,1", 1},
    {9, 12, 'B', "4", 4},
    {9, 12, 'B', "3,1", 2},
    {9, 12, 'B', "2,2", 1},
    {9, 12, 'B', "5", 1},
    {9, 12, 'B', "4,1", 1},
    {9, 12, 'B', "6", 1},
    {9, 14, 'B', "", 15},
    {9, 14, 'B', "1", 27},
    {9, 14, 'B', "2", 19},
    {9, 14, 'B', "1,1", 13},
    {9, 14, 'B', "3", 14},
    {9, 14, 'B', "2,1", 10},
    {9, 14, 'B', "1,1,1", 1},
    {9, 14, 'B', "4", 6},
    {9, 14, 'B', "3,1", 6},
    {9, 14, 'B', "2,2", 1},
    {9, 14, 'B', "2,1,1", 1},
    {9, 14, 'B', "5", 4},
    {9, 14, 'B', "4,1", 2},
    {9, 14, 'B', "3,2", 1},
    {9, 14, 'B', "6", 1},
    {9, 14, 'B', "5,1", 1},
    {9, 14, 'B', "7", 1},
    {9, 16, 'B', "", 25},
    {9, 16, 'B', "1", 33},
    {9, 16, 'B', "2", 31},
    {9, 16, 'B', "1,1", 15},
    {9, 16, 'B', "3", 18},
    {9, 16, 'B', "2,1", 16},
    {9, 16, 'B', "1,1,1", 3},
    {9, 16, 'B', "4", 12},
    {9, 16, 'B', "3,1", 9},
    {9, 16, 'B', "2,2", 4},
    {9, 16, 'B', "2,1,1", 2},
    {9, 16, 'B', "5", 5},
    {9, 16, 'B', "4,1", 5},
    {9, 16, 'B', "3,2", 2},
    {9, 16, 'B', "3,1,1", 1},
    {9, 16, 'B', "6", 3},
    {9, 16, 'B', "5,1", 2},
    {9, 16, 'B', "4,2", 1},
    {9, 16, 'B', "7", 1},
    {9, 16, 'B', "6,1", 1},
    {9, 16, 'B', "8", 1},
    {9, 18, 'B', "", 21},
    {9, 18, 'B', "1", 39},
    {9, 18, 'B', "2", 30},
    {9, 18, 'B', "1,1", 21},
    {9, 18, 'B', "3", 24},
    {9, 18, 'B', "2,1", 18},
    {9, 18, 'B', "1,1,1", 3},
    {9, 18, 'B', "4", 11},
    {9, 18, 'B', "3,1", 13},
    {9, 18, 'B', "2,2", 3},
    {9, 18, 'B', "2,1,1", 3},
    {9, 18, 'B', "5", 8},
    {9, 18, 'B', "4,1", 6},
    {9, 18, 'B', "3,2", 3},
    {9, 18, 'B', "3,1,1", 1},
    {9, 18, 'B', "2,2,1", 1},
    {9, 18, 'B', "6", 3},
    {9, 18, 'B', "5,1", 3},
    {9, 18, 'B', "4,2", 1},
    {9, 18, 'B', "4,1,1", 1},
    {9, 18, 'B', "3,3", 1},
    {9, 18, 'B', "7", 2},
    {9, 18, 'B', "6,1", 1},
    {9, 18, 'B', "5,2", 1},
    {9, 18, 'B', "7,1", 1},
    {9, 18, 'B', "9", 1},
};

inline constexpr BettiRow kBetti[] = {
    {1, 0, 1},
    {1, 2, 22},
    {2, 0, 1},
    {2, 2, 23},
    {2, 4, 276},
    {3, 0, 1},
    {3, 2, 23},
    {3, 4, 299},
    {3, 6, 2554},
    {4, 0, 1},
    {4, 2, 23},
    {4, 4, 300},
    {4, 6, 2852},
    {4, 8, 19298},
    {5, 0, 1},
    {5, 2, 23},
    {5, 4, 300},
    {5, 6, 2875},
    {5, 8, 22127},
    {5, 10, 125604},
    {6, 0, 1},
    {6, 2, 23},
    {6, 4, 300},
    {6, 6, 2876},
    {6, 8, 22426},
    {6, 10, 147431},
    {6, 12, 727606},
    {7, 0, 1},
    {7, 2, 23},
    {7, 4, 300},
    {7, 6, 2876},
    {7, 8, 22449},
    {7, 10, 150283},
    {7, 12, 872162},
    {7, 14, 3834308},
    {8, 0, 1},
    {8, 2, 23},
    {8, 4, 300},
    {8, 6, 2876},
    {8, 8, 22450},
    {8, 10, 150582},
    {8, 12, 894288},
    {8, 14, 4684044},
    {8, 16, 18669447},
    {9, 0, 1},
    {9, 2, 23},
    {9, 4, 300},
    {9, 6, 2876},
    {9, 8, 22450},
    {9, 10, 150605},
    {9, 12, 897141},
    {9, 14, 4831451},
    {9, 16, 23203208},
    {9, 18, 84967890},
};

}  // namespace k3char::derived
