#include "k3char/published.hpp"

namespace k3char::published {

const std::vector<Cell>& table_cells() {
  static const std::vector<Cell> cells = {
      {5, 4, "", 2},
      {5, 4, "1", 1},
      {5, 4, "2", 1},
      {5, 4, "1,1", 0},
      {5, 4, "3", 0},
      {5, 4, "2,1", 0},
      {5, 4, "1,1,1", 0},
      {5, 4, "4", 0},
      {5, 4, "3,1", 0},
      {5, 4, "2,2", 0},
      {5, 4, "5", 0},
      {5, 4, "4,1", 0},
      {5, 4, "6", 0},
      {5, 6, "", 1},
      {5, 6, "1", 3},
      {5, 6, "2", 1},
      {5, 6, "1,1", 1},
      {5, 6, "3", 1},
      {5, 6, "2,1", 0},
      {5, 6, "1,1,1", 0},
      {5, 6, "4", 0},
      {5, 6, "3,1", 0},
      {5, 6, "2,2", 0},
      {5, 6, "5", 0},
      {5, 6, "4,1", 0},
      {5, 6, "6", 0},
      {5, 8, "", 4},
      {5, 8, "1", 3},
      {5, 8, "2", 3},
      {5, 8, "1,1", 1},
      {5, 8, "3", 1},
      {5, 8, "2,1", 1},
      {5, 8, "1,1,1", 0},
      {5, 8, "4", 1},
      {5, 8, "3,1", 0},
      {5, 8, "2,2", 0},
      {5, 8, "5", 0},
      {5, 8, "4,1", 0},
      {5, 8, "6", 0},
      {5, 10, "", 2},
      {5, 10, "1", 5},
      {5, 10, "2", 2},
      {5, 10, "1,1", 2},
      {5, 10, "3", 2},
      {5, 10, "2,1", 1},
      {5, 10, "1,1,1", 0},
      {5, 10, "4", 0},
      {5, 10, "3,1", 1},
      {5, 10, "2,2", 0},
      {5, 10, "5", 1},
      {5, 10, "4,1", 0},
      {5, 10, "6", 0},
      {6, 6, "", 2},
      {6, 6, "1", 3},
      {6, 6, "2", 1},
      {6, 6, "1,1", 1},
      {6, 6, "3", 1},
      {6, 6, "2,1", 0},
      {6, 6, "1,1,1", 0},
      {6, 6, "4", 0},
      {6, 6, "3,1", 0},
      {6, 6, "2,2", 0},
      {6, 6, "5", 0},
      {6, 6, "4,1", 0},
      {6, 6, "6", 0},
      {6, 8, "", 5},
      {6, 8, "1", 4},
      {6, 8, "2", 4},
      {6, 8, "1,1", 1},
      {6, 8, "3", 1},
      {6, 8, "2,1", 1},
      {6, 8, "1,1,1", 0},
      {6, 8, "4", 1},
      {6, 8, "3,1", 0},
      {6, 8, "2,2", 0},
      {6, 8, "5", 0},
      {6, 8, "4,1", 0},
      {6, 8, "6", 0},
      {6, 10, "", 4},
      {6, 10, "1", 7},
      {6, 10, "2", 4},
      {6, 10, "1,1", 3},
      {6, 10, "3", 3},
      {6, 10, "2,1", 2},
      {6, 10, "1,1,1", 0},
      {6, 10, "4", 1},
      {6, 10, "3,1", 1},
      {6, 10, "2,2", 0},
      {6, 10, "5", 1},
      {6, 10, "6", 0},
      {6, 12, "", 7},
      {6, 12, "1", 7},
      {6, 12, "2", 7},
      {6, 12, "1,1", 2},
      {6, 12, "3", 3},
      {6, 12, "2,1", 2},
      {6, 12, "1,1,1", 1},
      {6, 12, "4", 2},
      {6, 12, "3,1", 1},
      {6, 12, "2,2", 1},
      {6, 12, "5", 0},
      {7, 8, "", 5},
      {7, 8, "1", 5},
      {7, 8, "2", 4},
      {7, 8, "1,1", 1},
      {7, 8, "3", 1},
      {7, 8, "2,1", 1},
      {7, 8, "1,1,1", 0},
      {7, 8, "4", 1},
      {7, 8, "3,1", 0},
      {7, 8, "2,2", 0},
      {7, 8, "2,1,1", 0},
      {7, 8, "5", 0},
      {7, 8, "4,1", 0},
      {7, 8, "3,2", 0},
      {7, 8, "3,1,1", 0},
      {7, 8, "2,2,1", 0},
      {7, 8, "6", 0},
      {7, 8, "5,1", 0},
      {7, 8, "4,2", 0},
      {7, 8, "4,1,1", 0},
      {7, 8, "3,3", 0},
      {7, 8, "7", 0},
      {7, 8, "6,1", 0},
      {7, 8, "5,2", 0},
      {7, 8, "8", 0},
      {7, 8, "7,1", 0},
      {7, 8, "9", 0},
      {7, 10, "", 5},
      {7, 10, "1", 9},
      {7, 10, "2", 5},
      {7, 10, "1,1", 4},
      {7, 10, "3", 4},
      {7, 10, "2,1", 2},
      {7, 10, "1,1,1", 0},
      {7, 10, "4", 1},
      {7, 10, "3,1", 1},
      {7, 10, "2,2", 0},
      {7, 10, "2,1,1", 0},
      {7, 10, "5", 1},
      {7, 10, "4,1", 0},
      {7, 10, "3,2", 0},
      {7, 10, "3,1,1", 0},
      {7, 10, "2,2,1", 0},
      {7, 10, "6", 0},
      {7, 10, "5,1", 0},
      {7, 10, "4,2", 0},
      {7, 10, "4,1,1", 0},
      {7, 10, "3,3", 0},
      {7, 10, "7", 0},
      {7, 10, "6,1", 0},
      {7, 10, "5,2", 0},
      {7, 10, "8", 0},
      {7, 10, "7,1", 0},
      {7, 10, "9", 0},
      {7, 12, "", 10},
      {7, 12, "1", 11},
      {7, 12, "2", 10},
      {7, 12, "1,1", 4},
      {7, 12, "3", 5},
      {7, 12, "2,1", 4},
      {7, 12, "1,1,1", 1},
      {7, 12, "4", 3},
      {7, 12, "3,1", 2},
      {7, 12, "2,2", 1},
      {7, 12, "2,1,1", 0},
      {7, 12, "5", 1},
      {7, 12, "4,1", 1},
      {7, 12, "3,2", 0},
      {7, 12, "3,1,1", 0},
      {7, 12, "2,2,1", 0},
      {7, 12, "6", 1},
      {7, 12, "5,1", 0},
      {7, 12, "4,2", 0},
      {7, 12, "4,1,1", 0},
      {7, 12, "3,3", 0},
      {7, 12, "7", 0},
      {7, 12, "6,1", 0},
      {7, 12, "5,2", 0},
      {7, 12, "8", 0},
      {7, 12, "7,1", 0},
      {7, 12, "9", 0},
      {7, 14, "", 7},
      {7, 14, "1", 14},
      {7, 14, "2", 9},
      {7, 14, "1,1", 7},
      {7, 14, "3", 7},
      {7, 14, "2,1", 5},
      {7, 14, "1,1,1", 0},
      {7, 14, "4", 3},
      {7, 14, "3,1", 3},
      {7, 14, "2,2", 0},
      {7, 14, "2,1,1", 1},
      {7, 14, "5", 2},
      {7, 14, "4,1", 1},
      {7, 14, "3,2", 1},
      {7, 14, "3,1,1", 0},
      {7, 14, "2,2,1", 0},
      {7, 14, "6", 0},
      {7, 14, "5,1", 1},
      {7, 14, "4,2", 0},
      {7, 14, "4,1,1", 0},
      {7, 14, "3,3", 0},
      {7, 14, "7", 1},
      {7, 14, "6,1", 0},
      {7, 14, "5,2", 0},
      {7, 14, "8", 0},
      {7, 14, "7,1", 0},
      {7, 14, "9", 0},
      {8, 8, "", 6},
      {8, 8, "1", 5},
      {8, 8, "2", 4},
      {8, 8, "1,1", 1},
      {8, 8, "3", 1},
      {8, 8, "2,1", 1},
      {8, 8, "1,1,1", 0},
      {8, 8, "4", 1},
      {8, 8, "3,1", 0},
      {8, 8, "2,2", 0},
      {8, 8, "2,1,1", 0},
      {8, 8, "5", 0},
      {8, 8, "4,1", 0},
      {8, 8, "3,2", 0},
      {8, 8, "3,1,1", 0},
      {8, 8, "2,2,1", 0},
      {8, 8, "6", 0},
      {8, 8, "5,1", 0},
      {8, 8, "4,2", 0},
      {8, 8, "4,1,1", 0},
      {8, 8, "3,3", 0},
      {8, 8, "7", 0},
      {8, 8, "6,1", 0},
      {8, 8, "5,2", 0},
      {8, 8, "8", 0},
      {8, 8, "7,1", 0},
      {8, 8, "9", 0},
      {8, 10, "", 6},
      {8, 10, "1", 10},
      {8, 10, "2", 6},
      {8, 10, "1,1", 4},
      {8, 10, "3", 4},
      {8, 10, "2,1", 2},
      {8, 10, "1,1,1", 0},
      {8, 10, "4", 1},
      {8, 10, "3,1", 1},
      {8, 10, "2,2", 0},
      {8, 10, "2,1,1", 0},
      {8, 10, "5", 1},
      {8, 10, "4,1", 0},
      {8, 10, "3,2", 0},
      {8, 10, "3,1,1", 0},
      {8, 10, "2,2,1", 0},
      {8, 10, "6", 0},
      {8, 10, "5,1", 0},
      {8, 10, "4,2", 0},
      {8, 10, "4,1,1", 0},
      {8, 10, "3,3", 0},
      {8, 10, "7", 0},
      {8, 10, "6,1", 0},
      {8, 10, "5,2", 0},
      {8, 10, "8", 0},
      {8, 10, "7,1", 0},
      {8, 10, "9", 0},
      {8, 12, "", 13},
      {8, 12, "1", 14},
      {8, 12, "2", 13},
      {8, 12, "1,1", 5},
      {8, 12, "3", 6},
      {8, 12, "2,1", 5},
      {8, 12, "1,1,1", 1},
      {8, 12, "4", 4},
      {8, 12, "3,1", 2},
      {8, 12, "2,2", 1},
      {8, 12, "2,1,1", 0},
      {8, 12, "5", 1},
      {8, 12, "4,1", 1},
      {8, 12, "3,2", 0},
      {8, 12, "3,1,1", 0},
      {8, 12, "2,2,1", 0},
      {8, 12, "6", 1},
      {8, 12, "5,1", 0},
      {8, 12, "4,2", 0},
      {8, 12, "4,1,1", 0},
      {8, 12, "3,3", 0},
      {8, 12, "7", 0},
      {8, 12, "6,1", 0},
      {8, 12, "5,2", 0},
      {8, 12, "8", 0},
      {8, 12, "7,1", 0},
      {8, 12, "9", 0},
      {8, 14, "", 12},
      {8, 14, "1", 21},
      {8, 14, "2", 15},
      {8, 14, "1,1", 10},
      {8, 14, "3", 11},
      {8, 14, "2,1", 8},
      {8, 14, "1,1,1", 1},
      {8, 14, "4", 5},
      {8, 14, "3,1", 5},
      {8, 14, "2,2", 1},
      {8, 14, "2,1,1", 1},
      {8, 14, "5", 3},
      {8, 14, "4,1", 2},
      {8, 14, "3,2", 1},
      {8, 14, "3,1,1", 0},
      {8, 14, "2,2,1", 0},
      {8, 14, "6", 1},
      {8, 14, "5,1", 1},
      {8, 14, "4,2", 0},
      {8, 14, "4,1,1", 0},
      {8, 14, "3,3", 0},
      {8, 14, "7", 1},
      {8, 14, "6,1", 0},
      {8, 14, "5,2", 0},
      {8, 14, "8", 0},
      {8, 14, "7,1", 0},
      {8, 14, "9", 0},
      {8, 16, "", 18},
      {8, 16, "1", 21},
      {8, 16, "2", 21},
      {8, 16, "1,1", 9},
      {8, 16, "3", 11},
      {8, 16, "2,1", 10},
      {8, 16, "1,1,1", 2},
      {8, 16, "4", 8},
      {8, 16, "3,1", 5},
      {8, 16, "2,2", 3},
      {8, 16, "2,1,1", 1},
      {8, 16, "5", 3},
      {8, 16, "4,1", 3},
      {8, 16, "3,2", 1},
      {8, 16, "3,1,1", 1},
      {8, 16, "2,2,1", 0},
      {8, 16, "6", 2},
      {8, 16, "5,1", 1},
      {8, 16, "4,2", 1},
      {8, 16, "4,1,1", 0},
      {8, 16, "3,3", 0},
      {8, 16, "7", 0},
      {8, 16, "6,1", 1},
      {8, 16, "5,2", 0},
      {8, 16, "8", 1},
      {8, 16, "7,1", 0},
      {8, 16, "9", 0},
      {9, 10, "", 6},
      {9, 10, "1", 11},
      {9, 10, "2", 6},
      {9, 10, "1,1", 4},
      {9, 10, "3", 4},
      {9, 10, "2,1", 2},
      {9, 10, "1,1,1", 0},
      {9, 10, "4", 1},
      {9, 10, "3,1", 1},
      {9, 10, "2,2", 0},
      {9, 10, "2,1,1", 0},
      {9, 10, "5", 1},
      {9, 10, "4,1", 0},
      {9, 10, "3,2", 0},
      {9, 10, "3,1,1", 0},
      {9, 10, "2,2,1", 0},
      {9, 10, "6", 0},
      {9, 10, "5,1", 0},
      {9, 10, "4,2", 0},
      {9, 10, "4,1,1", 0},
      {9, 10, "3,3", 0},
      {9, 10, "7", 0},
      {9, 10, "6,1", 0},
      {9, 10, "5,2", 0},
      {9, 10, "8", 0},
      {9, 10, "7,1", 0},
      {9, 10, "9", 0},
      {9, 12, "", 15},
      {9, 12, "1", 16},
      {9, 12, "2", 14},
      {9, 12, "1,1", 6},
      {9, 12, "3", 7},
      {9, 12, "2,1", 5},
      {9, 12, "1,1,1", 1},
      {9, 12, "4", 4},
      {9, 12, "3,1", 2},
      {9, 12, "2,2", 1},
      {9, 12, "2,1,1", 0},
      {9, 12, "5", 1},
      {9, 12, "4,1", 1},
      {9, 12, "3,2", 0},
      {9, 12, "3,1,1", 0},
      {9, 12, "2,2,1", 0},
      {9, 12, "6", 1},
      {9, 12, "5,1", 0},
      {9, 12, "4,2", 0},
      {9, 12, "4,1,1", 0},
      {9, 12, "3,3", 0},
      {9, 12, "7", 0},
      {9, 12, "6,1", 0},
      {9, 12, "5,2", 0},
      {9, 12, "8", 0},
      {9, 12, "7,1", 0},
      {9, 12, "9", 0},
      {9, 14, "", 15},
      {9, 14, "1", 27},
      {9, 14, "2", 19},
      {9, 14, "1,1", 13},
      {9, 14, "3", 14},
      {9, 14, "2,1", 10},
      {9, 14, "1,1,1", 1},
      {9, 14, "4", 6},
      {9, 14, "3,1", 6},
      {9, 14, "2,2", 1},
      {9, 14, "2,1,1", 1},
      {9, 14, "5", 4},
      {9, 14, "4,1", 2},
      {9, 14, "3,2", 1},
      {9, 14, "3,1,1", 0},
      {9, 14, "2,2,1", 0},
      {9, 14, "6", 1},
      {9, 14, "5,1", 1},
      {9, 14, "4,2", 0},
      {9, 14, "4,1,1", 0},
      {9, 14, "3,3", 0},
      {9, 14, "7", 1},
      {9, 14, "6,1", 0},
      {9, 14, "5,2", 0},
      {9, 14, "8", 0},
      {9, 14, "7,1", 0},
      {9, 14, "9", 0},
      {9, 16, "", 25},
      {9, 16, "1", 33},
      {9, 16, "2", 31},
      {9, 16, "1,1", 15},
      {9, 16, "3", 18},
      {9, 16, "2,1", 16},
      {9, 16, "1,1,1", 3},
      {9, 16, "4", 12},
      {9, 16, "3,1", 9},
      {9, 16, "2,2", 4},
      {9, 16, "2,1,1", 2},
      {9, 16, "5", 5},
      {9, 16, "4,1", 5},
      {9, 16, "3,2", 2},
      {9, 16, "3,1,1", 1},
      {9, 16, "2,2,1", 0},
      {9, 16, "6", 3},
      {9, 16, "5,1", 2},
      {9, 16, "4,2", 1},
      {9, 16, "4,1,1", 0},
      {9, 16, "3,3", 0},
      {9, 16, "7", 1},
      {9, 16, "6,1", 1},
      {9, 16, "5,2", 0},
      {9, 16, "8", 1},
      {9, 16, "7,1", 0},
      {9, 16, "9", 0},
      {9, 18, "", 21},
      {9, 18, "1", 39},
      {9, 18, "2", 30},
      {9, 18, "1,1", 21},
      {9, 18, "3", 24},
      {9, 18, "2,1", 18},
      {9, 18, "1,1,1", 3},
      {9, 18, "4", 11},
      {9, 18, "3,1", 13},
      {9, 18, "2,2", 3},
      {9, 18, "2,1,1", 3},
      {9, 18, "5", 8},
      {9, 18, "4,1", 6},
      {9, 18, "3,2", 3},
      {9, 18, "3,1,1", 1},
      {9, 18, "2,2,1", 1},
      {9, 18, "6", 3},
      {9, 18, "5,1", 3},
      {9, 18, "4,2", 1},
      {9, 18, "4,1,1", 1},
      {9, 18, "3,3", 1},
      {9, 18, "7", 2},
      {9, 18, "6,1", 1},
      {9, 18, "5,2", 1},
      {9, 18, "8", 0},
      {9, 18, "7,1", 1},
      {9, 18, "9", 1},
  };
  return cells;
}

const std::vector<DimEntry>& dim_column() {
  static const std::vector<DimEntry> dims = {
      {"1", 23},
      {"2", 275},
      {"1,1", 253},
      {"3", 2277},
      {"2,1", 4025},
      {"1,1,1", 1771},
      {"4", 14674},
      {"3,1", 256795},
      {"2,2", 2193763},
      {"5", 7804350225},
      {"", 1},
  };
  return dims;
}

}  // namespace k3char::published
