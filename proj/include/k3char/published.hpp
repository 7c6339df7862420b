#pragma once

#include <vector>

namespace k3char::published {

// Multiplicity cells exactly as printed in the published reference tables
// (n = 5..9). Blank cells are zeros; elided cells are simply absent.
struct Cell {
  int n;
  int degree;
  const char* weight;  // comma-separated partition, empty for the trivial weight
  long long mult;
};

// Printed dimension column of the reference table (family B, rank 11).
struct DimEntry {
  const char* weight;
  long long dim;
};

const std::vector<Cell>& table_cells();
const std::vector<DimEntry>& dim_column();

}  // namespace k3char::published
