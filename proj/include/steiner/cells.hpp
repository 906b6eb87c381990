#pragma once
/* Cell tables: matched source/target chains in every dimension up to m.
   Conditions: (1) entries nonnegative, (2) d x_k^e = x_{k-1}^+ - x_{k-1}^-,
   (3) both 0-rows augment to 1, (4) the top rows agree. */
#include "steiner/adc.hpp"

namespace steiner {

struct CellTable {
  int m = 0;
  std::vector<std::array<Chain, 2>> rows; /* rows[k] = {x_k^-, x_k^+}, k = 0..m */
};

bool operator==(const CellTable& a, const CellTable& b);

std::optional<std::string> validate_cell(const Adc& a, const CellTable& t);

/* The atom of a basis element: top rows are the element itself, lower rows are the
   signed supports of successive boundaries. */
CellTable atom_table(const Adc& a, int q, int idx);
std::optional<CellTable> atom_cell(const Adc& a, int q, int idx); /* table when it validates */

/* Truncation plumbing (sides of a cell); composition is intentionally not provided. */
CellTable truncate_cell(const CellTable& t, int k, int side); /* side 0 = source, 1 = target */

}
