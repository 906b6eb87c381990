#include "steiner/cells.hpp"

namespace steiner {

bool operator==(const CellTable& a, const CellTable& b) { return a.m == b.m && a.rows == b.rows; }

std::optional<std::string> validate_cell(const Adc& a, const CellTable& t) {
  if (t.m < 0) return "cell table has negative dimension";
  if (static_cast<int>(t.rows.size()) != t.m + 1) return "cell table has wrong row count";
  for (int k = 0; k <= t.m; ++k) {
    for (int side = 0; side < 2; ++side) {
      const Chain& c = t.rows[k][side];
      if (c.degree != k) return "row " + std::to_string(k) + " has wrong degree";
      for (auto& tm : c.terms)
        if (tm.idx < 0 || tm.idx >= a.size(k)) return "row " + std::to_string(k) + " indexes outside the basis";
      if (!nonneg(c)) return "row " + std::to_string(k) + " is not nonnegative";
    }
  }
  for (int k = 1; k <= t.m; ++k) {
    Chain want = sub(t.rows[k - 1][1], t.rows[k - 1][0]);
    for (int side = 0; side < 2; ++side)
      if (a.boundary(t.rows[k][side]) != want)
        return "boundary mismatch at row " + std::to_string(k);
  }
  if (a.augment(t.rows[0][0]) != 1 || a.augment(t.rows[0][1]) != 1) return "0-rows do not augment to 1";
  if (t.rows[t.m][0] != t.rows[t.m][1]) return "top rows differ";
  return std::nullopt;
}

CellTable atom_table(const Adc& a, int q, int idx) {
  if (q < 0 || q > a.top_dim() || idx < 0 || idx >= a.size(q)) throw StructuralError("atom of nonexistent basis element");
  CellTable t;
  t.m = q;
  t.rows.assign(q + 1, {Chain{0, {}}, Chain{0, {}}});
  t.rows[q][0] = t.rows[q][1] = chain_unit(q, idx);
  for (int k = q; k >= 1; --k) {
    t.rows[k - 1][0] = support_split(a.boundary(t.rows[k][0])).first;
    t.rows[k - 1][1] = support_split(a.boundary(t.rows[k][1])).second;
  }
  return t;
}

std::optional<CellTable> atom_cell(const Adc& a, int q, int idx) {
  CellTable t = atom_table(a, q, idx);
  if (validate_cell(a, t).has_value()) return std::nullopt;
  return t;
}

CellTable truncate_cell(const CellTable& t, int k, int side) {
  if (k < 0 || k > t.m) throw StructuralError("truncation dimension out of range");
  if (side != 0 && side != 1) throw StructuralError("truncation side must be 0 or 1");
  CellTable out;
  out.m = k;
  out.rows.assign(t.rows.begin(), t.rows.begin() + k + 1);
  out.rows[k][0] = out.rows[k][1] = t.rows[k][side];
  return out;
}

}
