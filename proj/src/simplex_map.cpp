#include "steiner/simplex_map.hpp"
#include <algorithm>
#include <map>
#include <mutex>

namespace steiner {

namespace {
std::mutex table_mutex;
std::map<int, std::unique_ptr<TupleTable>> tables;
}

const TupleTable& tuple_table(int m) {
  if (m < 0) throw StructuralError("tuple table needs m >= 0");
  std::lock_guard<std::mutex> lk(table_mutex);
  auto it = tables.find(m);
  if (it != tables.end()) return *it->second;
  auto t = std::make_unique<TupleTable>();
  t->m = m;
  int n = 1 << (m + 1);
  t->tuples.resize(n);
  t->names.resize(n);
  t->bnd.resize(n);
  t->rank_in_order.assign(n, -1);
  for (int mask = 1; mask < n; ++mask) {
    for (int v = 0; v <= m; ++v)
      if (mask & (1 << v)) t->tuples[mask].push_back(v);
    t->names[mask] = tuple_name(t->tuples[mask]);
    const auto& tp = t->tuples[mask];
    for (size_t i = 0; i < tp.size(); ++i)
      t->bnd[mask].emplace_back(mask & ~(1 << tp[i]), (i % 2 == 0) ? 1 : -1);
    t->order.push_back(mask);
  }
  std::sort(t->order.begin(), t->order.end(), [&](int a, int b) {
    if (t->tuples[a].size() != t->tuples[b].size()) return t->tuples[a].size() < t->tuples[b].size();
    return t->tuples[a] < t->tuples[b];
  });
  for (size_t i = 0; i < t->order.size(); ++i) t->rank_in_order[t->order[i]] = static_cast<int>(i);
  auto& ref = *t;
  tables[m] = std::move(t);
  return ref;
}

int mask_of_tuple(const std::vector<int>& t) {
  int mask = 0;
  for (int v : t) {
    if (v < 0 || v > 30) throw StructuralError("tuple entry out of range");
    mask |= 1 << v;
  }
  return mask;
}

SimplexMap make_simplex(std::shared_ptr<const Adc> target, int m) {
  if (m < 0) throw StructuralError("simplex dimension must be >= 0");
  SimplexMap x;
  x.m = m;
  x.target = std::move(target);
  x.img.resize(1 << (m + 1));
  const TupleTable& tt = tuple_table(m);
  for (int mask = 1; mask < (1 << (m + 1)); ++mask)
    x.img[mask].degree = static_cast<int>(tt.tuples[mask].size()) - 1;
  return x;
}

namespace {
std::optional<std::string> chain_law(const SimplexMap& x) {
  const TupleTable& tt = tuple_table(x.m);
  for (int mask = 1; mask < (1 << (x.m + 1)); ++mask) {
    int q = static_cast<int>(tt.tuples[mask].size()) - 1;
    if (x.img[mask].degree != q) return "image of " + tt.names[mask] + " has wrong degree";
    for (auto& t : x.img[mask].terms)
      if (t.idx < 0 || t.idx >= x.target->size(q)) return "image of " + tt.names[mask] + " indexes outside the basis";
    if (q == 0) continue;
    Chain rhs{q - 1, {}};
    for (auto& [fm, sg] : tt.bnd[mask]) rhs = add(rhs, scale(Int(sg), x.img[fm]));
    if (x.target->boundary(x.img[mask]) != rhs) return "chain law fails on " + tt.names[mask];
  }
  return std::nullopt;
}
}

std::optional<std::string> validate_directed(const SimplexMap& x) {
  if (auto bad = chain_law(x)) return bad;
  const TupleTable& tt = tuple_table(x.m);
  for (int mask = 1; mask < (1 << (x.m + 1)); ++mask)
    if (!nonneg(x.img[mask])) return "image of " + tt.names[mask] + " is not nonnegative";
  for (int j = 0; j <= x.m; ++j)
    if (x.target->augment(x.img[1 << j]) != 1) return "vertex " + std::to_string(j) + " does not augment to 1";
  return std::nullopt;
}

std::optional<std::string> validate_formal(const SimplexMap& x) {
  if (auto bad = chain_law(x)) return bad;
  Int w = x.target->augment(x.img[1]);
  for (int j = 1; j <= x.m; ++j)
    if (x.target->augment(x.img[1 << j]) != w) return "vertex weights differ";
  return std::nullopt;
}

bool operator==(const SimplexMap& a, const SimplexMap& b) {
  return a.m == b.m && a.target->name == b.target->name && a.img == b.img;
}

std::string canonical_string(const SimplexMap& x) {
  const TupleTable& tt = tuple_table(x.m);
  std::string s = "m=" + std::to_string(x.m) + ";t=" + x.target->name + ";";
  for (int mask : tt.order) {
    s += tt.names[mask];
    s += "=";
    const Chain& c = x.img[mask];
    if (c.is_zero()) {
      s += "0";
    } else {
      int q = c.degree;
      for (size_t i = 0; i < c.terms.size(); ++i) {
        if (i) s += "+";
        s += c.terms[i].coef.str();
        s += "*";
        s += x.target->basis[q][c.terms[i].idx];
      }
    }
    s += ";";
  }
  return s;
}

SimplexMap add(const SimplexMap& a, const SimplexMap& b) {
  if (a.m != b.m || a.target->name != b.target->name) throw StructuralError("simplex shape mismatch in add");
  SimplexMap out = a;
  for (int mask = 1; mask < (1 << (a.m + 1)); ++mask) out.img[mask] = add(a.img[mask], b.img[mask]);
  return out;
}

SimplexMap sub(const SimplexMap& a, const SimplexMap& b) {
  if (a.m != b.m || a.target->name != b.target->name) throw StructuralError("simplex shape mismatch in sub");
  SimplexMap out = a;
  for (int mask = 1; mask < (1 << (a.m + 1)); ++mask) out.img[mask] = sub(a.img[mask], b.img[mask]);
  return out;
}

SimplexMap face(const SimplexMap& x, int i) {
  if (x.m < 1 || i < 0 || i > x.m) throw StructuralError("face index out of range");
  SimplexMap out = make_simplex(x.target, x.m - 1);
  const TupleTable& tt = tuple_table(x.m - 1);
  for (int mask = 1; mask < (1 << x.m); ++mask) {
    int lifted = 0;
    for (int v : tt.tuples[mask]) lifted |= 1 << (v < i ? v : v + 1);
    out.img[mask] = x.img[lifted];
  }
  return out;
}

SimplexMap degeneracy(const SimplexMap& x, int i) {
  if (i < 0 || i > x.m) throw StructuralError("degeneracy index out of range");
  SimplexMap out = make_simplex(x.target, x.m + 1);
  const TupleTable& tt = tuple_table(x.m + 1);
  for (int mask = 1; mask < (1 << (x.m + 2)); ++mask) {
    if ((mask & (1 << i)) && (mask & (1 << (i + 1)))) continue; /* collapses: zero image */
    int dropped = 0;
    for (int v : tt.tuples[mask]) dropped |= 1 << (v <= i ? v : v - 1);
    out.img[mask] = x.img[dropped];
  }
  return out;
}

SimplexMap face_pow(const SimplexMap& x, int j, int l) {
  if (l < 0) throw StructuralError("negative face power");
  SimplexMap out = x;
  for (int i = j + l - 1; i >= j; --i) out = face(out, i);
  return out;
}

SimplexMap degeneracy_pow(const SimplexMap& x, int j, int l) {
  if (l < 0) throw StructuralError("negative degeneracy power");
  SimplexMap out = x;
  for (int i = j; i <= j + l - 1; ++i) out = degeneracy(out, i);
  return out;
}

SimplexMap precompose(const SimplexMap& x, const AdcMap& op) {
  int mp = op.src->top_dim();
  if (op.dst->top_dim() != x.m || op.dst->name != "delta" + std::to_string(x.m))
    throw StructuralError("operator target is not the simplex complex of the map");
  SimplexMap out = make_simplex(x.target, mp);
  for (int q = 0; q <= mp; ++q) {
    for (int i = 0; i < op.src->size(q); ++i) {
      int mask = mask_of_tuple(parse_tuple(op.src->basis[q][i]));
      Chain acc{q, {}};
      for (auto& t : op.img[q][i].terms) {
        int dmask = mask_of_tuple(parse_tuple(op.dst->basis[q][t.idx]));
        acc = add(acc, scale(t.coef, x.img[dmask]));
      }
      out.img[mask] = std::move(acc);
    }
  }
  return out;
}

bool degenerate_at(const SimplexMap& x, int j) {
  if (x.m < 1 || j < 0 || j > x.m - 1) throw StructuralError("degeneracy test index out of range");
  return x == degeneracy(face(x, j), j);
}

bool nondegenerate(const SimplexMap& x) {
  for (int j = 0; j + 1 <= x.m; ++j)
    if (degenerate_at(x, j)) return false;
  return true;
}

std::pair<SimplexMap, std::vector<int>> normalize(const SimplexMap& x) {
  SimplexMap cur = x;
  std::vector<int> surj = identity_values(x.m);
  for (;;) {
    int found = -1;
    for (int j = 0; j + 1 <= cur.m; ++j)
      if (degenerate_at(cur, j)) {
        found = j;
        break;
      }
    if (found < 0) break;
    surj = compose_values(codegeneracy_values(found, cur.m - 1), surj);
    cur = face(cur, found);
  }
  return {std::move(cur), std::move(surj)};
}

}
