#include "steiner/marked_sset.hpp"
#include "steiner/simplex_map.hpp"
#include <algorithm>

namespace steiner {

bool operator==(const Gen& a, const Gen& b) { return a.dim == b.dim && a.cell == b.cell && a.surj == b.surj; }

Gen nondeg_gen(int q, int i) { return Gen{q, i, identity_values(q)}; }

bool gen_degenerate(const Gen& g) { return static_cast<int>(g.surj.size()) - 1 != g.dim; }

Gen face_of_gen(const MSSet& s, const Gen& g, int i) {
  int q = static_cast<int>(g.surj.size()) - 1;
  if (q < 1 || i < 0 || i > q) throw StructuralError("face of gen: index out of range");
  std::vector<int> w = g.surj;
  int v = w[i];
  w.erase(w.begin() + i);
  bool still = std::find(w.begin(), w.end(), v) != w.end();
  if (still) return Gen{g.dim, g.cell, std::move(w)};
  /* Exactly the value v dropped out: route through the cell's v-th face. */
  const Gen& h = s.faces.at(g.dim).at(g.cell).at(v);
  std::vector<int> strip(w.size());
  for (size_t t = 0; t < w.size(); ++t) strip[t] = w[t] < v ? w[t] : w[t] - 1;
  return Gen{h.dim, h.cell, compose_values(h.surj, strip)};
}

Gen act(const MSSet& s, const Gen& g, const std::vector<int>& f) {
  int q = static_cast<int>(g.surj.size()) - 1;
  if (f.empty() || !monotone(f, q)) throw StructuralError("act needs a monotone map into the simplex");
  std::vector<int> w = compose_values(g.surj, f);
  std::vector<char> present(g.dim + 1, 0);
  for (int v : w) present[v] = 1;
  Gen cur = nondeg_gen(g.dim, g.cell);
  for (int v = g.dim; v >= 0; --v)
    if (!present[v]) cur = face_of_gen(s, cur, v);
  /* Reindex w onto the surviving values. */
  std::vector<int> pos(g.dim + 1, -1);
  int j = 0;
  for (int v = 0; v <= g.dim; ++v)
    if (present[v]) pos[v] = j++;
  std::vector<int> pi(w.size());
  for (size_t t = 0; t < w.size(); ++t) pi[t] = pos[w[t]];
  return Gen{cur.dim, cur.cell, compose_values(cur.surj, pi)};
}

bool gen_marked(const MSSet& s, const Gen& g) {
  int n = static_cast<int>(g.surj.size()) - 1;
  if (n == 0) return false;
  if (gen_degenerate(g)) return true;
  return s.marked[g.dim][g.cell] != 0;
}

std::optional<std::string> validate_msset(const MSSet& s) {
  int top = s.stored_top();
  if (static_cast<int>(s.faces.size()) < top + 1 || static_cast<int>(s.marked.size()) < top + 1)
    return "table sizes inconsistent";
  for (int q = 1; q <= top; ++q) {
    if (static_cast<int>(s.faces[q].size()) != s.counts[q]) return "face table size mismatch";
    if (static_cast<int>(s.marked[q].size()) != s.counts[q]) return "marked table size mismatch";
    for (int i = 0; i < s.counts[q]; ++i) {
      if (static_cast<int>(s.faces[q][i].size()) != q + 1) return "face list has wrong arity";
      for (int j = 0; j <= q; ++j) {
        const Gen& g = s.faces[q][i][j];
        int n = static_cast<int>(g.surj.size()) - 1;
        if (n != q - 1 || g.dim < 0 || g.dim > top || g.cell < 0 || g.cell >= s.counts[g.dim])
          return "face gen malformed";
        if (!monotone(g.surj, g.dim)) return "face surjection not monotone";
      }
    }
  }
  for (int q = 2; q <= top; ++q)
    for (int i = 0; i < s.counts[q]; ++i)
      for (int a = 0; a < q; ++a)
        for (int b = a + 1; b <= q; ++b) {
          Gen left = face_of_gen(s, s.faces[q][i][b], a);
          Gen right = face_of_gen(s, s.faces[q][i][a], b - 1);
          if (!(left == right))
            return "face identity fails at dim " + std::to_string(q) + " cell " + std::to_string(i);
        }
  return std::nullopt;
}

namespace {
/* Cells of the standard simplex as tuples, with ids in dimension-major tuple-lex order. */
struct TupleCells {
  std::vector<std::vector<int>> masks;      /* per dim */
  std::vector<std::vector<int>> id_of_mask; /* per dim, mask -> id or -1 */
};
TupleCells tuple_cells(int m, const std::vector<char>& keep) {
  const TupleTable& tt = tuple_table(m);
  TupleCells c;
  c.masks.resize(m + 1);
  c.id_of_mask.assign(m + 1, std::vector<int>(1 << (m + 1), -1));
  for (int mask : tt.order) {
    if (!keep[mask]) continue;
    int q = static_cast<int>(tt.tuples[mask].size()) - 1;
    c.id_of_mask[q][mask] = static_cast<int>(c.masks[q].size());
    c.masks[q].push_back(mask);
  }
  return c;
}

MSSet simplex_like(const std::string& name, int m, const std::vector<char>& keep,
                   const std::vector<char>& mark) {
  const TupleTable& tt = tuple_table(m);
  TupleCells c = tuple_cells(m, keep);
  MSSet s;
  s.name = name;
  s.counts.resize(m + 1, 0);
  s.faces.resize(m + 1);
  s.marked.resize(m + 1);
  s.labels.resize(m + 1);
  for (int q = 0; q <= m; ++q) {
    s.counts[q] = static_cast<int>(c.masks[q].size());
    s.faces[q].resize(s.counts[q]);
    s.marked[q].assign(s.counts[q], 0);
    for (int i = 0; i < s.counts[q]; ++i) {
      int mask = c.masks[q][i];
      s.labels[q].push_back(tt.names[mask]);
      s.marked[q][i] = mark[mask];
      if (q >= 1) {
        const auto& tp = tt.tuples[mask];
        for (int j = 0; j <= q; ++j) {
          int fm = mask & ~(1 << tp[j]);
          int fid = c.id_of_mask[q - 1][fm];
          if (fid < 0) throw StructuralError("face outside the kept cells");
          s.faces[q][i].push_back(nondeg_gen(q - 1, fid));
        }
      }
    }
  }
  while (static_cast<int>(s.counts.size()) > 1 && s.counts.back() == 0) {
    s.counts.pop_back();
    s.faces.pop_back();
    s.marked.pop_back();
    s.labels.pop_back();
  }
  return s;
}
}

MSSet standard_marked(int m, int k, int variant) {
  if (m < 0 || k < 0 || k > m || variant < 0 || variant > 2) throw StructuralError("bad standard marked simplex parameters");
  const TupleTable& tt = tuple_table(m);
  int full = full_mask(m);
  std::vector<char> keep(full + 1, 1);
  std::vector<char> mark(full + 1, 0);
  int req = 0;
  for (int v : {k - 1, k, k + 1})
    if (v >= 0 && v <= m) req |= 1 << v;
  for (int mask = 1; mask <= full; ++mask) {
    if (tt.tuples[mask].size() < 2) continue;
    bool mk = (mask & req) == req;
    if (variant >= 1 && k - 1 >= 0 && mask == (full & ~(1 << (k - 1)))) mk = true;
    if (variant >= 1 && k + 1 <= m && mask == (full & ~(1 << (k + 1)))) mk = true;
    if (variant >= 2 && mask == (full & ~(1 << k))) mk = true;
    mark[mask] = mk;
  }
  std::string suffix = variant == 1 ? "'" : (variant == 2 ? "''" : "");
  return simplex_like("delta" + std::to_string(m) + "^" + std::to_string(k) + suffix, m, keep, mark);
}

MSSet horn_marked(int m, int k, int variant) {
  if (m < 1 || k < 0 || k > m || variant < 0 || variant > 1) throw StructuralError("bad horn parameters");
  const TupleTable& tt = tuple_table(m);
  int full = full_mask(m);
  std::vector<char> keep(full + 1, 1);
  keep[full] = 0;
  keep[full & ~(1 << k)] = 0;
  std::vector<char> mark(full + 1, 0);
  int req = 0;
  for (int v : {k - 1, k, k + 1})
    if (v >= 0 && v <= m) req |= 1 << v;
  for (int mask = 1; mask <= full; ++mask) {
    if (!keep[mask] || tt.tuples[mask].size() < 2) continue;
    bool mk = (mask & req) == req;
    if (variant >= 1 && k - 1 >= 0 && mask == (full & ~(1 << (k - 1)))) mk = true;
    if (variant >= 1 && k + 1 <= m && mask == (full & ~(1 << (k + 1)))) mk = true;
    mark[mask] = mk;
  }
  std::string suffix = variant == 1 ? "'" : "";
  return simplex_like("horn" + std::to_string(m) + "^" + std::to_string(k) + suffix, m, keep, mark);
}

namespace {
int count_at(const MSSet& s, int d) { return (d >= 0 && d <= s.stored_top()) ? s.counts[d] : 0; }

std::vector<int> join_surj(const std::vector<int>& sa, int ca, const std::vector<int>& sb) {
  std::vector<int> out = sa;
  for (int v : sb) out.push_back(ca + 1 + v);
  return out;
}
}

JoinCell join_cell_of(const MSSet& a, const MSSet& b, int dim, int idx) {
  int la = count_at(a, dim);
  if (idx < la) return JoinCell{0, dim, idx, -1, -1};
  idx -= la;
  for (int ad = 0; ad <= dim - 1; ++ad) {
    int bd = dim - 1 - ad;
    long long block = static_cast<long long>(count_at(a, ad)) * count_at(b, bd);
    if (idx < block) return JoinCell{1, ad, idx / count_at(b, bd), bd, idx % count_at(b, bd)};
    idx -= static_cast<int>(block);
  }
  if (idx < count_at(b, dim)) return JoinCell{2, -1, -1, dim, idx};
  throw StructuralError("join cell index out of range");
}

int join_cell_index(const MSSet& a, const MSSet& b, const JoinCell& c) {
  if (c.kind == 0) return c.lidx;
  int dim = c.kind == 1 ? c.ldim + c.rdim + 1 : c.rdim;
  int idx = count_at(a, dim);
  for (int ad = 0; ad <= dim - 1; ++ad) {
    int bd = dim - 1 - ad;
    if (c.kind == 1 && ad == c.ldim) return idx + c.lidx * count_at(b, bd) + c.ridx;
    idx += count_at(a, ad) * count_at(b, bd);
  }
  return idx + c.ridx;
}

MSSet join_marked(const MSSet& a, const MSSet& b) {
  int la = a.stored_top(), lb = b.stored_top();
  int top = la + lb + 1;
  std::optional<int> trunc;
  if (a.truncation) trunc = *a.truncation;
  if (b.truncation) trunc = trunc ? std::min(*trunc, *b.truncation) : *b.truncation;
  if (trunc) top = std::min(top, *trunc);
  MSSet s;
  s.name = a.name + "*" + b.name;
  s.truncation = trunc;
  s.counts.resize(top + 1, 0);
  s.faces.resize(top + 1);
  s.marked.resize(top + 1);
  s.labels.resize(top + 1);
  auto left_gen = [&](const Gen& g) { return Gen{g.dim, join_cell_index(a, b, {0, g.dim, g.cell, -1, -1}), g.surj}; };
  auto right_gen = [&](const Gen& g) { return Gen{g.dim, join_cell_index(a, b, {2, -1, -1, g.dim, g.cell}), g.surj}; };
  auto pair_gen = [&](const Gen& gx, const Gen& gy) {
    int dim = gx.dim + gy.dim + 1;
    int cell = join_cell_index(a, b, {1, gx.dim, gx.cell, gy.dim, gy.cell});
    /* Right-hand vertices of the joined cell start after the left cell's top vertex. */
    return Gen{dim, cell, join_surj(gx.surj, gx.dim, gy.surj)};
  };
  for (int d = 0; d <= top; ++d) {
    int n = count_at(a, d);
    for (int ad = 0; ad <= d - 1; ++ad) n += count_at(a, ad) * count_at(b, d - 1 - ad);
    n += count_at(b, d);
    s.counts[d] = n;
    s.faces[d].resize(n);
    s.marked[d].assign(n, 0);
    s.labels[d].resize(n);
    for (int i = 0; i < n; ++i) {
      JoinCell c = join_cell_of(a, b, d, i);
      if (c.kind == 0) {
        s.labels[d][i] = (c.ldim < static_cast<int>(a.labels.size()) && c.lidx < static_cast<int>(a.labels[c.ldim].size()) ? a.labels[c.ldim][c.lidx] : "L#" + std::to_string(c.lidx)) + "⋆∅";
        s.marked[d][i] = d >= 1 ? a.marked[d][c.lidx] : 0;
        if (d >= 1)
          for (int j = 0; j <= d; ++j) s.faces[d][i].push_back(left_gen(a.faces[d][c.lidx][j]));
      } else if (c.kind == 2) {
        s.labels[d][i] = "∅⋆" + (c.rdim < static_cast<int>(b.labels.size()) && c.ridx < static_cast<int>(b.labels[c.rdim].size()) ? b.labels[c.rdim][c.ridx] : "R#" + std::to_string(c.ridx));
        s.marked[d][i] = d >= 1 ? b.marked[d][c.ridx] : 0;
        if (d >= 1)
          for (int j = 0; j <= d; ++j) s.faces[d][i].push_back(right_gen(b.faces[d][c.ridx][j]));
      } else {
        s.labels[d][i] = "pair(" + std::to_string(c.ldim) + "#" + std::to_string(c.lidx) + "," + std::to_string(c.rdim) + "#" + std::to_string(c.ridx) + ")";
        bool mk = (c.ldim >= 1 && a.marked[c.ldim][c.lidx]) || (c.rdim >= 1 && b.marked[c.rdim][c.ridx]);
        s.marked[d][i] = mk;
        for (int j = 0; j <= d; ++j) {
          if (j <= c.ldim) {
            if (c.ldim == 0)
              s.faces[d][i].push_back(right_gen(nondeg_gen(c.rdim, c.ridx)));
            else
              s.faces[d][i].push_back(pair_gen(a.faces[c.ldim][c.lidx][j], nondeg_gen(c.rdim, c.ridx)));
          } else {
            int jp = j - c.ldim - 1;
            if (c.rdim == 0)
              s.faces[d][i].push_back(left_gen(nondeg_gen(c.ldim, c.lidx)));
            else
              s.faces[d][i].push_back(pair_gen(nondeg_gen(c.ldim, c.lidx), b.faces[c.rdim][c.ridx][jp]));
          }
        }
      }
    }
  }
  return s;
}

MSSet op_marked(const MSSet& a) {
  MSSet s = a;
  s.name = "op(" + a.name + ")";
  auto op_gen = [](const Gen& g) {
    int n = static_cast<int>(g.surj.size()) - 1;
    std::vector<int> rev(n + 1);
    for (int t = 0; t <= n; ++t) rev[t] = g.dim - g.surj[n - t];
    return Gen{g.dim, g.cell, std::move(rev)};
  };
  for (int q = 1; q <= s.stored_top(); ++q)
    for (int i = 0; i < s.counts[q]; ++i)
      for (int j = 0; j <= q; ++j) s.faces[q][i][j] = op_gen(a.faces[q][i][q - j]);
  return s;
}

std::vector<std::string> validate_msset_map(const MSSetMap& f) {
  std::vector<std::string> bad;
  if (!f.src || !f.dst) return {"missing endpoint"};
  int top = std::min(f.src->stored_top(), f.dst->stored_top());
  if (static_cast<int>(f.image.size()) < top + 1) return {"image table too short"};
  for (int q = 0; q <= top; ++q) {
    if (static_cast<int>(f.image[q].size()) != f.src->counts[q]) {
      bad.push_back("image table size mismatch in dimension " + std::to_string(q));
      continue;
    }
    for (int i = 0; i < f.src->counts[q]; ++i) {
      const Gen& g = f.image[q][i];
      if (static_cast<int>(g.surj.size()) - 1 != q) {
        bad.push_back("image gen has wrong simplex dimension");
        continue;
      }
      if (q >= 1) {
        for (int j = 0; j <= q; ++j) {
          const Gen& h = f.src->faces[q][i][j];
          Gen expect = act(*f.dst, f.image[h.dim][h.cell], h.surj);
          if (!(face_of_gen(*f.dst, g, j) == expect)) {
            bad.push_back("map does not commute with face " + std::to_string(j) + " at dim " +
                          std::to_string(q) + " cell " + std::to_string(i));
          }
        }
        if (f.src->marked[q][i] && !gen_marked(*f.dst, g))
          bad.push_back("marking not preserved at dim " + std::to_string(q) + " cell " + std::to_string(i));
      }
    }
  }
  return bad;
}

ComplementReport regular_complement(const MSSetMap& f, int dmax) {
  ComplementReport r;
  r.problems = validate_msset_map(f);
  int top = std::min({dmax, f.src->stored_top(), f.dst->stored_top()});
  r.injective = true;
  r.regular = true;
  std::vector<std::vector<char>> hit(f.dst->stored_top() + 1);
  for (int q = 0; q <= f.dst->stored_top(); ++q) hit[q].assign(f.dst->counts[q], 0);
  for (int q = 0; q <= top; ++q)
    for (int i = 0; i < f.src->counts[q]; ++i) {
      const Gen& g = f.image[q][i];
      if (gen_degenerate(g)) {
        r.injective = false;
        r.problems.push_back("image cell is degenerate at dim " + std::to_string(q) + " cell " + std::to_string(i));
        continue;
      }
      if (hit[g.dim][g.cell]) {
        r.injective = false;
        r.problems.push_back("image cell hit twice at dim " + std::to_string(g.dim) + " cell " + std::to_string(g.cell));
      }
      hit[g.dim][g.cell] = 1;
      if (q >= 1 && f.src->marked[q][i] != f.dst->marked[g.dim][g.cell]) {
        r.regular = false;
        r.problems.push_back("marking not reflected at dim " + std::to_string(q) + " cell " + std::to_string(i));
      }
    }
  int dtop = std::min(dmax, f.dst->stored_top());
  for (int q = 0; q <= dtop; ++q)
    for (int i = 0; i < f.dst->counts[q]; ++i)
      if (!hit[q][i]) r.complement.emplace_back(q, i);
  if (!r.injective) r.regular = false;
  return r;
}

}
