#include "steiner/adc.hpp"
#include "steiner/cells.hpp"
#include <algorithm>
#include <set>

namespace steiner {

int Adc::idx_of(int q, const std::string& nm) const {
  if (q < 0 || q > top_dim()) throw StructuralError("no basis element '" + nm + "' in dimension " + std::to_string(q));
  auto it = index[q].find(nm);
  if (it == index[q].end()) throw StructuralError("no basis element '" + nm + "' in dimension " + std::to_string(q));
  return it->second;
}

Chain Adc::boundary(int q, int i) const {
  if (q < 1 || q > top_dim()) throw StructuralError("boundary needs degree >= 1");
  return diff[q][i];
}

Chain Adc::boundary(const Chain& c) const {
  if (c.degree < 1) throw StructuralError("boundary needs degree >= 1");
  Chain out{c.degree - 1, {}};
  for (auto& t : c.terms) out = add(out, scale(t.coef, diff[c.degree][t.idx]));
  return out;
}

Int Adc::augment(const Chain& c) const {
  if (c.degree != 0) throw StructuralError("augmentation needs degree 0");
  Int s = 0;
  for (auto& t : c.terms) s += t.coef * aug[t.idx];
  return s;
}

Adc AdcBuilder::build() const {
  Adc a;
  a.name = name;
  a.basis = basis;
  while (!a.basis.empty() && a.basis.back().empty()) a.basis.pop_back();
  for (auto& dimnames : a.basis) std::sort(dimnames.begin(), dimnames.end());
  a.index.resize(a.basis.size());
  for (int q = 0; q <= a.top_dim(); ++q) {
    for (int i = 0; i < a.size(q); ++i) {
      if (!a.index[q].emplace(a.basis[q][i], i).second)
        throw StructuralError("duplicate basis name '" + a.basis[q][i] + "' in dimension " + std::to_string(q));
    }
  }
  a.diff.resize(a.basis.size());
  for (int q = 1; q <= a.top_dim(); ++q)
    a.diff[q].assign(a.size(q), Chain{q - 1, {}});
  for (auto& [key, terms] : d) {
    auto [q, nm] = key;
    if (q < 1 || q > a.top_dim()) throw StructuralError("differential keyed at invalid dimension " + std::to_string(q));
    int i = a.idx_of(q, nm);
    std::vector<Term> ts;
    ts.reserve(terms.size());
    for (auto& [tn, c] : terms) ts.push_back(Term{a.idx_of(q - 1, tn), c});
    a.diff[q][i] = make_chain(q - 1, std::move(ts));
  }
  a.aug.assign(a.size(0), Int(0));
  for (auto& [nm, v] : aug) a.aug[a.idx_of(0, nm)] = v;
  return a;
}

bool operator==(const Adc& a, const Adc& b) {
  return a.name == b.name && a.basis == b.basis && a.diff == b.diff && a.aug == b.aug;
}

std::vector<std::string> validate_complex(const Adc& a) {
  std::vector<std::string> bad;
  for (int q = 1; q <= a.top_dim(); ++q) {
    if (static_cast<int>(a.diff[q].size()) != a.size(q)) {
      bad.push_back("differential table size mismatch in dimension " + std::to_string(q));
      continue;
    }
    for (int i = 0; i < a.size(q); ++i) {
      if (a.diff[q][i].degree != q - 1)
        bad.push_back("differential of '" + a.basis[q][i] + "' has wrong degree");
      if (q >= 2) {
        if (!a.boundary(a.diff[q][i]).is_zero())
          bad.push_back("dd != 0 on '" + a.basis[q][i] + "'");
      } else {
        if (a.augment(a.diff[1][i]) != 0)
          bad.push_back("eps d != 0 on '" + a.basis[1][i] + "'");
      }
    }
  }
  if (static_cast<int>(a.aug.size()) != a.size(0))
    bad.push_back("augmentation table size mismatch");
  return bad;
}

namespace {

/* Nodes are (dim, idx) flattened; edges follow the natural preorder:
   u -> v when u is in the negative support of dv, or v in the positive support of du. */
struct PreorderGraph {
  std::vector<std::pair<int, int>> nodes;
  std::vector<std::vector<int>> out, in;
  std::vector<int> node_id; /* offset per dim */
  int id(int q, int i) const { return node_id[q] + i; }
};

PreorderGraph preorder_graph(const Adc& a) {
  PreorderGraph g;
  g.node_id.resize(a.top_dim() + 1, 0);
  int n = 0;
  for (int q = 0; q <= a.top_dim(); ++q) {
    g.node_id[q] = n;
    n += a.size(q);
    for (int i = 0; i < a.size(q); ++i) g.nodes.emplace_back(q, i);
  }
  g.out.resize(n);
  g.in.resize(n);
  auto edge = [&](int u, int v) {
    g.out[u].push_back(v);
    g.in[v].push_back(u);
  };
  for (int q = 1; q <= a.top_dim(); ++q) {
    for (int i = 0; i < a.size(q); ++i) {
      auto [neg, pos] = support_split(a.diff[q][i]);
      int u = g.id(q, i);
      for (auto& t : neg.terms) edge(g.id(q - 1, t.idx), u);
      for (auto& t : pos.terms) edge(u, g.id(q - 1, t.idx));
    }
  }
  return g;
}

}

/* Defined here, realized with the cell machinery: atoms must form valid cells. */
BasisAnalysis analyze_basis(const Adc& a) {
  BasisAnalysis r;
  r.unital = true;
  r.atomic = true;
  for (int q = 0; q <= a.top_dim(); ++q) {
    for (int i = 0; i < a.size(q); ++i) {
      CellTable t = atom_table(a, q, i);
      if (a.augment(t.rows[0][0]) != 1 || a.augment(t.rows[0][1]) != 1) r.unital = false;
      /* Atomic: below the top, the two supports of the atom never meet. */
      for (int k = 0; k < q; ++k) {
        const Chain& lo = t.rows[k][0];
        const Chain& hi = t.rows[k][1];
        for (const Term& s : lo.terms)
          if (coef_of(hi, s.idx) != 0) r.atomic = false;
      }
    }
  }
  PreorderGraph g = preorder_graph(a);
  int n = static_cast<int>(g.nodes.size());
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.in[v]) {
      (void)u;
      ++indeg[v];
    }
  std::set<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<int> order;
  std::vector<char> done(n, 0);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    done[v] = 1;
    order.push_back(v);
    for (int w : g.out[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  auto label = [&](int v) {
    auto [q, i] = g.nodes[v];
    return std::to_string(q) + ":" + a.basis[q][i];
  };
  if (static_cast<int>(order.size()) == n) {
    r.strongly_loop_free = true;
    for (int v : order) r.order_witness.push_back(label(v));
  } else {
    r.strongly_loop_free = false;
    /* Walk predecessors among unfinished nodes until one repeats; that loop is a cycle. */
    int start = 0;
    while (done[start]) ++start;
    std::vector<int> path;
    std::vector<int> seen(n, -1);
    int cur = start;
    while (seen[cur] < 0) {
      seen[cur] = static_cast<int>(path.size());
      path.push_back(cur);
      int prev = -1;
      for (int u : g.in[cur])
        if (!done[u]) {
          prev = u;
          break;
        }
      cur = prev;
    }
    std::vector<int> cyc(path.begin() + seen[cur], path.end());
    std::reverse(cyc.begin(), cyc.end()); /* forward edge order */
    for (int v : cyc) r.order_witness.push_back(label(v));
  }
  return r;
}

Adc alternating_dual(const Adc& a) {
  Adc b = a;
  bool wrapped = a.name.size() >= 4 && a.name.rfind("op(", 0) == 0 && a.name.back() == ')';
  b.name = wrapped ? a.name.substr(3, a.name.size() - 4) : "op(" + a.name + ")";
  b.join.reset();
  for (int q = 1; q <= b.top_dim(); ++q)
    if (q % 2 == 1)
      for (auto& c : b.diff[q]) c = negate(c);
  return b;
}

Adc join_complexes(const Adc& left, const Adc& right) {
  struct Rec {
    JoinInfo::Prov prov;
  };
  AdcBuilder bld;
  bld.name = left.name + "*" + right.name;
  int L = left.top_dim(), R = right.top_dim();
  int top = std::max({L, R, L + R + 1});
  if (top < 0) top = -1;
  bld.basis.resize(top + 1);
  std::map<std::pair<int, std::string>, JoinInfo::Prov> prov;
  auto lname = [&](int q, int i) { return left.basis[q][i] + "⋆∅"; };
  auto rname = [&](int q, int i) { return std::string("∅⋆") + right.basis[q][i]; };
  auto pname = [&](int k, int i, int l, int j) { return left.basis[k][i] + "⋆" + right.basis[l][j]; };
  for (int q = 0; q <= L; ++q)
    for (int i = 0; i < left.size(q); ++i) {
      bld.basis[q].push_back(lname(q, i));
      prov[{q, lname(q, i)}] = {JoinInfo::Family::LeftEmpty, q, i, -1, -1};
    }
  for (int q = 0; q <= R; ++q)
    for (int i = 0; i < right.size(q); ++i) {
      bld.basis[q].push_back(rname(q, i));
      prov[{q, rname(q, i)}] = {JoinInfo::Family::EmptyRight, -1, -1, q, i};
    }
  for (int k = 0; k <= L; ++k)
    for (int l = 0; l <= R; ++l)
      for (int i = 0; i < left.size(k); ++i)
        for (int j = 0; j < right.size(l); ++j) {
          bld.basis[k + l + 1].push_back(pname(k, i, l, j));
          prov[{k + l + 1, pname(k, i, l, j)}] = {JoinInfo::Family::Pair, k, i, l, j};
        }
  /* Differentials and augmentation per family. */
  for (int q = 1; q <= L; ++q)
    for (int i = 0; i < left.size(q); ++i) {
      std::vector<std::pair<std::string, Int>> ts;
      for (auto& t : left.diff[q][i].terms) ts.emplace_back(lname(q - 1, t.idx), t.coef);
      bld.d[{q, lname(q, i)}] = std::move(ts);
    }
  for (int i = 0; i < left.size(0); ++i) bld.aug[lname(0, i)] = left.aug[i];
  for (int q = 1; q <= R; ++q)
    for (int i = 0; i < right.size(q); ++i) {
      std::vector<std::pair<std::string, Int>> ts;
      for (auto& t : right.diff[q][i].terms) ts.emplace_back(rname(q - 1, t.idx), t.coef);
      bld.d[{q, rname(q, i)}] = std::move(ts);
    }
  for (int i = 0; i < right.size(0); ++i) bld.aug[rname(0, i)] = right.aug[i];
  for (int k = 0; k <= L; ++k)
    for (int l = 0; l <= R; ++l)
      for (int i = 0; i < left.size(k); ++i)
        for (int j = 0; j < right.size(l); ++j) {
          std::vector<std::pair<std::string, Int>> ts;
          if (k >= 1) {
            for (auto& t : left.diff[k][i].terms) ts.emplace_back(pname(k - 1, t.idx, l, j), t.coef);
          } else {
            ts.emplace_back(rname(l, j), left.aug[i]);
          }
          Int s = (k % 2 == 0) ? Int(-1) : Int(1); /* (-1)^(k+1) */
          if (l >= 1) {
            for (auto& t : right.diff[l][j].terms) ts.emplace_back(pname(k, i, l - 1, t.idx), s * t.coef);
          } else {
            ts.emplace_back(lname(k, i), s * right.aug[j]);
          }
          bld.d[{k + l + 1, pname(k, i, l, j)}] = std::move(ts);
        }
  Adc a = bld.build();
  auto ji = std::make_shared<JoinInfo>();
  ji->left_name = left.name;
  ji->right_name = right.name;
  ji->prov.resize(a.top_dim() + 1);
  for (int q = 0; q <= a.top_dim(); ++q) {
    ji->prov[q].resize(a.size(q));
    for (int i = 0; i < a.size(q); ++i) {
      const JoinInfo::Prov p = prov.at({q, a.basis[q][i]});
      ji->prov[q][i] = p;
      switch (p.fam) {
        case JoinInfo::Family::LeftEmpty: ji->left_to_idx[{p.left_dim, p.left_idx}] = i; break;
        case JoinInfo::Family::EmptyRight: ji->right_to_idx[{p.right_dim, p.right_idx}] = i; break;
        case JoinInfo::Family::Pair: ji->pair_to_idx[{p.left_dim, p.left_idx, p.right_dim, p.right_idx}] = i; break;
      }
    }
  }
  a.join = std::move(ji);
  return a;
}

const JoinInfo& join_info(const Adc& a) {
  if (!a.join) throw StructuralError("complex '" + a.name + "' carries no join structure");
  return *a.join;
}

}
