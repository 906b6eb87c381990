#include "steiner/simplex_complex.hpp"
#include <algorithm>

namespace steiner {

std::string tuple_name(const std::vector<int>& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

std::vector<int> parse_tuple(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw StructuralError("bad tuple '" + s + "'");
  std::vector<int> out;
  size_t i = 1;
  while (i < s.size() - 1) {
    size_t j = i;
    if (s[j] == '-') ++j;
    while (j < s.size() - 1 && s[j] >= '0' && s[j] <= '9') ++j;
    if (j == i) throw StructuralError("bad tuple '" + s + "'");
    out.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    if (i < s.size() - 1) {
      if (s[i] != ',') throw StructuralError("bad tuple '" + s + "'");
      ++i;
    }
  }
  if (out.empty()) throw StructuralError("bad tuple '" + s + "'");
  return out;
}

Adc standard_complex(int m) {
  if (m < -1) throw StructuralError("standard complex needs m >= -1");
  AdcBuilder bld;
  bld.name = "delta" + std::to_string(m);
  if (m == -1) return bld.build();
  bld.basis.resize(m + 1);
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    std::vector<int> t;
    for (int v = 0; v <= m; ++v)
      if (mask & (1 << v)) t.push_back(v);
    int q = static_cast<int>(t.size()) - 1;
    std::string nm = tuple_name(t);
    bld.basis[q].push_back(nm);
    if (q == 0) {
      bld.aug[nm] = 1;
    } else {
      std::vector<std::pair<std::string, Int>> ts;
      for (int i = 0; i <= q; ++i) {
        std::vector<int> f = t;
        f.erase(f.begin() + i);
        ts.emplace_back(tuple_name(f), (i % 2 == 0) ? Int(1) : Int(-1));
      }
      bld.d[{q, nm}] = std::move(ts);
    }
  }
  return bld.build();
}

bool monotone(const std::vector<int>& f, int n) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] > n) return false;
    if (i && f[i] < f[i - 1]) return false;
  }
  return true;
}

std::vector<int> compose_values(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0 || g[i] >= static_cast<int>(f.size())) throw StructuralError("composition out of range");
    out[i] = f[g[i]];
  }
  return out;
}

std::vector<int> coface_values(int i, int n) {
  if (i < 0 || i > n) throw StructuralError("coface index out of range");
  std::vector<int> out;
  for (int v = 0; v <= n - 1; ++v) out.push_back(v < i ? v : v + 1);
  return out;
}

std::vector<int> codegeneracy_values(int i, int n) {
  if (i < 0 || i > n) throw StructuralError("codegeneracy index out of range");
  std::vector<int> out;
  for (int v = 0; v <= n + 1; ++v) out.push_back(v <= i ? v : v - 1);
  return out;
}

std::vector<int> identity_values(int n) {
  std::vector<int> out;
  for (int v = 0; v <= n; ++v) out.push_back(v);
  return out;
}

Chain AdcMap::apply(const Chain& c) const {
  Chain out{c.degree, {}};
  for (auto& t : c.terms) out = add(out, scale(t.coef, img[c.degree][t.idx]));
  return out;
}

std::vector<std::string> validate_adc_map(const AdcMap& f) {
  std::vector<std::string> bad;
  if (!f.src || !f.dst) return {"missing endpoint"};
  if (static_cast<int>(f.img.size()) < f.src->top_dim() + 1) return {"image table too short"};
  for (int q = 0; q <= f.src->top_dim(); ++q) {
    if (static_cast<int>(f.img[q].size()) != f.src->size(q)) {
      bad.push_back("image table size mismatch in dimension " + std::to_string(q));
      continue;
    }
    for (int i = 0; i < f.src->size(q); ++i) {
      const Chain& c = f.img[q][i];
      if (c.degree != q) bad.push_back("image of '" + f.src->basis[q][i] + "' has wrong degree");
      if (!nonneg(c)) bad.push_back("image of '" + f.src->basis[q][i] + "' is not nonnegative");
      if (q == 0) {
        if (f.dst->augment(c) != f.src->aug[i])
          bad.push_back("augmentation mismatch on '" + f.src->basis[0][i] + "'");
      } else {
        if (f.dst->boundary(c) != f.apply(f.src->diff[q][i]))
          bad.push_back("chain law fails on '" + f.src->basis[q][i] + "'");
      }
    }
  }
  return bad;
}

AdcMap simplicial_operator(int m, int n, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != m + 1 || !monotone(f, n))
    throw StructuralError("simplicial operator needs a monotone map with m+1 values into [0..n]");
  AdcMap out;
  out.src = std::make_shared<Adc>(standard_complex(m));
  out.dst = std::make_shared<Adc>(standard_complex(n));
  out.img.resize(out.src->top_dim() + 1);
  for (int q = 0; q <= out.src->top_dim(); ++q) {
    out.img[q].resize(out.src->size(q));
    for (int i = 0; i < out.src->size(q); ++i) {
      std::vector<int> t = parse_tuple(out.src->basis[q][i]);
      std::vector<int> ft;
      bool inj = true;
      for (int v : t) {
        if (!ft.empty() && f[v] == ft.back()) {
          inj = false;
          break;
        }
        ft.push_back(f[v]);
      }
      out.img[q][i] = inj ? chain_unit(q, out.dst->idx_of(q, tuple_name(ft))) : Chain{q, {}};
    }
  }
  return out;
}

AdcMap join_simplex_iso(int k, int l) {
  AdcMap out;
  Adc lhs = join_complexes(standard_complex(k), standard_complex(l));
  out.src = std::make_shared<Adc>(std::move(lhs));
  out.dst = std::make_shared<Adc>(standard_complex(k + l + 1));
  const JoinInfo& ji = join_info(*out.src);
  Adc lc = standard_complex(k), rc = standard_complex(l);
  out.img.resize(out.src->top_dim() + 1);
  for (int q = 0; q <= out.src->top_dim(); ++q) {
    out.img[q].resize(out.src->size(q));
    for (int i = 0; i < out.src->size(q); ++i) {
      const auto& p = ji.prov[q][i];
      std::vector<int> t;
      if (p.fam == JoinInfo::Family::LeftEmpty) {
        t = parse_tuple(lc.basis[p.left_dim][p.left_idx]);
      } else if (p.fam == JoinInfo::Family::EmptyRight) {
        for (int v : parse_tuple(rc.basis[p.right_dim][p.right_idx])) t.push_back(v + k + 1);
      } else {
        t = parse_tuple(lc.basis[p.left_dim][p.left_idx]);
        for (int v : parse_tuple(rc.basis[p.right_dim][p.right_idx])) t.push_back(v + k + 1);
      }
      out.img[q][i] = chain_unit(q, out.dst->idx_of(q, tuple_name(t)));
    }
  }
  return out;
}

AdcMap dual_simplex_iso(int m) {
  AdcMap out;
  out.src = std::make_shared<Adc>(standard_complex(m));
  out.dst = std::make_shared<Adc>(alternating_dual(*out.src));
  out.img.resize(out.src->top_dim() + 1);
  for (int q = 0; q <= out.src->top_dim(); ++q) {
    out.img[q].resize(out.src->size(q));
    for (int i = 0; i < out.src->size(q); ++i) {
      std::vector<int> t = parse_tuple(out.src->basis[q][i]);
      std::vector<int> rt;
      for (auto it = t.rbegin(); it != t.rend(); ++it) rt.push_back(m - *it);
      out.img[q][i] = chain_unit(q, out.dst->idx_of(q, tuple_name(rt)));
    }
  }
  return out;
}

}
