#include "steiner/cone.hpp"
#include <bit>

namespace steiner {

ConeContext cone_context(std::shared_ptr<const Adc> joined) {
  if (!joined) throw StructuralError("cone context needs a complex");
  const JoinInfo& ji = join_info(*joined);
  if (ji.right_to_idx.size() != 1) throw StructuralError("right join factor is not a single point");
  auto [key, idx] = *ji.right_to_idx.begin();
  if (key[0] != 0) throw StructuralError("right join factor is not concentrated in dimension 0");
  ConeContext c;
  c.joined = std::move(joined);
  c.terminus = idx;
  c.right_zero = key[1];
  return c;
}

bool hits_terminus(const ConeContext& c, const SimplexMap& x) {
  return x.img[1 << x.m] == chain_unit(0, c.terminus);
}

int rank(const ConeContext& c, const SimplexMap& x) {
  Chain t = chain_unit(0, c.terminus);
  int r = -1;
  for (int j = 0; j <= x.m; ++j)
    if (x.img[1 << j] == t) {
      r = j;
      break;
    }
  if (r < 0) throw StructuralError("rank undefined: simplex misses the terminus");
  for (int j = r + 1; j <= x.m; ++j)
    if (x.img[1 << j] != t) throw CheckFailure("terminus hits are not upward closed");
  return r;
}

bool lands_in_front(const ConeContext& c, const SimplexMap& x) {
  const JoinInfo& ji = join_info(*c.joined);
  for (int mask = 1; mask < (1 << (x.m + 1)); ++mask)
    for (auto& t : x.img[mask].terms)
      if (ji.prov[x.img[mask].degree][t.idx].fam != JoinInfo::Family::LeftEmpty) return false;
  return true;
}

SimplexMap cone(const ConeContext& c, const SimplexMap& z) {
  if (!lands_in_front(c, z)) throw StructuralError("cone needs a front-valued simplex");
  const JoinInfo& ji = join_info(*c.joined);
  int m = z.m;
  SimplexMap out = make_simplex(z.target, m + 1);
  int top = 1 << (m + 1);
  out.img[top] = chain_unit(0, c.terminus);
  for (int mask = 1; mask < top; ++mask) {
    out.img[mask] = z.img[mask];
    int q = z.img[mask].degree;
    std::vector<Term> ts;
    for (auto& t : z.img[mask].terms) {
      const auto& p = ji.prov[q][t.idx];
      ts.push_back(Term{ji.pair_to_idx.at({p.left_dim, p.left_idx, 0, c.right_zero}), t.coef});
    }
    out.img[mask | top] = make_chain(q + 1, std::move(ts));
  }
  return out;
}

bool conical(const ConeContext& c, const SimplexMap& x) {
  if (x.m < 1 || !hits_terminus(c, x)) return false;
  SimplexMap front = face(x, x.m);
  if (!lands_in_front(c, front)) return false;
  return x == cone(c, front);
}

namespace {
Chain project(const ConeContext& c, const Chain& ch, bool keep_pairs) {
  const JoinInfo& ji = join_info(*c.joined);
  Chain out{ch.degree, {}};
  for (auto& t : ch.terms) {
    bool is_pair = ji.prov[ch.degree][t.idx].fam == JoinInfo::Family::Pair;
    bool is_front = ji.prov[ch.degree][t.idx].fam == JoinInfo::Family::LeftEmpty;
    if ((keep_pairs && is_pair) || (!keep_pairs && is_front)) out.terms.push_back(t);
  }
  return out;
}
}

SimplexMap last_factor(const ConeContext& c, const SimplexMap& x) {
  int r = rank(c, x);
  SimplexMap out = make_simplex(x.target, r);
  int rbit = 1 << r;
  out.img[rbit] = chain_unit(0, c.terminus);
  for (int mask = 1; mask < rbit; ++mask) {
    Chain pt = project(c, x.img[mask | rbit], true);
    out.img[mask | rbit] = pt;
    int q = std::popcount(static_cast<unsigned>(mask)) - 1;
    Chain low = project(c, c.joined->boundary(pt), false);
    out.img[mask] = (q % 2 == 0) ? negate(low) : low; /* (-1)^(q+1) */
  }
  if (auto bad = validate_directed(out)) throw CheckFailure("last factor not a directed simplex: " + *bad);
  return out;
}

SimplexMap last_factor_direct(const ConeContext& c, const SimplexMap& x) {
  const JoinInfo& ji = join_info(*c.joined);
  int r = rank(c, x);
  SimplexMap out = make_simplex(x.target, r);
  int rbit = 1 << r;
  out.img[rbit] = chain_unit(0, c.terminus);
  for (int mask = 1; mask < rbit; ++mask) {
    const Chain& big = x.img[mask | rbit];
    out.img[mask | rbit] = project(c, big, true);
    std::vector<Term> ts;
    for (auto& t : big.terms) {
      const auto& p = ji.prov[big.degree][t.idx];
      if (p.fam == JoinInfo::Family::Pair)
        ts.push_back(Term{ji.left_to_idx.at({p.left_dim, p.left_idx}), t.coef});
    }
    out.img[mask] = make_chain(big.degree - 1, std::move(ts));
  }
  if (auto bad = validate_directed(out)) throw CheckFailure("last factor not a directed simplex: " + *bad);
  return out;
}

SimplexMap normalized_last_factor(const ConeContext& c, const SimplexMap& x) {
  int r = rank(c, x);
  return degeneracy_pow(last_factor(c, x), r, x.m - r);
}

SimplexMap wedge(const SimplexMap& x, const SimplexMap& xp, int i) {
  if (x.m != xp.m || x.m < 1) throw StructuralError("wedge needs two simplices of equal positive dimension");
  if (i < 0 || i > x.m - 1) throw StructuralError("wedge index out of range");
  if (face(x, i) != face(xp, i + 1)) throw StructuralError("wedge faces do not match");
  SimplexMap mid = degeneracy(degeneracy(face(xp, i + 1), i), i);
  SimplexMap out = add(sub(degeneracy(x, i + 1), mid), degeneracy(xp, i));
  if (auto bad = validate_directed(out)) throw CheckFailure("wedge not a directed simplex: " + *bad);
  return out;
}

SimplexMap iterated_wedge(const SimplexMap& u, const SimplexMap& v, int k, int l) {
  if (l < 1) throw StructuralError("iterated wedge needs l >= 1");
  int m = v.m;
  if (u.m != m - l + 1) throw StructuralError("iterated wedge dimension mismatch");
  if (k < 0 || k > m - l) throw StructuralError("iterated wedge index out of range");
  SimplexMap dv = face_pow(v, k + 1, l);
  if (face(u, k) != dv) throw StructuralError("iterated wedge faces do not match");
  SimplexMap out = add(sub(degeneracy_pow(u, k + 1, l), degeneracy_pow(dv, k, l + 1)), degeneracy(v, k));
  if (auto bad = validate_directed(out)) throw CheckFailure("iterated wedge not a directed simplex: " + *bad);
  return out;
}

SimplexMap witness(const ConeContext& c, const SimplexMap& x, int j) {
  int r = rank(c, x);
  if (j < 1 || j > r) throw StructuralError("witness index out of range");
  SimplexMap b = normalized_last_factor(c, x);
  SimplexMap out = add(degeneracy_pow(face_pow(sub(x, b), j, r - j), j, r - j + 1), degeneracy(b, j - 1));
  if (auto bad = validate_directed(out)) throw CheckFailure("witness not a directed simplex: " + *bad);
  return out;
}

SimplexMap interpolator(const ConeContext& c, const SimplexMap& x, int j) {
  int r = rank(c, x);
  if (j < 0 || j > r) throw StructuralError("interpolator index out of range");
  SimplexMap b = normalized_last_factor(c, x);
  SimplexMap out = add(degeneracy_pow(face_pow(sub(x, b), j, r - j), j, r - j), b);
  if (auto bad = validate_directed(out)) throw CheckFailure("interpolator not a directed simplex: " + *bad);
  return out;
}

SimplexMap approximator(const ConeContext& c, const SimplexMap& x, int j) {
  int r = rank(c, x);
  if (j < 0 || j >= r) throw StructuralError("approximator index out of range");
  SimplexMap b = normalized_last_factor(c, x);
  SimplexMap out = add(face_pow(sub(x, b), j + 1, r - j - 1), degeneracy(face_pow(b, j + 1, r - j), j));
  if (auto bad = validate_directed(out)) throw CheckFailure("approximator not a directed simplex: " + *bad);
  return out;
}

int suspect_index(const ConeContext& c, const SimplexMap& x) {
  int r = rank(c, x);
  for (int j = 0; j <= r; ++j)
    if (interpolator(c, x, j) == x) return j;
  throw CheckFailure("interpolators never stabilize");
}

ConeClass classify(const ConeContext& c, const SimplexMap& x) {
  ConeClass k;
  k.hits = hits_terminus(c, x);
  if (!k.hits) return k;
  k.rank = rank(c, x);
  k.corank = x.m - k.rank;
  k.conical = conical(c, x);
  k.index = suspect_index(c, x);
  k.suspect = k.index >= 1 && degenerate_at(interpolator(c, x, k.index - 1), k.index - 1);
  return k;
}

}
