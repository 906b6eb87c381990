#include "steiner/certify.hpp"
#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace steiner {

bool operator==(const CertPair& a, const CertPair& b) {
  return a.dim == b.dim && a.x_cell == b.x_cell && a.y_cell == b.y_cell && a.rank == b.rank &&
         a.index == b.index;
}

CertContext certificate_context(std::shared_ptr<const Adc> front, int dmax, const Int& cap,
                                int workers) {
  if (!front) throw StructuralError("certificates need a front complex");
  if (dmax < 1) throw StructuralError("certificates need a dimension bound of at least 1");
  BasisAnalysis ba = analyze_basis(*front);
  if (!strong_steiner(ba))
    throw CheckFailure("front complex is not strong Steiner: " + front->name);
  CertContext cc;
  cc.front = front;
  Adc pt = standard_complex(0);
  cc.joined = std::make_shared<Adc>(join_complexes(*front, pt));
  cc.ctx = cone_context(cc.joined);
  cc.dmax = dmax;
  cc.nerve = std::make_shared<NerveData>(nerve_msset(cc.joined, dmax + 1, cap, workers));
  return cc;
}

bool image_member(const CertContext& cc, const SimplexMap& x) {
  if (x.m == 0) return true;
  if (!hits_terminus(cc.ctx, x)) {
    if (!lands_in_front(cc.ctx, x))
      throw CheckFailure("simplex misses the terminus but leaves the front: " + canonical_string(x));
    return true;
  }
  return conical(cc.ctx, x);
}

std::vector<std::string> last_vertex_violations(const CertContext& cc) {
  std::vector<std::string> out;
  for (int d = 0; d <= cc.dmax + 1; ++d)
    for (const SimplexMap& x : cc.nerve->nondeg[d])
      if (!hits_terminus(cc.ctx, x) && !lands_in_front(cc.ctx, x))
        out.push_back(canonical_string(x));
  return out;
}

namespace {
bool stratum_less(const CertPair& a, const CertPair& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.rank != b.rank) return a.rank > b.rank;
  if (a.index != b.index) return a.index < b.index;
  return a.x_cell < b.x_cell;
}
}

Certificate build_certificate(const CertContext& cc) {
  Certificate cert;
  cert.complex_name = cc.front->name;
  cert.dmax = cc.dmax;
  cert.cap = cc.nerve->cap;
  cert.saturated = cc.nerve->saturated;
  cert.complement_total.assign(cc.dmax + 1, 0);
  cert.suspect_total.assign(cc.dmax + 2, 0);
  for (int d = 0; d <= cc.dmax + 1; ++d) {
    int n = static_cast<int>(cc.nerve->nondeg[d].size());
    for (int i = 0; i < n; ++i) {
      const SimplexMap& x = cc.nerve->nondeg[d][i];
      if (image_member(cc, x)) continue;
      if (d <= cc.dmax) cert.complement_total[d] += 1;
      if (d == 0) throw CheckFailure("dimension-0 simplex outside the image");
      ConeClass cls = classify(cc.ctx, x);
      if (cls.suspect) {
        cert.suspect_total[d] += 1;
        continue;
      }
      if (d > cc.dmax) continue; /* fronts of the next stage */
      if (cls.index < 1)
        throw CheckFailure("complement simplex of index 0 cannot be paired: " + canonical_string(x));
      SimplexMap y = witness(cc.ctx, x, cls.index);
      Gen g = locate(*cc.nerve, y);
      if (gen_degenerate(g) || g.dim != d + 1)
        throw CheckFailure("witness is not a nondegenerate simplex one dimension up");
      cert.pairs.push_back(CertPair{d, i, g.cell, cls.rank, cls.index});
    }
  }
  std::sort(cert.pairs.begin(), cert.pairs.end(), stratum_less);
  return cert;
}

namespace {
/* Face and marking clauses for one pair. */
void check_pair(const CertContext& cc, const CertPair& pr,
                const std::function<void(const std::string&)>& note) {
  const SimplexMap& x = cell_of(*cc.nerve, pr.dim, pr.x_cell);
  const SimplexMap& y = cell_of(*cc.nerve, pr.dim + 1, pr.y_cell);
  int d = pr.dim, r = pr.rank, p = pr.index;
  std::string tag = "pair (d=" + std::to_string(d) + ",r=" + std::to_string(r) +
                    ",p=" + std::to_string(p) + ",x=" + std::to_string(pr.x_cell) + ")";
  if (p < 1 || r < p || r > d) {
    note(tag + ": stratum data out of range");
    return;
  }
  if (image_member(cc, x)) note(tag + ": front lies in the image");
  ConeClass cx = classify(cc.ctx, x);
  if (!cx.hits || cx.rank != r) note(tag + ": front rank disagrees");
  if (cx.suspect) note(tag + ": front is suspect");
  if (cx.index != p) note(tag + ": front index disagrees");
  if (image_member(cc, y)) note(tag + ": filler lies in the image");
  ConeClass cy = classify(cc.ctx, y);
  if (!cy.hits || cy.rank != r + 1) note(tag + ": filler rank is not rank+1");
  if (!cy.suspect || cy.index != p) note(tag + ": filler is not suspect at the pair index");

  if (!(witness(cc.ctx, x, p) == y)) note(tag + ": filler is not the witness of its front");
  if (!(face(y, p) == x)) note(tag + ": front is not face p of the filler");

  /* Horn-with-marking condition: tuples containing p-1, p, p+1 map to zero. */
  int need = (1 << (p - 1)) | (1 << p) | (1 << (p + 1));
  for (int mask = 1; mask <= full_mask(d + 1); ++mask)
    if ((mask & need) == need && !y.img[mask].is_zero()) {
      note(tag + ": filler misses the marking condition");
      break;
    }
  /* When the front is marked the two neighbouring faces must be marked too. */
  if (simplex_is_marked(x) &&
      (!simplex_is_marked(face(y, p - 1)) || !simplex_is_marked(face(y, p + 1))))
    note(tag + ": marked front needs marked neighbouring faces");

  for (int i = 0; i <= d + 1; ++i) {
    if (i == p) continue;
    SimplexMap f = face(y, i);
    /* Identity replay along the face case split. */
    if (i <= p - 2) {
      if (!(f == witness(cc.ctx, face(x, i), p - 1)))
        note(tag + ": face " + std::to_string(i) + " is not the shifted witness");
    } else if (i == p - 1) {
      if (!(f == interpolator(cc.ctx, x, p - 1)))
        note(tag + ": face " + std::to_string(i) + " is not the interpolator");
    } else if (i <= r) {
      if (!(f == witness(cc.ctx, face(x, i - 1), p)))
        note(tag + ": face " + std::to_string(i) + " is not the witness of the front face");
    } else {
      if (hits_terminus(cc.ctx, f) && rank(cc.ctx, f) != r + 1)
        note(tag + ": late face " + std::to_string(i) + " has the wrong rank");
    }
    /* Availability strictly before this stratum. */
    auto norm = normalize(f);
    const SimplexMap& g = norm.first;
    if (g.m < d) continue; /* lower dimension, already filled */
    if (g.m > d) {
      note(tag + ": face core exceeds its dimension");
      continue;
    }
    if (image_member(cc, g)) continue;
    ConeClass cg = classify(cc.ctx, g);
    if (cg.suspect) continue;                     /* filled with the previous dimension */
    if (cg.rank > r) continue;                    /* earlier rank stage */
    if (cg.rank == r && cg.index < p) continue;   /* earlier index stage */
    note(tag + ": face " + std::to_string(i) + " is unavailable before the stratum");
  }
}
}

std::vector<std::string> verify_certificate(const CertContext& cc, const Certificate& cert) {
  std::vector<std::string> bad;
  auto note = [&](const std::string& s) {
    if (bad.size() < 500) bad.push_back(s);
  };
  if (cert.dmax != cc.dmax) note("dimension bound disagrees with the context");
  if (cert.complex_name != cc.front->name) note("front complex name disagrees");

  /* Stored marking flags must match the recomputed ones. */
  for (int d = 0; d <= cc.dmax + 1; ++d)
    for (int i = 0; i < static_cast<int>(cc.nerve->nondeg[d].size()); ++i) {
      bool m = simplex_is_marked(cc.nerve->nondeg[d][i]);
      if ((cc.nerve->msset.marked[d][i] != 0) != m)
        note("stored marking flag disagrees at dim " + std::to_string(d) + " cell " +
             std::to_string(i));
    }

  for (size_t t = 1; t < cert.pairs.size(); ++t)
    if (!stratum_less(cert.pairs[t - 1], cert.pairs[t]))
      note("pairs leave the filtration order at position " + std::to_string(t));

  std::vector<std::set<int>> xs(cc.dmax + 2), ys(cc.dmax + 2);
  for (const CertPair& pr : cert.pairs) {
    if (pr.dim < 1 || pr.dim > cc.dmax) {
      note("pair dimension out of range");
      continue;
    }
    if (pr.x_cell < 0 || pr.x_cell >= static_cast<int>(cc.nerve->nondeg[pr.dim].size()) ||
        pr.y_cell < 0 || pr.y_cell >= static_cast<int>(cc.nerve->nondeg[pr.dim + 1].size())) {
      note("pair cell out of range");
      continue;
    }
    if (!xs[pr.dim].insert(pr.x_cell).second) note("front cell paired twice");
    if (!ys[pr.dim + 1].insert(pr.y_cell).second) note("filler cell paired twice");
    try {
      check_pair(cc, pr, note);
    } catch (const CheckFailure& e) {
      note(std::string("pair check failed: ") + e.what());
    }
  }

  /* Census: every nondegenerate cell accounted for exactly once. */
  std::vector<int> comp_total(cc.dmax + 1, 0), susp_total(cc.dmax + 2, 0);
  for (int d = 0; d <= cc.dmax + 1; ++d)
    for (int i = 0; i < static_cast<int>(cc.nerve->nondeg[d].size()); ++i) {
      const SimplexMap& x = cc.nerve->nondeg[d][i];
      bool in_x = xs[d].count(i) > 0, in_y = ys[d].count(i) > 0;
      try {
        bool member = image_member(cc, x);
        if (member) {
          if (in_x || in_y) note("image cell appears in a pair at dim " + std::to_string(d));
          continue;
        }
        if (d <= cc.dmax) comp_total[d] += 1;
        if (d == 0) {
          note("dimension-0 cell outside the image");
          continue;
        }
        ConeClass cls = classify(cc.ctx, x);
        if (cls.suspect) {
          susp_total[d] += 1;
          if (d == 1) note("suspect 1-simplex found");
          if (in_x) note("suspect cell used as a pair front at dim " + std::to_string(d));
          if (!in_y)
            note("suspect cell never filled: dim " + std::to_string(d) + " cell " + std::to_string(i));
        } else {
          if (in_y) note("non-suspect cell used as a filler at dim " + std::to_string(d));
          if (d <= cc.dmax && !in_x)
            note("complement cell never paired: dim " + std::to_string(d) + " cell " +
                 std::to_string(i));
        }
      } catch (const CheckFailure& e) {
        note(std::string("census check failed: ") + e.what());
      }
    }
  if (cert.complement_total != comp_total) note("complement totals disagree with the census");
  if (cert.suspect_total != susp_total) note("suspect totals disagree with the census");
  return bad;
}

Certificate mutate_pair_corruption(Certificate c) {
  if (c.pairs.empty()) throw StructuralError("no pairs to corrupt");
  c.pairs[c.pairs.size() / 2].y_cell += 1;
  return c;
}

Certificate mutate_stratum_reorder(Certificate c) {
  if (c.pairs.size() < 2) throw StructuralError("need two pairs to reorder");
  std::swap(c.pairs.front(), c.pairs.back());
  return c;
}

Certificate mutate_coverage_gap(Certificate c) {
  if (c.pairs.empty()) throw StructuralError("no pairs to drop");
  c.pairs.erase(c.pairs.begin() + static_cast<long>(c.pairs.size() / 2));
  return c;
}

CertContext flip_marking(const CertContext& cc) {
  CertContext out = cc;
  out.nerve = std::make_shared<NerveData>(*cc.nerve);
  for (int d = 1; d <= out.dmax + 1; ++d)
    if (!out.nerve->msset.marked[d].empty()) {
      out.nerve->msset.marked[d][0] ^= 1;
      return out;
    }
  throw StructuralError("no marking to flip");
}

std::vector<OrientalStage> certify_oriental(int n, int dmax, const Int& cap, int workers) {
  if (n < 0) throw StructuralError("oriental stage must be nonnegative");
  std::vector<OrientalStage> out;
  for (int k = 1; k <= n; ++k) {
    OrientalStage st;
    st.k = k;
    auto front = std::make_shared<Adc>(standard_complex(k - 1));
    CertContext cc = certificate_context(front, dmax, cap, workers);
    st.cert = build_certificate(cc);
    st.violations = verify_certificate(cc, st.cert);
    out.push_back(std::move(st));
  }
  return out;
}

namespace {
bool lands_in_back(const JoinInfo& ji, const SimplexMap& z) {
  for (int mask = 1; mask <= full_mask(z.m); ++mask)
    for (const Term& t : z.img[mask].terms)
      if (ji.prov[z.img[mask].degree][t.idx].fam != JoinInfo::Family::EmptyRight) return false;
  return true;
}
}

SimplexMap left_cone(std::shared_ptr<const Adc> joined, const SimplexMap& z) {
  if (!joined) throw StructuralError("left cone needs a joined complex");
  const JoinInfo& ji = join_info(*joined);
  if (ji.left_to_idx.size() != 1 || ji.left_to_idx.count({0, 0}) == 0)
    throw StructuralError("left cone needs a single-point left factor");
  if (!z.target || z.target->name != joined->name)
    throw StructuralError("left cone input must be valued in the joined complex");
  if (!lands_in_back(ji, z)) throw StructuralError("left cone needs a back-valued simplex");
  int source = ji.left_to_idx.at({0, 0});
  SimplexMap x = make_simplex(z.target, z.m + 1);
  x.img[1] = chain_unit(0, source);
  for (int mask = 1; mask <= full_mask(z.m); ++mask) {
    x.img[mask << 1] = z.img[mask];
    const Chain& c = z.img[mask];
    std::vector<Term> ts;
    for (const Term& t : c.terms) {
      const auto& pv = ji.prov[c.degree][t.idx];
      ts.push_back(Term{ji.pair_to_idx.at({0, 0, c.degree, pv.right_idx}), t.coef});
    }
    x.img[(mask << 1) | 1] = make_chain(c.degree + 1, std::move(ts));
  }
  return x;
}

bool left_member(std::shared_ptr<const Adc> joined, const SimplexMap& x) {
  if (!joined) throw StructuralError("left membership needs a joined complex");
  const JoinInfo& ji = join_info(*joined);
  if (ji.left_to_idx.size() != 1 || ji.left_to_idx.count({0, 0}) == 0)
    throw StructuralError("left membership needs a single-point left factor");
  if (x.m == 0) return true;
  int source = ji.left_to_idx.at({0, 0});
  if (!(x.img[1] == chain_unit(0, source))) {
    if (!lands_in_back(ji, x))
      throw CheckFailure("simplex misses the source but leaves the back: " + canonical_string(x));
    return true;
  }
  SimplexMap z = face(x, 0);
  if (!lands_in_back(ji, z)) return false;
  return x == left_cone(x.target, z);
}

DualReport certify_dual(std::shared_ptr<const Adc> front, int dmax, const Int& cap, int workers) {
  if (!front) throw StructuralError("dual certification needs a front complex");
  BasisAnalysis bf = analyze_basis(*front);
  if (!strong_steiner(bf))
    throw CheckFailure("front complex is not strong Steiner: " + front->name);
  auto dual = std::make_shared<Adc>(alternating_dual(*front));
  BasisAnalysis bd = analyze_basis(*dual);
  if (!strong_steiner(bd))
    throw CheckFailure("alternating dual is not strong Steiner: " + dual->name);

  DualReport rep;
  CertContext cc = certificate_context(dual, dmax, cap, workers);
  rep.cert = build_certificate(cc);
  rep.violations = verify_certificate(cc, rep.cert);

  /* Swap isomorphism from the alternating dual of (dual ⋆ point) onto point ⋆ front. */
  Adc ptc = standard_complex(0);
  auto left_joined = std::make_shared<Adc>(join_complexes(ptc, *front));
  auto eop = std::make_shared<Adc>(alternating_dual(*cc.joined));
  const JoinInfo& je = join_info(*cc.joined);
  const JoinInfo& jl = join_info(*left_joined);
  AdcMap swap;
  swap.src = eop;
  swap.dst = left_joined;
  swap.img.resize(eop->top_dim() + 1);
  for (int q = 0; q <= eop->top_dim(); ++q) {
    swap.img[q].resize(eop->size(q));
    for (int i = 0; i < eop->size(q); ++i) {
      const auto& pv = je.prov[q][i];
      int j = -1;
      if (pv.fam == JoinInfo::Family::LeftEmpty)
        j = jl.right_to_idx.at({q, pv.left_idx});
      else if (pv.fam == JoinInfo::Family::Pair)
        j = jl.pair_to_idx.at({0, 0, pv.left_dim, pv.left_idx});
      else
        j = jl.left_to_idx.at({0, 0});
      swap.img[q][i] = chain_unit(q, j);
    }
  }
  rep.swap_iso_valid = validate_adc_map(swap).empty();

  auto direct = std::make_shared<NerveData>(nerve_msset(left_joined, dmax, cap, workers));
  rep.direct_total.assign(dmax + 1, 0);
  rep.direct_nondeg.assign(dmax + 1, 0);
  for (int d = 0; d <= dmax; ++d) {
    rep.direct_total[d] = direct->total[d];
    rep.direct_nondeg[d] = static_cast<int>(direct->nondeg[d].size());
  }

  auto transport = [&](const SimplexMap& x) {
    SimplexMap y = make_simplex(left_joined, x.m);
    for (int mask = 1; mask <= full_mask(x.m); ++mask) {
      int rev = 0;
      for (int b = 0; b <= x.m; ++b)
        if (mask & (1 << b)) rev |= 1 << (x.m - b);
      y.img[mask] = swap.apply(x.img[rev]);
    }
    return y;
  };

  rep.transport_bijective = true;
  auto flag = [&](const std::string& s) {
    rep.transport_bijective = false;
    if (rep.mismatches.size() < 100) rep.mismatches.push_back(s);
  };
  std::vector<std::set<std::string>> trans_comp(dmax + 1), direct_comp(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    if (cc.nerve->total[d] != direct->total[d])
      flag("total simplex counts differ at dim " + std::to_string(d));
    std::set<std::string> seen;
    for (const SimplexMap& x : cc.nerve->nondeg[d]) {
      SimplexMap tx = transport(x);
      if (auto err = validate_directed(tx)) {
        flag("transported simplex fails validation: " + *err);
        continue;
      }
      if (!nondegenerate(tx)) {
        flag("transport degenerates a nondegenerate simplex");
        continue;
      }
      std::string s = canonical_string(tx);
      if (!seen.insert(s).second) flag("transport collides: " + s);
      if (direct->index.find(s) == direct->index.end()) {
        flag("transported simplex missing from the direct nerve: " + s);
        continue;
      }
      if (!image_member(cc, x)) trans_comp[d].insert(s);
    }
    if (static_cast<int>(seen.size()) != static_cast<int>(direct->nondeg[d].size()))
      flag("nondegenerate counts differ at dim " + std::to_string(d));
    for (const SimplexMap& z : direct->nondeg[d])
      if (!left_member(left_joined, z)) direct_comp[d].insert(canonical_string(z));
  }

  rep.complements_agree = rep.swap_iso_valid && rep.transport_bijective;
  for (int d = 0; d <= dmax; ++d)
    if (trans_comp[d] != direct_comp[d]) {
      rep.complements_agree = false;
      for (const auto& s : trans_comp[d])
        if (!direct_comp[d].count(s) && rep.mismatches.size() < 100)
          rep.mismatches.push_back("only transported: " + s);
      for (const auto& s : direct_comp[d])
        if (!trans_comp[d].count(s) && rep.mismatches.size() < 100)
          rep.mismatches.push_back("only direct: " + s);
    }
  return rep;
}

}
