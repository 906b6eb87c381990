#include "steiner/nerve_msset.hpp"

namespace steiner {

NerveData nerve_msset(std::shared_ptr<const Adc> target, int dmax, const Int& cap, int workers,
                      EnumStrategy strategy) {
  if (dmax < 0) throw StructuralError("nerve dimension bound must be nonnegative");
  NerveData nd;
  nd.target = target;
  nd.dmax = dmax;
  nd.cap = cap;
  nd.workers = workers;
  nd.total.assign(dmax + 1, 0);
  nd.nondeg.resize(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    EnumOptions o;
    o.dim = d;
    o.cap = cap;
    o.workers = workers;
    o.strategy = strategy;
    o.nondeg_only = true; /* degenerates are recovered from lower cells; keep only the count */
    EnumerationResult r = enumerate_simplices(target, o);
    if (!r.saturated) {
      nd.saturated = false;
      for (const auto& t : r.offending_tuples)
        nd.offending.push_back("dim " + std::to_string(d) + ": " + t);
    }
    nd.total[d] = static_cast<int>(r.total_enumerated);
    nd.nondeg[d] = std::move(r.simplices);
  }
  for (int d = 0; d <= dmax; ++d)
    for (int i = 0; i < static_cast<int>(nd.nondeg[d].size()); ++i)
      nd.index.emplace(canonical_string(nd.nondeg[d][i]), std::make_pair(d, i));

  MSSet& s = nd.msset;
  s.name = "N(" + target->name + ")";
  s.truncation = dmax;
  s.counts.resize(dmax + 1, 0);
  s.faces.resize(dmax + 1);
  s.marked.resize(dmax + 1);
  s.labels.resize(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    s.counts[d] = static_cast<int>(nd.nondeg[d].size());
    s.faces[d].resize(s.counts[d]);
    s.marked[d].assign(s.counts[d], 0);
    for (int i = 0; i < s.counts[d]; ++i) {
      const SimplexMap& x = nd.nondeg[d][i];
      s.labels[d].push_back(canonical_string(x));
      s.marked[d][i] = simplex_is_marked(x);
      if (d >= 1)
        for (int j = 0; j <= d; ++j) s.faces[d][i].push_back(locate(nd, face(x, j)));
    }
  }
  return nd;
}

Gen locate(const NerveData& nd, const SimplexMap& x) {
  auto norm = normalize(x);
  auto it = nd.index.find(canonical_string(norm.first));
  if (it == nd.index.end())
    throw CheckFailure("simplex missing from the enumerated nerve: " + canonical_string(norm.first));
  return Gen{it->second.first, it->second.second, norm.second};
}

const SimplexMap& cell_of(const NerveData& nd, int dim, int idx) {
  if (dim < 0 || dim > nd.dmax || idx < 0 || idx >= static_cast<int>(nd.nondeg[dim].size()))
    throw StructuralError("nerve cell out of range");
  return nd.nondeg[dim][idx];
}

SimplexMap inject_front(const ComparisonData& cd, const SimplexMap& x) {
  if (x.target.get() != cd.front.get() && !(x.target && cd.front && x.target->name == cd.front->name))
    throw StructuralError("inject_front expects a simplex valued in the front complex");
  const JoinInfo& ji = join_info(*cd.joined);
  SimplexMap y = make_simplex(cd.joined, x.m);
  for (int mask = 1; mask <= full_mask(x.m); ++mask) {
    std::vector<Term> ts;
    for (const Term& t : x.img[mask].terms) {
      auto it = ji.left_to_idx.find({x.img[mask].degree, t.idx});
      if (it == ji.left_to_idx.end()) throw StructuralError("front element missing from the join");
      ts.push_back(Term{it->second, t.coef});
    }
    y.img[mask] = make_chain(x.img[mask].degree, std::move(ts));
  }
  return y;
}

ComparisonData comparison_data(std::shared_ptr<const Adc> front, int dmax, const Int& cap,
                               int workers) {
  ComparisonData cd;
  cd.front = front;
  cd.dmax = dmax;
  Adc pt = standard_complex(0);
  cd.joined = std::make_shared<Adc>(join_complexes(*front, pt));
  cd.ctx = cone_context(cd.joined);
  cd.front_nerve = std::make_shared<NerveData>(nerve_msset(front, dmax, cap, workers));
  cd.point = standard_marked(0, 0, 0);
  cd.small = std::make_shared<MSSet>(join_marked(cd.front_nerve->msset, cd.point));
  cd.big = std::make_shared<NerveData>(nerve_msset(cd.joined, dmax + 1, cap, workers));
  cd.saturated = cd.front_nerve->saturated && cd.big->saturated;

  cd.cmp.src = cd.small.get();
  cd.cmp.dst = &cd.big->msset;
  int top = cd.small->stored_top();
  cd.cmp.image.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    cd.cmp.image[d].resize(cd.small->counts[d]);
    for (int i = 0; i < cd.small->counts[d]; ++i) {
      JoinCell c = join_cell_of(cd.front_nerve->msset, cd.point, d, i);
      if (c.kind == 0) {
        cd.cmp.image[d][i] = locate(*cd.big, inject_front(cd, cell_of(*cd.front_nerve, c.ldim, c.lidx)));
      } else if (c.kind == 2) {
        SimplexMap v = make_simplex(cd.joined, 0);
        v.img[1] = make_chain(0, {Term{cd.ctx.terminus, 1}});
        cd.cmp.image[d][i] = locate(*cd.big, v);
      } else {
        SimplexMap z = inject_front(cd, cell_of(*cd.front_nerve, c.ldim, c.lidx));
        cd.cmp.image[d][i] = locate(*cd.big, cone(cd.ctx, z));
      }
    }
  }
  return cd;
}

}
