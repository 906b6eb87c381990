#include "steiner/nerve.hpp"
#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace steiner {

Int default_cap() {
  const char* e = std::getenv("STEINER_DEFAULT_CAP");
  if (!e || !*e) return Int(4);
  try {
    Int v(e);
    if (v < 0) throw StructuralError("STEINER_DEFAULT_CAP must be nonnegative");
    return v;
  } catch (const StructuralError&) {
    throw;
  } catch (...) {
    throw StructuralError("malformed STEINER_DEFAULT_CAP");
  }
}

std::vector<Chain> solve_boundary(const Adc& a, int q, const Chain& rhs, const Int& box) {
  if (q < 1) throw StructuralError("solve dimension out of range");
  if (rhs.degree != q - 1) throw StructuralError("solve right-hand side has wrong degree");
  int cols = a.size(q);
  int rows = a.size(q - 1);
  std::vector<Chain> out;
  if (cols == 0) {
    if (rhs.is_zero()) out.push_back(Chain{q, {}});
    return out;
  }
  /* Suffix bounds per row: the reachable contribution interval of columns i..cols-1. */
  std::vector<std::vector<Int>> sufmin(cols + 1, std::vector<Int>(rows, 0));
  std::vector<std::vector<Int>> sufmax(cols + 1, std::vector<Int>(rows, 0));
  for (int i = cols - 1; i >= 0; --i) {
    sufmin[i] = sufmin[i + 1];
    sufmax[i] = sufmax[i + 1];
    for (auto& t : a.diff[q][i].terms) {
      if (t.coef > 0)
        sufmax[i][t.idx] += box * t.coef;
      else
        sufmin[i][t.idx] += box * t.coef;
    }
  }
  std::vector<Int> res(rows, 0);
  for (auto& t : rhs.terms) res[t.idx] = t.coef;
  std::vector<Int> v(cols, 0);
  auto feasible = [&](int i) {
    for (int r = 0; r < rows; ++r)
      if (res[r] < sufmin[i][r] || res[r] > sufmax[i][r]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (!feasible(i)) return;
    if (i == cols) {
      std::vector<Term> ts;
      for (int c = 0; c < cols; ++c)
        if (v[c] != 0) ts.push_back(Term{c, v[c]});
      out.push_back(Chain{q, std::move(ts)});
      return;
    }
    const Chain& col = a.diff[q][i];
    for (Int val = 0; val <= box; ++val) {
      v[i] = val;
      self(self, i + 1);
      for (auto& t : col.terms) res[t.idx] -= t.coef;
    }
    for (auto& t : col.terms) res[t.idx] += (box + 1) * t.coef;
    v[i] = 0;
  };
  rec(rec, 0);
  return out;
}

bool simplex_is_marked(const SimplexMap& x) {
  return x.m >= 1 && x.img[full_mask(x.m)].is_zero();
}

namespace {

struct SolveOutcome {
  std::vector<Chain> kept; /* coordinates <= cap */
  bool spilled = false;    /* a solution needed cap+1 */
};

SolveOutcome probe_solve(const Adc& a, int q, const Chain& rhs, const Int& cap) {
  SolveOutcome o;
  for (Chain& c : solve_boundary(a, q, rhs, cap + 1)) {
    bool over = false;
    for (auto& t : c.terms)
      if (t.coef > cap) over = true;
    if (over)
      o.spilled = true;
    else
      o.kept.push_back(std::move(c));
  }
  return o;
}

struct WorkerState {
  const Adc* target;
  int m;
  Int cap;
  bool nondeg_only = false;
  long long dropped = 0; /* degenerate simplices discarded under nondeg_only */
  std::vector<int> masks;              /* non-vertex masks in canonical order */
  std::vector<Chain> img;              /* by mask */
  std::vector<SimplexMap> found;
  std::set<std::string> offending;
  bool saturated = true;
  std::shared_ptr<const Adc> target_sp;
  std::map<std::pair<int, std::string>, SolveOutcome> memo;

  Chain rhs_of(int mask) const {
    const TupleTable& tt = tuple_table(m);
    int q = static_cast<int>(tt.tuples[mask].size()) - 1;
    Chain r{q - 1, {}};
    for (auto& [fm, sg] : tt.bnd[mask]) r = add(r, scale(Int(sg), img[fm]));
    return r;
  }

  /* Solutions depend only on (dimension, right-hand side); share them across
     both strategies and across vertex assignments. */
  const SolveOutcome* solved(int q, const Chain& r) {
    std::string key;
    for (auto& t : r.terms) key += std::to_string(t.idx) + ":" + t.coef.str() + ",";
    auto it = memo.find({q, key});
    if (it == memo.end())
      it = memo.emplace(std::make_pair(q, std::move(key)), probe_solve(*target, q, r, cap)).first;
    return &it->second;
  }

  void emit() {
    SimplexMap x;
    x.m = m;
    x.target = target_sp;
    x.img = img;
    if (nondeg_only && !nondegenerate(x)) {
      ++dropped;
      return;
    }
    found.push_back(std::move(x));
  }

  void note(const SolveOutcome& o, int mask) {
    if (o.spilled) {
      saturated = false;
      offending.insert(tuple_table(m).names[mask]);
    }
  }

  void run_tuple_major(size_t pos) {
    if (pos == masks.size()) {
      emit();
      return;
    }
    int mask = masks[pos];
    int q = static_cast<int>(tuple_table(m).tuples[mask].size()) - 1;
    const SolveOutcome* o = solved(q, rhs_of(mask));
    note(*o, mask);
    for (auto& sol : o->kept) {
      img[mask] = sol;
      run_tuple_major(pos + 1);
    }
  }

  void run_degree_major(int q) {
    if (q > m) {
      emit();
      return;
    }
    std::vector<int> dimmasks;
    for (int mask : masks)
      if (static_cast<int>(tuple_table(m).tuples[mask].size()) - 1 == q) dimmasks.push_back(mask);
    /* Solutions per mask depend only on lower dimensions, so solve the whole
       block first (memoized by right-hand side), then walk the product.
       Stop at the first empty list so both strategies visit the same solves. */
    std::vector<const SolveOutcome*> lists(dimmasks.size());
    for (size_t i = 0; i < dimmasks.size(); ++i) {
      lists[i] = solved(q, rhs_of(dimmasks[i]));
      note(*lists[i], dimmasks[i]);
      if (lists[i]->kept.empty()) return;
    }
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == dimmasks.size()) {
        run_degree_major(q + 1);
        return;
      }
      for (auto& sol : lists[i]->kept) {
        img[dimmasks[i]] = sol;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
};

}

EnumerationResult enumerate_simplices(std::shared_ptr<const Adc> target, const EnumOptions& opts) {
  if (!target) throw StructuralError("enumeration needs a target complex");
  if (opts.dim < 0) throw StructuralError("enumeration dimension must be >= 0");
  if (opts.cap < 0) throw StructuralError("cap must be nonnegative");
  if (opts.workers < 1) throw StructuralError("workers must be >= 1");
  {
    auto bad = validate_complex(*target);
    if (!bad.empty()) throw StructuralError("invalid target complex: " + bad.front());
  }
  for (int i = 0; i < target->size(0); ++i)
    if (target->aug[i] != 1)
      throw StructuralError("enumeration requires every 0-element to augment to 1");

  EnumerationResult result;
  result.dim = opts.dim;
  result.cap = opts.cap;
  int m = opts.dim;
  int b0 = target->size(0);
  if (b0 == 0) return result;
  tuple_table(m); /* warm the shared cache before spawning workers */

  long long total = 1;
  for (int j = 0; j <= m; ++j) {
    total *= b0;
    if (total > (1LL << 40)) throw StructuralError("vertex assignment space too large");
  }
  int nw = std::min<long long>(opts.workers, total);
  std::vector<WorkerState> states(nw);
  const TupleTable& tt = tuple_table(m);
  std::vector<int> nonvertex;
  for (int mask : tt.order)
    if (tt.tuples[mask].size() >= 2) nonvertex.push_back(mask);

  auto work = [&](int w) {
    WorkerState& st = states[w];
    st.target = target.get();
    st.target_sp = target;
    st.m = m;
    st.cap = opts.cap;
    st.nondeg_only = opts.nondeg_only;
    st.masks = nonvertex;
    st.img.resize(1 << (m + 1));
    for (long long k = w; k < total; k += nw) {
      long long rest = k;
      for (int j = 0; j <= m; ++j) {
        st.img[1 << j] = chain_unit(0, static_cast<int>(rest % b0));
        rest /= b0;
      }
      if (opts.strategy == EnumStrategy::TupleMajor)
        st.run_tuple_major(0);
      else
        st.run_degree_major(1);
    }
  };
  if (nw == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < nw; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  std::set<std::string> offending;
  for (auto& st : states) {
    result.saturated = result.saturated && st.saturated;
    offending.insert(st.offending.begin(), st.offending.end());
    result.total_enumerated += st.dropped;
    for (auto& x : st.found) result.simplices.push_back(std::move(x));
  }
  result.total_enumerated += static_cast<long long>(result.simplices.size());
  result.offending_tuples.assign(offending.begin(), offending.end());
  std::vector<std::pair<std::string, size_t>> keys(result.simplices.size());
  for (size_t i = 0; i < result.simplices.size(); ++i) keys[i] = {canonical_string(result.simplices[i]), i};
  std::sort(keys.begin(), keys.end());
  std::vector<SimplexMap> sorted;
  sorted.reserve(result.simplices.size());
  for (auto& [k, i] : keys) sorted.push_back(std::move(result.simplices[i]));
  result.simplices = std::move(sorted);
  return result;
}

}
