#include "steiner/chain.hpp"
#include "steiner/error.hpp"
#include <algorithm>

namespace steiner {

bool operator==(const Chain& a, const Chain& b) {
  return a.degree == b.degree && a.terms == b.terms;
}

Chain make_chain(int degree, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.idx < y.idx; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().idx == t.idx)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coef == 0; }), out.end());
  return Chain{degree, std::move(out)};
}

Chain chain_unit(int degree, int idx) { return Chain{degree, {Term{idx, Int(1)}}}; }

Chain add(const Chain& a, const Chain& b) {
  if (a.degree != b.degree) throw StructuralError("chain degree mismatch in add");
  Chain out{a.degree, {}};
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].idx < b.terms[j].idx)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].idx < a.terms[i].idx) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Int c = a.terms[i].coef + b.terms[j].coef;
      if (c != 0) out.terms.push_back(Term{a.terms[i].idx, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Chain negate(const Chain& a) {
  Chain out = a;
  for (auto& t : out.terms) t.coef = -t.coef;
  return out;
}

Chain sub(const Chain& a, const Chain& b) { return add(a, negate(b)); }

Chain scale(const Int& k, const Chain& a) {
  if (k == 0) return Chain{a.degree, {}};
  Chain out = a;
  for (auto& t : out.terms) t.coef *= k;
  return out;
}

Int coef_of(const Chain& a, int idx) {
  auto it = std::lower_bound(a.terms.begin(), a.terms.end(), idx,
                             [](const Term& t, int v) { return t.idx < v; });
  if (it != a.terms.end() && it->idx == idx) return it->coef;
  return Int(0);
}

bool nonneg(const Chain& a) {
  for (auto& t : a.terms)
    if (t.coef < 0) return false;
  return true;
}

std::pair<Chain, Chain> support_split(const Chain& c) {
  Chain neg{c.degree, {}}, pos{c.degree, {}};
  for (auto& t : c.terms) {
    if (t.coef > 0)
      pos.terms.push_back(t);
    else
      neg.terms.push_back(Term{t.idx, -t.coef});
  }
  return {neg, pos};
}

}
