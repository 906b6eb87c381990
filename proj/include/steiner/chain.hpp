#pragma once
/* Z-linear combinations of basis indices in one degree.
   Terms stay sorted by index and never carry a zero coefficient. */
#include "steiner/ints.hpp"
#include <utility>
#include <vector>

namespace steiner {

struct Term {
  int idx = 0;
  Int coef;
};
inline bool operator==(const Term& a, const Term& b) { return a.idx == b.idx && a.coef == b.coef; }

struct Chain {
  int degree = 0;
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
};

bool operator==(const Chain& a, const Chain& b);
inline bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

Chain make_chain(int degree, std::vector<Term> terms);  /* normalizes: sorts, merges, drops zeros */
Chain chain_unit(int degree, int idx);
Chain add(const Chain& a, const Chain& b);
Chain sub(const Chain& a, const Chain& b);
Chain negate(const Chain& a);
Chain scale(const Int& k, const Chain& a);
Int coef_of(const Chain& a, int idx);
bool nonneg(const Chain& a);

/* c = second - first with disjoint supports: returns {negative part, positive part}. */
std::pair<Chain, Chain> support_split(const Chain& c);

}
