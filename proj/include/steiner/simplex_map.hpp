#pragma once
/* Simplices of a nerve: chain maps out of a standard simplex complex,
   tabulated on vertex-subset bitmasks. Formal (possibly nondirected) tables
   share the representation; validators distinguish the two notions. */
#include "steiner/simplex_complex.hpp"

namespace steiner {

struct TupleTable {
  int m = 0;
  std::vector<int> order;                           /* masks, dimension-major then tuple-lex */
  std::vector<int> rank_in_order;                   /* mask -> position in order */
  std::vector<std::vector<int>> tuples;             /* mask -> increasing tuple */
  std::vector<std::string> names;                   /* mask -> "[...]" */
  std::vector<std::vector<std::pair<int, int>>> bnd; /* mask -> [(face mask, sign)] */
};
const TupleTable& tuple_table(int m); /* cached, thread-safe, m >= 0 */

int mask_of_tuple(const std::vector<int>& t);
inline int full_mask(int m) { return (1 << (m + 1)) - 1; }

struct SimplexMap {
  int m = 0;
  std::shared_ptr<const Adc> target;
  std::vector<Chain> img; /* by mask; img[0] unused */
  const Chain& at(int mask) const { return img[mask]; }
};

SimplexMap make_simplex(std::shared_ptr<const Adc> target, int m); /* all-zero images */

std::optional<std::string> validate_directed(const SimplexMap& x); /* chain law + positivity + unit vertices */
std::optional<std::string> validate_formal(const SimplexMap& x);   /* chain law + one shared vertex weight */

bool operator==(const SimplexMap& a, const SimplexMap& b);
std::string canonical_string(const SimplexMap& x);

SimplexMap add(const SimplexMap& a, const SimplexMap& b);
SimplexMap sub(const SimplexMap& a, const SimplexMap& b);

/* Closed-formula simplicial action. */
SimplexMap face(const SimplexMap& x, int i);
SimplexMap degeneracy(const SimplexMap& x, int i);
SimplexMap face_pow(const SimplexMap& x, int j, int l);       /* d_j d_{j+1} ... d_{j+l-1} */
SimplexMap degeneracy_pow(const SimplexMap& x, int j, int l); /* s_{j+l-1} ... s_j */

/* Independent route: precompose with a chain-level simplicial operator. */
SimplexMap precompose(const SimplexMap& x, const AdcMap& op);

bool degenerate_at(const SimplexMap& x, int j); /* x == s_j d_j x */
bool nondegenerate(const SimplexMap& x);
/* Unique nondegenerate cell and monotone surjection presenting x. */
std::pair<SimplexMap, std::vector<int>> normalize(const SimplexMap& x);

}
