#pragma once
/* Marked simplicial sets, presented by nondegenerate cells with face tables.
   A general simplex is a cell together with a monotone surjection; the
   simplicial action factors maps through the face tables. */
#include "steiner/simplex_complex.hpp"
#include <optional>

namespace steiner {

/* A (possibly degenerate) simplex: cell of dimension `dim`, surjection values
   surj : [q] -> [dim] where q+1 = surj.size(). Nondegenerate iff surj is the identity. */
struct Gen {
  int dim = 0;
  int cell = 0;
  std::vector<int> surj;
};
bool operator==(const Gen& a, const Gen& b);

struct MSSet {
  std::string name;
  std::optional<int> truncation;                /* trusted up to this dimension; nullopt = all stored */
  std::vector<int> counts;                      /* nondegenerate cells per dimension */
  std::vector<std::vector<std::vector<Gen>>> faces; /* faces[q][i][j], q >= 1 */
  std::vector<std::vector<char>> marked;        /* marked[q][i], q >= 1 (dim-0 never marked) */
  std::vector<std::vector<std::string>> labels;
  int stored_top() const { return static_cast<int>(counts.size()) - 1; }
};

Gen nondeg_gen(int q, int i);
Gen face_of_gen(const MSSet& s, const Gen& g, int i);
Gen act(const MSSet& s, const Gen& g, const std::vector<int>& f); /* precompose with monotone f */
bool gen_degenerate(const Gen& g);
bool gen_marked(const MSSet& s, const Gen& g); /* degenerate or carried by a marked cell */

std::optional<std::string> validate_msset(const MSSet& s); /* face identities within stored range */

/* Standard marked simplices: variant 0 plain, 1 adds the two outer marked faces, 2 also the k-th. */
MSSet standard_marked(int m, int k, int variant);
MSSet horn_marked(int m, int k, int variant); /* variant 0 plain, 1 primed */

MSSet join_marked(const MSSet& a, const MSSet& b);
MSSet op_marked(const MSSet& a);

/* Identity of a nondegenerate join cell. */
struct JoinCell {
  int kind = 0; /* 0 = left only, 1 = pair, 2 = right only */
  int ldim = -1, lidx = -1, rdim = -1, ridx = -1;
};
JoinCell join_cell_of(const MSSet& a, const MSSet& b, int dim, int idx);
int join_cell_index(const MSSet& a, const MSSet& b, const JoinCell& c);

/* Maps carrying nondegenerate cells to general simplices of the target. */
struct MSSetMap {
  const MSSet* src = nullptr;
  const MSSet* dst = nullptr;
  std::vector<std::vector<Gen>> image; /* [q][i] */
};
std::vector<std::string> validate_msset_map(const MSSetMap& f);

struct ComplementReport {
  bool injective = false;
  bool regular = false; /* markings preserved and reflected on nondegenerate cells */
  std::vector<std::pair<int, int>> complement; /* (dim, cell) of dst not hit, dim <= dmax */
  std::vector<std::string> problems;
};
ComplementReport regular_complement(const MSSetMap& f, int dmax);

}
