#pragma once
/* Augmented directed chain complexes with a distinguished graded basis.
   The positivity submonoid is generated by the basis, so directedness of a
   chain is simply nonnegativity of its coordinates. */
#include "steiner/chain.hpp"
#include "steiner/error.hpp"
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace steiner {

/* Provenance of a join basis: every element is x*0, x*y or 0*y. */
struct JoinInfo {
  enum class Family : unsigned char { LeftEmpty, Pair, EmptyRight };
  struct Prov {
    Family fam;
    int left_dim = -1, left_idx = -1, right_dim = -1, right_idx = -1;
  };
  std::string left_name, right_name;
  std::vector<std::vector<Prov>> prov;           /* [dim][idx] */
  std::map<std::array<int, 2>, int> left_to_idx; /* (left dim, left idx) -> idx at same dim */
  std::map<std::array<int, 4>, int> pair_to_idx; /* (ld, li, rd, ri) -> idx at dim ld+rd+1 */
  std::map<std::array<int, 2>, int> right_to_idx;
};

struct Adc {
  std::string name;
  std::vector<std::vector<std::string>> basis;             /* per dim, sorted */
  std::vector<std::unordered_map<std::string, int>> index; /* name -> idx per dim */
  std::vector<std::vector<Chain>> diff;                    /* diff[q][i], degree q-1, for q >= 1 */
  std::vector<Int> aug;                                    /* per dim-0 basis element */
  std::shared_ptr<const JoinInfo> join;                    /* set when built by join_complexes */

  int top_dim() const { return static_cast<int>(basis.size()) - 1; }
  int size(int q) const { return (q >= 0 && q <= top_dim()) ? static_cast<int>(basis[q].size()) : 0; }
  int idx_of(int q, const std::string& nm) const;
  const std::string& name_of(int q, int i) const { return basis[q][i]; }
  Chain boundary(int q, int i) const; /* of basis element, q >= 1 */
  Chain boundary(const Chain& c) const;
  Int augment(const Chain& c) const; /* degree 0 */
};

/* Name-keyed construction; build() sorts the basis and resolves names. */
struct AdcBuilder {
  std::string name;
  std::vector<std::vector<std::string>> basis;
  std::map<std::pair<int, std::string>, std::vector<std::pair<std::string, Int>>> d;
  std::map<std::string, Int> aug;
  Adc build() const;
};

bool operator==(const Adc& a, const Adc& b);

/* Shape and chain laws: dd = 0, eps d = 0. Empty result means valid. */
std::vector<std::string> validate_complex(const Adc& a);

struct BasisAnalysis {
  bool unital = false;
  bool strongly_loop_free = false;
  bool atomic = false;
  /* Topological order of "dim:name" entries when loop-free, else a cycle in the
     natural preorder (consecutive entries related, last back to first). */
  std::vector<std::string> order_witness;
};
BasisAnalysis analyze_basis(const Adc& a);
inline bool strong_steiner(const BasisAnalysis& b) {
  return b.unital && b.strongly_loop_free && b.atomic;
}

/* Dual: same basis, differential negated in odd degrees. */
Adc alternating_dual(const Adc& a);

/* Join: basis families "x*0", "x*y", "0*y" with the usual graded Leibniz rule,
   where the boundary of a 0-element is its augmentation times the empty symbol. */
Adc join_complexes(const Adc& left, const Adc& right);
const JoinInfo& join_info(const Adc& a);

}
