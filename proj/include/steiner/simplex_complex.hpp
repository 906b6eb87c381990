#pragma once
/* Chains on standard simplices: basis = strictly increasing vertex tuples,
   boundary = alternating face sum, every augmentation 1. */
#include "steiner/adc.hpp"

namespace steiner {

std::string tuple_name(const std::vector<int>& t); /* "[0,2,3]" */
std::vector<int> parse_tuple(const std::string& s);

Adc standard_complex(int m); /* m >= -1; m = -1 is the empty complex */

/* Monotone map utilities on value vectors f : [size-1] -> [n]. */
bool monotone(const std::vector<int>& f, int n);
std::vector<int> compose_values(const std::vector<int>& f, const std::vector<int>& g); /* f after g */
std::vector<int> coface_values(int i, int n);     /* d^i : [n-1] -> [n] */
std::vector<int> codegeneracy_values(int i, int n); /* s^i : [n+1] -> [n] */
std::vector<int> identity_values(int n);

/* Maps of augmented directed complexes, tabulated basis-to-chain in equal degree. */
struct AdcMap {
  std::shared_ptr<const Adc> src, dst;
  std::vector<std::vector<Chain>> img; /* [q][i] -> degree-q chain in dst */
  Chain apply(const Chain& c) const;
};
std::vector<std::string> validate_adc_map(const AdcMap& f); /* chain law, augmentation, positivity */

AdcMap simplicial_operator(int m, int n, const std::vector<int>& f); /* induced map of simplex chains */
AdcMap join_simplex_iso(int k, int l); /* join of standard complexes -> standard complex of dim k+l+1 */
AdcMap dual_simplex_iso(int m);        /* tuple reversal onto the alternating dual */

}
