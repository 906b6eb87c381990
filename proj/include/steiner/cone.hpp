#pragma once
/* Operator calculus on simplices valued in a join with a single point:
   cone, last factor, wedges, witnesses, interpolators, approximators, and the
   suspect classification that drives the filtration certificates. */
#include "steiner/simplex_map.hpp"

namespace steiner {

struct ConeContext {
  std::shared_ptr<const Adc> joined; /* D ⋆ point, join structure required */
  int terminus = -1;                 /* dim-0 index of the point's image */
  int right_zero = -1;               /* the point's own index inside the right factor */
};
ConeContext cone_context(std::shared_ptr<const Adc> joined);

bool hits_terminus(const ConeContext& c, const SimplexMap& x);
int rank(const ConeContext& c, const SimplexMap& x);    /* least r with x[r] = terminus */
bool lands_in_front(const ConeContext& c, const SimplexMap& x); /* image inside D ⋆ ∅ */

SimplexMap cone(const ConeContext& c, const SimplexMap& z); /* for front-valued z */
bool conical(const ConeContext& c, const SimplexMap& x);    /* x is the cone of its front face */

SimplexMap last_factor(const ConeContext& c, const SimplexMap& x);        /* γ, dimension = rank */
SimplexMap last_factor_direct(const ConeContext& c, const SimplexMap& x); /* coefficient extraction route */
SimplexMap normalized_last_factor(const ConeContext& c, const SimplexMap& x); /* β = s_r^corank γ */

SimplexMap wedge(const SimplexMap& x, const SimplexMap& xp, int i); /* needs d_i x = d_{i+1} x' */
SimplexMap iterated_wedge(const SimplexMap& u, const SimplexMap& v, int k, int l);

SimplexMap witness(const ConeContext& c, const SimplexMap& x, int j);      /* w_j, 0 < j <= rank */
SimplexMap interpolator(const ConeContext& c, const SimplexMap& x, int j); /* v_j, 0 <= j <= rank */
SimplexMap approximator(const ConeContext& c, const SimplexMap& x, int j); /* α_j, 0 <= j < rank */

int suspect_index(const ConeContext& c, const SimplexMap& x); /* least j with v_j x = x */

struct ConeClass {
  bool hits = false;
  int rank = -1, corank = -1;
  bool conical = false;
  int index = -1;
  bool suspect = false;
};
ConeClass classify(const ConeContext& c, const SimplexMap& x);

}
