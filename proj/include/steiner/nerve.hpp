#pragma once
/* Nerve enumeration: all chain maps from a standard simplex complex into a target,
   found by solving bounded nonnegative boundary equations tuple by tuple. */
#include "steiner/simplex_map.hpp"

namespace steiner {

Int default_cap(); /* STEINER_DEFAULT_CAP when set, else 4 */

enum class EnumStrategy { TupleMajor, DegreeMajor };

struct EnumOptions {
  int dim = 0;
  Int cap = 4;
  int workers = 1;
  EnumStrategy strategy = EnumStrategy::TupleMajor;
  bool nondeg_only = false; /* drop degenerate simplices at emit time, keep the count */
};

struct EnumerationResult {
  int dim = 0;
  Int cap = 4;
  bool saturated = true;
  long long total_enumerated = 0;            /* includes simplices dropped by nondeg_only */
  std::vector<std::string> offending_tuples; /* tuples whose solves spill past the cap */
  std::vector<SimplexMap> simplices;         /* canonical order */
};

EnumerationResult enumerate_simplices(std::shared_ptr<const Adc> target, const EnumOptions& opts);

bool simplex_is_marked(const SimplexMap& x); /* top tuple image vanishes; 0-simplices unmarked */

/* All v >= 0 with coordinates <= box and sum_i v_i d(b_i) = rhs in degree q-1. */
std::vector<Chain> solve_boundary(const Adc& a, int q, const Chain& rhs, const Int& box);

}
