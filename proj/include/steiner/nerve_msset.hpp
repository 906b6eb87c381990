#pragma once
/* Nerves packaged as marked simplicial sets: enumerate dimension by dimension,
   keep the nondegenerate simplices as cells, factor faces through normal forms. */
#include "steiner/cone.hpp"
#include "steiner/marked_sset.hpp"
#include "steiner/nerve.hpp"
#include <map>

namespace steiner {

struct NerveData {
  std::shared_ptr<const Adc> target;
  int dmax = 0;
  Int cap = 4;
  int workers = 1;
  bool saturated = true;
  std::vector<std::string> offending;            /* "dim d: [tuple]" spill reports */
  std::vector<int> total;                        /* all simplices per dimension */
  std::vector<std::vector<SimplexMap>> nondeg;   /* per dimension, canonical order */
  std::map<std::string, std::pair<int, int>> index; /* canonical string -> (dim, cell) */
  MSSet msset;                                   /* truncated at dmax */
};

NerveData nerve_msset(std::shared_ptr<const Adc> target, int dmax, const Int& cap, int workers,
                      EnumStrategy strategy = EnumStrategy::TupleMajor);

Gen locate(const NerveData& nd, const SimplexMap& x); /* normal form, then cell lookup */
const SimplexMap& cell_of(const NerveData& nd, int dim, int idx);

/* The canonical inclusion N(D) ⋆ point -> N(D ⋆ point). */
struct ComparisonData {
  std::shared_ptr<const Adc> front;  /* D */
  std::shared_ptr<const Adc> joined; /* D ⋆ point */
  ConeContext ctx;
  int dmax = 0;
  bool saturated = true;
  std::shared_ptr<NerveData> front_nerve; /* N(D), to dmax */
  MSSet point;
  std::shared_ptr<MSSet> small;  /* N(D) ⋆ point, trusted to dmax */
  std::shared_ptr<NerveData> big; /* N(D ⋆ point), to dmax+1 */
  MSSetMap cmp;                   /* *small -> big->msset */
};
ComparisonData comparison_data(std::shared_ptr<const Adc> front, int dmax, const Int& cap,
                               int workers);

/* Push a front-valued simplex through the left join family. */
SimplexMap inject_front(const ComparisonData& cd, const SimplexMap& x);

}
