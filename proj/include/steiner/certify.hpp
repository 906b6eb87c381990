#pragma once
/* Horn-filling certificates: pair every missing non-suspect simplex with the
   suspect witness one dimension up, order the pairs along the filtration
   (dimension ascending, rank descending, index ascending), and replay every
   face, marking, and census condition needed for the filling to go through. */
#include "steiner/nerve_msset.hpp"

namespace steiner {

struct CertPair {
  int dim = 0;     /* dimension d of x; y lives in dimension d+1 */
  int x_cell = -1; /* nondegenerate cell index at dimension d */
  int y_cell = -1; /* nondegenerate cell index at dimension d+1 */
  int rank = 0;    /* rank of x; y has rank+1 */
  int index = 0;   /* shared suspect index p >= 1 */
};
bool operator==(const CertPair& a, const CertPair& b);

struct Certificate {
  std::string complex_name; /* the front complex D */
  int dmax = 0;
  Int cap = 4;
  bool saturated = true;
  std::vector<CertPair> pairs;          /* strata order, x_cell ascending inside */
  std::vector<int> complement_total;    /* per dimension 0..dmax */
  std::vector<int> suspect_total;       /* per dimension 0..dmax+1 */
};

struct CertContext {
  std::shared_ptr<const Adc> front;  /* D, strong Steiner */
  std::shared_ptr<const Adc> joined; /* D ⋆ point */
  ConeContext ctx;
  int dmax = 0;
  std::shared_ptr<NerveData> nerve; /* N(D ⋆ point) to dmax+1 */
};
CertContext certificate_context(std::shared_ptr<const Adc> front, int dmax, const Int& cap,
                                int workers);

/* A simplex already present at the start: conical or missing the terminus. */
bool image_member(const CertContext& cc, const SimplexMap& x);
/* Nondegenerate cells that miss the terminus yet leave the front; always empty. */
std::vector<std::string> last_vertex_violations(const CertContext& cc);

Certificate build_certificate(const CertContext& cc);
std::vector<std::string> verify_certificate(const CertContext& cc, const Certificate& cert);

/* Mutants for the self-test; each must make verify_certificate report. */
Certificate mutate_pair_corruption(Certificate c);
Certificate mutate_stratum_reorder(Certificate c);
Certificate mutate_coverage_gap(Certificate c);
CertContext flip_marking(const CertContext& cc);

struct OrientalStage {
  int k = 0; /* front complex is the chains of the standard (k-1)-simplex */
  Certificate cert;
  std::vector<std::string> violations;
};
std::vector<OrientalStage> certify_oriental(int n, int dmax, const Int& cap, int workers);

/* Cone on the other side: λz has the point first, then a back-valued simplex. */
SimplexMap left_cone(std::shared_ptr<const Adc> joined, const SimplexMap& z);
bool left_member(std::shared_ptr<const Adc> joined, const SimplexMap& x);

struct DualReport {
  Certificate cert; /* certificate for the alternating dual of the front */
  std::vector<std::string> violations;
  bool swap_iso_valid = false;
  bool transport_bijective = false;
  bool complements_agree = false;
  std::vector<std::string> mismatches;
  std::vector<int> direct_total;  /* N(point ⋆ D) simplices per dimension 0..dmax */
  std::vector<int> direct_nondeg;
};
DualReport certify_dual(std::shared_ptr<const Adc> front, int dmax, const Int& cap, int workers);

}
