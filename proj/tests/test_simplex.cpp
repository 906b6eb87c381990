#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/simplex_complex.hpp"

using namespace steiner;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

AdcMap compose_maps(const AdcMap& g, const AdcMap& f) {
  AdcMap h;
  h.src = f.src;
  h.dst = g.dst;
  h.img.resize(f.src->top_dim() + 1);
  for (int q = 0; q <= f.src->top_dim(); ++q)
    for (int i = 0; i < f.src->size(q); ++i) h.img[q].push_back(g.apply(f.img[q][i]));
  return h;
}

Chain image_of(const AdcMap& f, int q, const std::string& nm) {
  return f.img[q][f.src->idx_of(q, nm)];
}

}

TEST_CASE("basis sizes are binomial and the boundary alternates") {
  Adc d0 = standard_complex(0);
  REQUIRE(d0.top_dim() == 0);
  CHECK(d0.size(0) == 1);
  CHECK(d0.augment(chain_unit(0, 0)) == 1);

  Adc d2 = standard_complex(2);
  CHECK(d2.size(0) == 3);
  CHECK(d2.size(1) == 3);
  CHECK(d2.size(2) == 1);
  Chain b = d2.boundary(2, d2.idx_of(2, "[0,1,2]"));
  CHECK(coef_of(b, d2.idx_of(1, "[1,2]")) == 1);
  CHECK(coef_of(b, d2.idx_of(1, "[0,2]")) == -1);
  CHECK(coef_of(b, d2.idx_of(1, "[0,1]")) == 1);

  Adc d4 = standard_complex(4);
  CHECK(d4.size(0) == 5);
  CHECK(d4.size(1) == 10);
  CHECK(d4.size(2) == 10);
  CHECK(d4.size(3) == 5);
  CHECK(d4.size(4) == 1);

  for (int m = 0; m <= 5; ++m) {
    Adc a = standard_complex(m);
    for (int q = 0; q <= m; ++q) CHECK(a.size(q) == binom(m + 1, q + 1));
  }
}

TEST_CASE("tuple names parse back") {
  std::vector<std::vector<int>> ts = {{0}, {2, 5}, {0, 1, 2, 7}};
  for (const auto& t : ts) CHECK(parse_tuple(tuple_name(t)) == t);
  CHECK(tuple_name({0, 2, 3}) == "[0,2,3]");
}

TEST_CASE("cofaces, codegeneracies, and identity act as expected") {
  AdcMap d1 = simplicial_operator(1, 2, coface_values(1, 2));
  CHECK(validate_adc_map(d1).empty());
  CHECK(image_of(d1, 1, "[0,1]") == chain_unit(1, d1.dst->idx_of(1, "[0,2]")));

  AdcMap s0 = simplicial_operator(2, 1, codegeneracy_values(0, 1));
  CHECK(validate_adc_map(s0).empty());
  CHECK(image_of(s0, 1, "[0,1]").is_zero());
  CHECK(image_of(s0, 1, "[1,2]") == chain_unit(1, s0.dst->idx_of(1, "[0,1]")));
  CHECK(image_of(s0, 2, "[0,1,2]").is_zero());

  AdcMap id2 = simplicial_operator(2, 2, identity_values(2));
  for (int q = 0; q <= 2; ++q)
    for (int i = 0; i < id2.src->size(q); ++i) CHECK(id2.img[q][i] == chain_unit(q, i));

  CHECK_THROWS_AS((void)simplicial_operator(1, 2, std::vector<int>{2, 0}), StructuralError);
}

TEST_CASE("operators compose functorially") {
  for (int m = 0; m <= 3; ++m) {
    for (int i = 0; i <= m + 1; ++i)
      for (int j = 0; j <= m + 2; ++j) {
        AdcMap di = simplicial_operator(m, m + 1, coface_values(i, m + 1));
        AdcMap dj = simplicial_operator(m + 1, m + 2, coface_values(j, m + 2));
        AdcMap both = compose_maps(dj, di);
        AdcMap direct =
            simplicial_operator(m, m + 2, compose_values(coface_values(j, m + 2), coface_values(i, m + 1)));
        CHECK(both.img == direct.img);
      }
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m + 1; ++j) {
        AdcMap dj = simplicial_operator(m, m + 1, coface_values(j, m + 1));
        AdcMap si = simplicial_operator(m + 1, m, codegeneracy_values(i, m));
        AdcMap both = compose_maps(si, dj);
        AdcMap direct =
            simplicial_operator(m, m, compose_values(codegeneracy_values(i, m), coface_values(j, m + 1)));
        CHECK(both.img == direct.img);
      }
  }
}

TEST_CASE("cosimplicial identities hold on induced maps") {
  for (int m = 0; m <= 4; ++m) {
    /* d^j d^i = d^i d^{j-1} for i < j, out of [m] */
    for (int i = 0; i <= m + 1; ++i)
      for (int j = i + 1; j <= m + 2; ++j) {
        AdcMap l = compose_maps(simplicial_operator(m + 1, m + 2, coface_values(j, m + 2)),
                                simplicial_operator(m, m + 1, coface_values(i, m + 1)));
        AdcMap r = compose_maps(simplicial_operator(m + 1, m + 2, coface_values(i, m + 2)),
                                simplicial_operator(m, m + 1, coface_values(j - 1, m + 1)));
        CHECK(l.img == r.img);
      }
    /* s^j s^i = s^i s^{j+1} for i <= j, out of [m+2] */
    for (int i = 0; i <= m; ++i)
      for (int j = i; j <= m; ++j) {
        AdcMap l = compose_maps(simplicial_operator(m + 1, m, codegeneracy_values(j, m)),
                                simplicial_operator(m + 2, m + 1, codegeneracy_values(i, m + 1)));
        AdcMap r = compose_maps(simplicial_operator(m + 1, m, codegeneracy_values(i, m)),
                                simplicial_operator(m + 2, m + 1, codegeneracy_values(j + 1, m + 1)));
        CHECK(l.img == r.img);
      }
  }
}

TEST_CASE("the join isomorphism shifts the right block") {
  AdcMap f = join_simplex_iso(1, 0);
  CHECK(validate_adc_map(f).empty());
  CHECK(image_of(f, 2, "[0,1]⋆[0]") == chain_unit(2, f.dst->idx_of(2, "[0,1,2]")));
  CHECK(image_of(f, 0, "[0]⋆∅") == chain_unit(0, f.dst->idx_of(0, "[0]")));
  CHECK(image_of(f, 0, "∅⋆[0]") == chain_unit(0, f.dst->idx_of(0, "[2]")));

  AdcMap g = join_simplex_iso(0, 0);
  CHECK(image_of(g, 1, "[0]⋆[0]") == chain_unit(1, g.dst->idx_of(1, "[0,1]")));
}

TEST_CASE("the join isomorphism is a degreewise bijection commuting with the structure") {
  for (int k = -1; k <= 5; ++k)
    for (int l = -1; k + 1 + l <= 5; ++l) {
      if (k + 1 + l < 0) continue;
      AdcMap f = join_simplex_iso(k, l);
      CHECK(validate_adc_map(f).empty());
      REQUIRE(f.src->top_dim() == f.dst->top_dim());
      for (int q = 0; q <= f.src->top_dim(); ++q) {
        REQUIRE(f.src->size(q) == f.dst->size(q));
        std::vector<char> hit(f.dst->size(q), 0);
        for (int i = 0; i < f.src->size(q); ++i) {
          REQUIRE(f.img[q][i].terms.size() == 1);
          CHECK(f.img[q][i].terms[0].coef == 1);
          hit[f.img[q][i].terms[0].idx] = 1;
        }
        for (char h : hit) CHECK(h == 1);
      }
    }
}

TEST_CASE("the duality isomorphism reverses tuples") {
  AdcMap f = dual_simplex_iso(2);
  CHECK(image_of(f, 1, "[0,1]") == chain_unit(1, f.dst->idx_of(1, "[1,2]")));
  CHECK(image_of(f, 2, "[0,1,2]") == chain_unit(2, f.dst->idx_of(2, "[0,1,2]")));
  CHECK(image_of(f, 0, "[0]") == chain_unit(0, f.dst->idx_of(0, "[2]")));
}

TEST_CASE("the duality isomorphism intertwines the two differentials") {
  for (int m = 0; m <= 5; ++m) {
    AdcMap f = dual_simplex_iso(m);
    CHECK(validate_adc_map(f).empty()); /* chain law against the dual differential */
    /* twice = identity on names */
    AdcMap f2 = dual_simplex_iso(m);
    for (int q = 0; q <= m; ++q)
      for (int i = 0; i < f.src->size(q); ++i) {
        REQUIRE(f.img[q][i].terms.size() == 1);
        int mid = f.img[q][i].terms[0].idx;
        std::string half = f.dst->name_of(q, mid);
        REQUIRE(f2.img[q][f2.src->idx_of(q, half)].terms.size() == 1);
        int back = f2.img[q][f2.src->idx_of(q, half)].terms[0].idx;
        CHECK(f2.dst->name_of(q, back) == f.src->name_of(q, i));
      }
  }
}
