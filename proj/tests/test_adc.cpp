#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/json_io.hpp"

#include <set>

using namespace steiner;

namespace {

Adc two_cycle() {
  AdcBuilder b;
  b.name = "cycle2";
  b.basis = {{"u", "v"}, {"e", "f"}};
  b.d[{1, "e"}] = {{"v", Int(1)}, {"u", Int(-1)}};
  b.d[{1, "f"}] = {{"u", Int(1)}, {"v", Int(-1)}};
  b.aug = {{"u", Int(1)}, {"v", Int(1)}};
  return b.build();
}

Adc chain_with_names(const std::string& nm, const std::string& v0, const std::string& v1,
                     const std::string& e) {
  AdcBuilder b;
  b.name = nm;
  b.basis = {{v0, v1}, {e}};
  b.d[{1, e}] = {{v1, Int(1)}, {v0, Int(-1)}};
  b.aug = {{v0, Int(1)}, {v1, Int(1)}};
  return b.build();
}

Adc lone_point(const std::string& nm, const std::string& v) {
  AdcBuilder b;
  b.name = nm;
  b.basis = {{v}};
  b.aug = {{v, Int(1)}};
  return b.build();
}

std::vector<std::string> split_star(const std::string& s) {
  std::vector<std::string> parts;
  const std::string star = "⋆";
  size_t pos = 0;
  while (true) {
    size_t k = s.find(star, pos);
    if (k == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, k - pos));
    pos = k + star.size();
  }
  return parts;
}

/* Drop empty-symbol slots; with globally distinct operand names this is the
   canonical regrouping of iterated join basis names. */
std::string flatten(const std::string& nm) {
  std::string out;
  for (const auto& p : split_star(nm)) {
    if (p == "∅") continue;
    if (!out.empty()) out += "⋆";
    out += p;
  }
  return out;
}

struct FlatView {
  std::vector<std::set<std::string>> basis;
  std::map<std::string, std::map<std::string, Int>> diff;
  std::map<std::string, Int> aug;
};

FlatView flat_view(const Adc& a) {
  FlatView v;
  v.basis.resize(a.top_dim() + 1);
  for (int q = 0; q <= a.top_dim(); ++q)
    for (int i = 0; i < a.size(q); ++i) {
      std::string nm = flatten(a.name_of(q, i));
      CHECK(v.basis[q].insert(nm).second);
      if (q >= 1)
        for (const Term& t : a.diff[q][i].terms)
          v.diff[nm][flatten(a.name_of(q - 1, t.idx))] = t.coef;
      else
        v.aug[nm] = a.aug[i];
    }
  return v;
}

}

TEST_CASE("boundary squared and augmented boundary vanish on standard simplices") {
  for (int m = 0; m <= 5; ++m) CHECK(validate_complex(standard_complex(m)).empty());
}

TEST_CASE("zero augmentation passes validation and fails unitality") {
  AdcBuilder b;
  b.name = "flatpoint";
  b.basis = {{"v"}};
  b.aug = {{"v", Int(0)}};
  Adc a = b.build();
  CHECK(validate_complex(a).empty());
  CHECK_FALSE(analyze_basis(a).unital);
}

TEST_CASE("a corrupted triangle boundary is reported by name") {
  Adc a = standard_complex(2);
  a.diff[2][0] = make_chain(1, {Term{a.idx_of(1, "[0,1]"), Int(1)},
                                Term{a.idx_of(1, "[0,2]"), Int(1)},
                                Term{a.idx_of(1, "[1,2]"), Int(1)}});
  std::vector<std::string> bad = validate_complex(a);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].find("dd != 0") != std::string::npos);
  CHECK(bad[0].find("[0,1,2]") != std::string::npos);
}

TEST_CASE("standard simplices are strong Steiner") {
  for (int m = 0; m <= 5; ++m) {
    BasisAnalysis an = analyze_basis(standard_complex(m));
    CHECK(an.unital);
    CHECK(an.strongly_loop_free);
    CHECK(an.atomic);
    CHECK(strong_steiner(an));
    CHECK(an.order_witness.size() == (size_t(1) << (m + 1)) - 1);
  }
}

TEST_CASE("a two-cycle is caught with a cycle witness yet stays atomic") {
  BasisAnalysis an = analyze_basis(two_cycle());
  CHECK(an.unital);
  CHECK_FALSE(an.strongly_loop_free);
  CHECK(an.atomic); /* loop-freeness implies atomicity, never conversely */
  CHECK(an.order_witness.size() >= 2);
  std::set<std::string> allowed = {"0:u", "0:v", "1:e", "1:f"};
  for (const auto& w : an.order_witness) CHECK(allowed.count(w) == 1);
}

TEST_CASE("support split separates signs with disjoint supports") {
  Adc a = standard_complex(2);
  Chain c = make_chain(1, {Term{a.idx_of(1, "[1,2]"), Int(1)},
                           Term{a.idx_of(1, "[0,2]"), Int(-1)},
                           Term{a.idx_of(1, "[0,1]"), Int(1)}});
  auto [neg, pos] = support_split(c);
  CHECK(pos == make_chain(1, {Term{a.idx_of(1, "[1,2]"), Int(1)}, Term{a.idx_of(1, "[0,1]"), Int(1)}}));
  CHECK(neg == make_chain(1, {Term{a.idx_of(1, "[0,2]"), Int(1)}}));
  auto [zn, zp] = support_split(Chain{1, {}});
  CHECK(zn.is_zero());
  CHECK(zp.is_zero());
  Chain d = make_chain(0, {Term{0, Int(3)}, Term{1, Int(-2)}, Term{2, Int(1)}});
  auto [dn, dp] = support_split(d);
  CHECK(dp == make_chain(0, {Term{0, Int(3)}, Term{2, Int(1)}}));
  CHECK(dn == make_chain(0, {Term{1, Int(2)}}));
  CHECK(sub(dp, dn) == d);
}

TEST_CASE("the dual negates exactly the odd differentials and involutes") {
  Adc d1 = alternating_dual(standard_complex(1));
  CHECK(validate_complex(d1).empty());
  CHECK(coef_of(d1.boundary(1, 0), d1.idx_of(0, "[0]")) == 1);
  CHECK(coef_of(d1.boundary(1, 0), d1.idx_of(0, "[1]")) == -1);
  Adc d3 = standard_complex(3);
  CHECK(alternating_dual(alternating_dual(d3)) == d3);
  Adc d2 = alternating_dual(standard_complex(2));
  CHECK(validate_complex(d2).empty());
  CHECK(d2.boundary(2, 0) == standard_complex(2).boundary(2, 0)); /* even degree untouched */
  CHECK(d2.boundary(1, 0) == negate(standard_complex(2).boundary(1, 0)));
}

TEST_CASE("join of the interval with the point carries the graded Leibniz differential") {
  Adc j = join_complexes(standard_complex(1), standard_complex(0));
  CHECK(validate_complex(j).empty());
  REQUIRE(j.top_dim() == 2);
  CHECK(j.size(0) == 3);
  CHECK(j.size(1) == 3);
  CHECK(j.size(2) == 1);
  Chain b = j.boundary(2, j.idx_of(2, "[0,1]⋆[0]"));
  CHECK(coef_of(b, j.idx_of(1, "[1]⋆[0]")) == 1);
  CHECK(coef_of(b, j.idx_of(1, "[0]⋆[0]")) == -1);
  CHECK(coef_of(b, j.idx_of(1, "[0,1]⋆∅")) == 1);
  CHECK(strong_steiner(analyze_basis(j)));

  /* Degree-0 boundary picks up the augmentation on the empty symbol. */
  Adc p2 = join_complexes(standard_complex(0), standard_complex(0));
  Chain e = p2.boundary(1, p2.idx_of(1, "[0]⋆[0]"));
  CHECK(coef_of(e, p2.idx_of(0, "∅⋆[0]")) == 1);
  CHECK(coef_of(e, p2.idx_of(0, "[0]⋆∅")) == -1);
}

TEST_CASE("the comparison isomorphism matches the join of simplex chains with a bigger simplex") {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 1; ++l) {
      AdcMap iso = join_simplex_iso(k, l);
      CHECK(validate_adc_map(iso).empty());
      CHECK(iso.dst->name == "delta" + std::to_string(k + l + 1));
      /* Bijective on basis: every image is a unit chain, all distinct per dimension. */
      for (int q = 0; q <= iso.src->top_dim(); ++q) {
        std::set<int> seen;
        REQUIRE(iso.src->size(q) == iso.dst->size(q));
        for (int i = 0; i < iso.src->size(q); ++i) {
          REQUIRE(iso.img[q][i].terms.size() == 1);
          CHECK(iso.img[q][i].terms[0].coef == 1);
          CHECK(seen.insert(iso.img[q][i].terms[0].idx).second);
        }
      }
    }
}

TEST_CASE("joining the empty complex only renames") {
  Adc a = standard_complex(1);
  Adc j = join_complexes(a, standard_complex(-1));
  REQUIRE(j.top_dim() == a.top_dim());
  for (int q = 0; q <= a.top_dim(); ++q) {
    REQUIRE(j.size(q) == a.size(q));
    for (int i = 0; i < a.size(q); ++i) {
      CHECK(j.name_of(q, i) == a.name_of(q, i) + "⋆∅");
      if (q >= 1) CHECK(j.diff[q][i] == a.diff[q][i]);
    }
  }
  CHECK(j.aug == a.aug);
  Adc jl = join_complexes(standard_complex(-1), a);
  CHECK(jl.size(1) == 1);
  CHECK(jl.name_of(1, 0) == "∅⋆[0,1]");
}

TEST_CASE("join is associative up to the canonical regrouping of names") {
  Adc a = chain_with_names("A", "a0", "a1", "ae");
  Adc b = lone_point("B", "b0");
  Adc c = chain_with_names("C", "c0", "c1", "ce");
  Adc l = join_complexes(join_complexes(a, b), c);
  Adc r = join_complexes(a, join_complexes(b, c));
  CHECK(validate_complex(l).empty());
  CHECK(validate_complex(r).empty());
  FlatView fl = flat_view(l), fr = flat_view(r);
  CHECK(fl.basis == fr.basis);
  CHECK(fl.diff == fr.diff);
  CHECK(fl.aug == fr.aug);
  CHECK(strong_steiner(analyze_basis(l)));
}

TEST_CASE("complex and chain artifacts round trip through json") {
  for (int m = 0; m <= 3; ++m) {
    Adc a = standard_complex(m);
    CHECK(adc_from_json(adc_to_json(a)) == a);
  }
  Adc j = join_complexes(standard_complex(1), standard_complex(0));
  CHECK(adc_from_json(adc_to_json(j)) == j);
  Adc cyc = two_cycle();
  CHECK(adc_from_json(adc_to_json(cyc)) == cyc);

  Adc a2 = standard_complex(2);
  Chain c = make_chain(1, {Term{a2.idx_of(1, "[0,1]"), Int(3)}, Term{a2.idx_of(1, "[1,2]"), Int(-2)}});
  CHECK(chain_from_json(a2, chain_to_json(a2, c)) == c);
  CHECK(chain_from_json(a2, chain_to_json(a2, Chain{1, {}})) == Chain{1, {}});
}

TEST_CASE("coefficients beyond int64 fail loudly at the json edge") {
  Adc a = standard_complex(1);
  Chain huge = make_chain(0, {Term{0, Int(1) << 70}});
  CHECK_THROWS_AS((void)chain_to_json(a, huge), StructuralError);
  Chain fits = make_chain(0, {Term{0, (Int(1) << 62)}});
  CHECK(chain_from_json(a, chain_to_json(a, fits)) == fits);
}
