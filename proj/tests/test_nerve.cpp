#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/json_io.hpp"
#include "steiner/nerve.hpp"

#include <cstdlib>
#include <memory>
#include <set>

using namespace steiner;

namespace {

EnumerationResult run_enum(std::shared_ptr<const Adc> t, int dim, Int cap = 4,
                           EnumStrategy st = EnumStrategy::TupleMajor, int workers = 1) {
  EnumOptions o;
  o.dim = dim;
  o.cap = std::move(cap);
  o.workers = workers;
  o.strategy = st;
  return enumerate_simplices(std::move(t), o);
}

int nondeg_count(const EnumerationResult& r) {
  int n = 0;
  for (auto& x : r.simplices)
    if (nondegenerate(x)) ++n;
  return n;
}

std::set<std::string> canon_set(const EnumerationResult& r) {
  std::set<std::string> s;
  for (auto& x : r.simplices) s.insert(canonical_string(x));
  return s;
}

/* Two parallel generators a -> b plus a boundaryless loop f; cap-sensitive. */
std::shared_ptr<const Adc> loop_target() {
  AdcBuilder b;
  b.name = "loopy";
  b.basis = {{"a", "b"}, {"e", "f"}};
  b.d[{1, "e"}] = {{"b", Int(1)}, {"a", Int(-1)}};
  b.aug = {{"a", Int(1)}, {"b", Int(1)}};
  return std::make_shared<Adc>(b.build());
}

/* Reversal conjugate: the m-simplex of the dual complex with mirrored tuples. */
SimplexMap op_simplex(std::shared_ptr<const Adc> dual_target, const SimplexMap& x) {
  SimplexMap y = make_simplex(std::move(dual_target), x.m);
  const TupleTable& tt = tuple_table(x.m);
  for (int mask = 1; mask < (1 << (x.m + 1)); ++mask) {
    std::vector<int> rt;
    for (auto it = tt.tuples[mask].rbegin(); it != tt.tuples[mask].rend(); ++it)
      rt.push_back(x.m - *it);
    y.img[mask] = x.img[mask_of_tuple(rt)];
    y.img[mask].degree = static_cast<int>(tt.tuples[mask].size()) - 1;
  }
  return y;
}

}  // namespace

TEST_CASE("nerve of the interval has the frozen counts") {
  auto t = std::make_shared<Adc>(standard_complex(1));
  EnumerationResult r0 = run_enum(t, 0);
  EnumerationResult r1 = run_enum(t, 1);
  EnumerationResult r2 = run_enum(t, 2);
  CHECK(r0.simplices.size() == 2);
  CHECK(r1.simplices.size() == 3);
  CHECK(nondeg_count(r1) == 1);
  CHECK(r2.simplices.size() == 4);
  CHECK(nondeg_count(r2) == 0);
  CHECK(r0.saturated);
  CHECK(r1.saturated);
  CHECK(r2.saturated);
  CHECK(r1.offending_tuples.empty());
  for (auto& x : r1.simplices) CHECK(!validate_directed(x));

  /* Marked = vanishing top image; both degenerate edges, never vertices. */
  int marked1 = 0;
  for (auto& x : r1.simplices) {
    CHECK(simplex_is_marked(x) == !nondegenerate(x));
    if (simplex_is_marked(x)) ++marked1;
  }
  CHECK(marked1 == 2);
  for (auto& x : r0.simplices) CHECK(!simplex_is_marked(x));
  for (auto& x : r2.simplices) CHECK(simplex_is_marked(x));
}

TEST_CASE("both strategies produce identical results") {
  auto tri = std::make_shared<Adc>(standard_complex(2));
  auto cone = std::make_shared<Adc>(join_complexes(standard_complex(1), standard_complex(0)));
  for (auto& t : {tri, cone})
    for (int d = 0; d <= 3; ++d) {
      EnumerationResult a = run_enum(t, d, 4, EnumStrategy::TupleMajor);
      EnumerationResult b = run_enum(t, d, 4, EnumStrategy::DegreeMajor);
      CHECK(a.saturated == b.saturated);
      CHECK(a.offending_tuples == b.offending_tuples);
      REQUIRE(a.simplices.size() == b.simplices.size());
      for (size_t i = 0; i < a.simplices.size(); ++i) CHECK(a.simplices[i] == b.simplices[i]);
    }
}

TEST_CASE("worker count never changes the result") {
  auto tri = std::make_shared<Adc>(standard_complex(2));
  for (int d = 1; d <= 3; ++d) {
    EnumerationResult one = run_enum(tri, d, 4, EnumStrategy::TupleMajor, 1);
    for (int w : {2, 5}) {
      EnumerationResult many = run_enum(tri, d, 4, EnumStrategy::TupleMajor, w);
      REQUIRE(many.simplices.size() == one.simplices.size());
      for (size_t i = 0; i < one.simplices.size(); ++i) CHECK(many.simplices[i] == one.simplices[i]);
      CHECK(many.saturated == one.saturated);
    }
  }
  EnumerationResult loopy = run_enum(loop_target(), 1, 4, EnumStrategy::TupleMajor, 3);
  CHECK(!loopy.saturated);
  CHECK(loopy.simplices.size() == 15);
}

TEST_CASE("enumerations are closed under faces and degeneracies") {
  auto tri = std::make_shared<Adc>(standard_complex(2));
  std::vector<EnumerationResult> levels;
  for (int d = 0; d <= 3; ++d) levels.push_back(run_enum(tri, d));
  std::vector<std::set<std::string>> seen;
  for (auto& r : levels) seen.push_back(canon_set(r));
  for (int d = 0; d <= 3; ++d)
    for (auto& x : levels[d].simplices) {
      CHECK(!validate_directed(x));
      for (int j = 0; j <= d; ++j) {
        CHECK(x.img[1 << j].terms.size() == 1);
        CHECK(x.img[1 << j].terms[0].coef == 1);
      }
      if (d >= 1)
        for (int i = 0; i <= d; ++i) CHECK(seen[d - 1].count(canonical_string(face(x, i))) == 1);
      if (d < 3)
        for (int i = 0; i <= d; ++i) CHECK(seen[d + 1].count(canonical_string(degeneracy(x, i))) == 1);
    }
}

TEST_CASE("a boundaryless loop spills past every cap") {
  auto t = loop_target();
  EnumerationResult r = run_enum(t, 1, 4);
  CHECK(r.simplices.size() == 15);
  CHECK(nondeg_count(r) == 13);
  CHECK(!r.saturated);
  REQUIRE(r.offending_tuples.size() == 1);
  CHECK(r.offending_tuples[0] == "[0,1]");

  EnumerationResult wide = run_enum(t, 1, 9);
  CHECK(wide.simplices.size() == 30);
  CHECK(!wide.saturated);

  /* cap 0 keeps only coefficientless fills: e itself is out of reach. */
  EnumerationResult zero = run_enum(t, 1, 0);
  CHECK(zero.simplices.size() == 2);
  CHECK(!zero.saturated);
}

TEST_CASE("boundary solving is exact over small boxes") {
  auto t = loop_target();
  Chain rhs = sub(chain_unit(0, t->idx_of(0, "b")), chain_unit(0, t->idx_of(0, "a")));
  std::vector<Chain> sols = solve_boundary(*t, 1, rhs, 4);
  CHECK(sols.size() == 5);
  for (auto& c : sols) {
    CHECK(t->boundary(c) == rhs);
    CHECK(coef_of(c, t->idx_of(1, "e")) == 1);
    CHECK(nonneg(c));
  }
  CHECK(solve_boundary(*t, 1, negate(rhs), 4).empty());

  /* Above the top dimension only the zero chain can solve the zero problem. */
  std::vector<Chain> high = solve_boundary(*t, 3, Chain{2, {}}, 4);
  REQUIRE(high.size() == 1);
  CHECK(high[0].is_zero());
  CHECK(solve_boundary(*t, 2, chain_unit(1, 0), 4).empty());
  CHECK_THROWS_AS((void)solve_boundary(*t, 0, Chain{-1, {}}, 4), StructuralError);
}

TEST_CASE("default cap follows the environment") {
  unsetenv("STEINER_DEFAULT_CAP");
  CHECK(default_cap() == 4);
  setenv("STEINER_DEFAULT_CAP", "7", 1);
  CHECK(default_cap() == 7);
  setenv("STEINER_DEFAULT_CAP", "0", 1);
  CHECK(default_cap() == 0);
  setenv("STEINER_DEFAULT_CAP", "-3", 1);
  CHECK_THROWS_AS((void)default_cap(), StructuralError);
  setenv("STEINER_DEFAULT_CAP", "pear", 1);
  CHECK_THROWS_AS((void)default_cap(), StructuralError);
  unsetenv("STEINER_DEFAULT_CAP");
  CHECK(default_cap() == 4);
}

TEST_CASE("duality mirrors the nerve") {
  auto a = std::make_shared<Adc>(standard_complex(2));
  auto b = std::make_shared<Adc>(alternating_dual(*a));
  for (int d = 0; d <= 3; ++d) {
    EnumerationResult na = run_enum(a, d);
    EnumerationResult nb = run_enum(b, d);
    REQUIRE(na.simplices.size() == nb.simplices.size());
    std::set<std::string> mirrored, found = canon_set(nb);
    for (auto& x : na.simplices) {
      SimplexMap y = op_simplex(b, x);
      CHECK(!validate_directed(y));
      CHECK(simplex_is_marked(y) == simplex_is_marked(x));
      CHECK(nondegenerate(y) == nondegenerate(x));
      mirrored.insert(canonical_string(y));
      /* Mirroring swaps the face order: d_i of the mirror is the mirror of d_{m-i}. */
      if (d >= 1)
        for (int i = 0; i <= d; ++i) CHECK(face(y, i) == op_simplex(b, face(x, d - i)));
    }
    CHECK(mirrored == found);
  }
}

TEST_CASE("enumeration results round-trip through json") {
  auto t = std::make_shared<Adc>(standard_complex(1));
  for (int d = 0; d <= 2; ++d) {
    EnumerationResult r = run_enum(t, d);
    EnumerationResult back = enumeration_from_json(t, enumeration_to_json(r));
    CHECK(back.dim == r.dim);
    CHECK(back.cap == r.cap);
    CHECK(back.saturated == r.saturated);
    CHECK(back.offending_tuples == r.offending_tuples);
    REQUIRE(back.simplices.size() == r.simplices.size());
    for (size_t i = 0; i < r.simplices.size(); ++i) CHECK(back.simplices[i] == r.simplices[i]);
  }
  auto lt = loop_target();
  EnumerationResult r = run_enum(lt, 1);
  json j = enumeration_to_json(r);
  CHECK(j["saturated"] == false);
  EnumerationResult back = enumeration_from_json(lt, j);
  CHECK(!back.saturated);
  CHECK(back.offending_tuples == r.offending_tuples);
}
