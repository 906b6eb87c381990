#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/json_io.hpp"

using namespace steiner;

namespace {

Chain unit_of(const Adc& a, int q, const std::string& nm) { return chain_unit(q, a.idx_of(q, nm)); }

std::vector<Adc> corpus() {
  std::vector<Adc> out;
  for (int m = 0; m <= 4; ++m) out.push_back(standard_complex(m));
  out.push_back(join_complexes(standard_complex(1), standard_complex(0)));
  out.push_back(join_complexes(standard_complex(1), standard_complex(1)));
  out.push_back(join_complexes(standard_complex(2), standard_complex(0)));
  out.push_back(join_complexes(standard_complex(0), standard_complex(2)));
  return out;
}

}

TEST_CASE("the triangle atom via the signed-support recursion") {
  Adc a = standard_complex(2);
  CellTable t = atom_table(a, 2, a.idx_of(2, "[0,1,2]"));
  REQUIRE(t.m == 2);
  CHECK(t.rows[2][0] == unit_of(a, 2, "[0,1,2]"));
  CHECK(t.rows[2][1] == unit_of(a, 2, "[0,1,2]"));
  CHECK(t.rows[1][0] == unit_of(a, 1, "[0,2]"));
  CHECK(t.rows[1][1] == add(unit_of(a, 1, "[1,2]"), unit_of(a, 1, "[0,1]")));
  CHECK(t.rows[0][0] == unit_of(a, 0, "[0]"));
  CHECK(t.rows[0][1] == unit_of(a, 0, "[2]"));
  CHECK_FALSE(validate_cell(a, t).has_value());
}

TEST_CASE("atoms of edges and vertices") {
  Adc a = standard_complex(1);
  CellTable e = atom_table(a, 1, a.idx_of(1, "[0,1]"));
  CHECK(e.rows[0][0] == unit_of(a, 0, "[0]"));
  CHECK(e.rows[0][1] == unit_of(a, 0, "[1]"));
  CellTable v = atom_table(a, 0, a.idx_of(0, "[1]"));
  REQUIRE(v.m == 0);
  CHECK(v.rows[0][0] == v.rows[0][1]);
  CHECK(v.rows[0][0] == unit_of(a, 0, "[1]"));
  CHECK_FALSE(validate_cell(a, v).has_value());
}

TEST_CASE("each violated cell condition is named") {
  Adc a = standard_complex(2);
  CellTable t = atom_table(a, 2, a.idx_of(2, "[0,1,2]"));

  CellTable bad3 = t;
  bad3.rows[0][0] = add(unit_of(a, 0, "[0]"), unit_of(a, 0, "[1]"));
  auto r3 = validate_cell(a, bad3);
  REQUIRE(r3.has_value());
  /* the doubled vertex first breaks the boundary compatibility, then the augmentation */
  CHECK(r3->find("boundary mismatch") != std::string::npos);

  CellTable bad3b = atom_table(a, 0, 0);
  bad3b.rows[0][0] = bad3b.rows[0][1] = add(unit_of(a, 0, "[0]"), unit_of(a, 0, "[1]"));
  auto r3b = validate_cell(a, bad3b);
  REQUIRE(r3b.has_value());
  CHECK(r3b->find("augment") != std::string::npos);

  CellTable bad4 = t;
  bad4.rows[1][0] = bad4.rows[1][1] = t.rows[1][1];
  bad4.rows[2][0] = Chain{2, {}};
  bad4.rows[2][1] = unit_of(a, 2, "[0,1,2]");
  auto r4 = validate_cell(a, bad4);
  REQUIRE(r4.has_value());

  CellTable bad1 = t;
  bad1.rows[1][0] = sub(Chain{1, {}}, unit_of(a, 1, "[0,2]"));
  auto r1 = validate_cell(a, bad1);
  REQUIRE(r1.has_value());
  CHECK(r1->find("nonnegative") != std::string::npos);
}

TEST_CASE("top rows must agree") {
  Adc a = standard_complex(1);
  CellTable t;
  t.m = 0;
  t.rows = {{unit_of(a, 0, "[0]"), unit_of(a, 0, "[1]")}};
  auto r = validate_cell(a, t);
  REQUIRE(r.has_value());
  CHECK(r->find("top rows differ") != std::string::npos);
}

TEST_CASE("every atom of every corpus complex is a cell") {
  for (const Adc& a : corpus()) {
    REQUIRE(strong_steiner(analyze_basis(a)));
    for (int q = 0; q <= a.top_dim(); ++q)
      for (int i = 0; i < a.size(q); ++i) {
        auto c = atom_cell(a, q, i);
        REQUIRE(c.has_value());
        CHECK_FALSE(validate_cell(a, *c).has_value());
      }
  }
}

TEST_CASE("join atoms with a nonempty right part end at the right factor") {
  std::vector<Adc> joins = {join_complexes(standard_complex(1), standard_complex(0)),
                            join_complexes(standard_complex(1), standard_complex(1)),
                            join_complexes(standard_complex(2), standard_complex(0))};
  for (const Adc& j : joins) {
    const JoinInfo& ji = join_info(j);
    for (int q = 1; q <= j.top_dim(); ++q)
      for (int i = 0; i < j.size(q); ++i) {
        if (ji.prov[q][i].fam == JoinInfo::Family::LeftEmpty) continue;
        CellTable t = atom_table(j, q, i);
        for (const Term& tm : t.rows[0][1].terms)
          CHECK(ji.prov[0][tm.idx].fam == JoinInfo::Family::EmptyRight);
      }
  }
}

TEST_CASE("truncation collapses the top row to the chosen side") {
  Adc a = standard_complex(2);
  CellTable t = atom_table(a, 2, a.idx_of(2, "[0,1,2]"));
  CellTable src = truncate_cell(t, 1, 0);
  REQUIRE(src.m == 1);
  CHECK(src.rows[1][0] == unit_of(a, 1, "[0,2]"));
  CHECK(src.rows[1][0] == src.rows[1][1]);
  CHECK_FALSE(validate_cell(a, src).has_value());
  CellTable tgt = truncate_cell(t, 1, 1);
  CHECK(tgt.rows[1][0] == add(unit_of(a, 1, "[1,2]"), unit_of(a, 1, "[0,1]")));
  CHECK_FALSE(validate_cell(a, tgt).has_value());
  CHECK_THROWS_AS((void)truncate_cell(t, 3, 0), StructuralError);
}

TEST_CASE("cell tables round trip through json") {
  Adc a = standard_complex(3);
  for (int q = 0; q <= 3; ++q)
    for (int i = 0; i < a.size(q); ++i) {
      CellTable t = atom_table(a, q, i);
      CHECK(cell_from_json(a, cell_to_json(a, t)) == t);
    }
}
