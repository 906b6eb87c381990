#include "steiner/json_io.hpp"

namespace steiner {

namespace {

long long want_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw StructuralError("expected an integer for " + what);
  return j.get<long long>();
}

int want_small(const json& j, const std::string& what) {
  long long v = want_int(j, what);
  if (v < -(1LL << 30) || v > (1LL << 30)) throw StructuralError(what + " out of range");
  return static_cast<int>(v);
}

json gen_to_json(const Gen& g) {
  return json{{"dim", g.dim}, {"cell", g.cell}, {"surj", g.surj}};
}

Gen gen_from_json(const json& j) {
  Gen g;
  g.dim = want_small(j.at("dim"), "generator dimension");
  g.cell = want_small(j.at("cell"), "generator cell");
  for (const auto& v : j.at("surj")) g.surj.push_back(want_small(v, "surjection value"));
  return g;
}

}

json chain_to_json(const Adc& a, const Chain& c) {
  json coeffs = json::object();
  for (const Term& t : c.terms)
    coeffs[a.name_of(c.degree, t.idx)] = to_int64_checked(t.coef, "chain coefficient");
  return json{{"degree", c.degree}, {"coeffs", coeffs}};
}

Chain chain_from_json(const Adc& a, const json& j) {
  int q = want_small(j.at("degree"), "chain degree");
  std::vector<Term> ts;
  for (const auto& [nm, v] : j.at("coeffs").items())
    ts.push_back(Term{a.idx_of(q, nm), Int(want_int(v, "coefficient of '" + nm + "'"))});
  return make_chain(q, std::move(ts));
}

json adc_to_json(const Adc& a) {
  json diff = json::object();
  for (int q = 1; q <= a.top_dim(); ++q)
    for (int i = 0; i < a.size(q); ++i) {
      const Chain& c = a.diff[q][i];
      if (c.is_zero()) continue;
      json row = json::object();
      for (const Term& t : c.terms)
        row[a.name_of(q - 1, t.idx)] = to_int64_checked(t.coef, "differential coefficient");
      diff[a.name_of(q, i)] = row;
    }
  json aug = json::object();
  for (int i = 0; i < a.size(0); ++i)
    aug[a.name_of(0, i)] = to_int64_checked(a.aug[i], "augmentation value");
  return json{{"name", a.name}, {"basis", a.basis}, {"differential", diff}, {"augmentation", aug}};
}

Adc adc_from_json(const json& j) {
  AdcBuilder b;
  b.name = j.at("name").get<std::string>();
  std::map<std::string, int> dim_of;
  int q = 0;
  for (const auto& row : j.at("basis")) {
    b.basis.emplace_back();
    for (const auto& nm : row) {
      std::string s = nm.get<std::string>();
      if (dim_of.count(s)) throw StructuralError("duplicate basis name '" + s + "'");
      dim_of[s] = q;
      b.basis.back().push_back(s);
    }
    ++q;
  }
  for (const auto& [nm, row] : j.at("differential").items()) {
    auto it = dim_of.find(nm);
    if (it == dim_of.end()) throw StructuralError("differential of unknown element '" + nm + "'");
    if (it->second < 1) throw StructuralError("differential given for dimension-0 element '" + nm + "'");
    auto& entry = b.d[{it->second, nm}];
    for (const auto& [fn, v] : row.items())
      entry.emplace_back(fn, Int(want_int(v, "differential coefficient")));
  }
  for (const auto& [nm, v] : j.at("augmentation").items())
    b.aug[nm] = Int(want_int(v, "augmentation value"));
  return b.build();
}

json cell_to_json(const Adc& a, const CellTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back(json::array({chain_to_json(a, r[0]), chain_to_json(a, r[1])}));
  return json{{"dim", t.m}, {"rows", rows}};
}

CellTable cell_from_json(const Adc& a, const json& j) {
  CellTable t;
  t.m = want_small(j.at("dim"), "cell dimension");
  for (const auto& r : j.at("rows")) {
    if (r.size() != 2) throw StructuralError("cell row needs exactly two chains");
    t.rows.push_back({chain_from_json(a, r.at(0)), chain_from_json(a, r.at(1))});
  }
  return t;
}

json simplex_to_json(const SimplexMap& x) {
  const TupleTable& tt = tuple_table(x.m);
  json images = json::object();
  for (int mask : tt.order)
    if (!x.img[mask].is_zero()) images[tt.names[mask]] = chain_to_json(*x.target, x.img[mask]);
  return json{{"dim", x.m}, {"target", x.target->name}, {"images", images}};
}

SimplexMap simplex_from_json(std::shared_ptr<const Adc> target, const json& j) {
  int m = want_small(j.at("dim"), "simplex dimension");
  if (m < 0) throw StructuralError("negative simplex dimension");
  if (j.at("target").get<std::string>() != target->name)
    throw StructuralError("simplex targets '" + j.at("target").get<std::string>() +
                          "', complex is '" + target->name + "'");
  SimplexMap x = make_simplex(target, m);
  for (const auto& [key, val] : j.at("images").items()) {
    std::vector<int> tp = parse_tuple(key);
    if (tp.empty() || tp.back() > m) throw StructuralError("tuple " + key + " not inside [" + std::to_string(m) + "]");
    Chain c = chain_from_json(*target, val);
    if (c.degree != static_cast<int>(tp.size()) - 1)
      throw StructuralError("image of " + key + " has the wrong degree");
    x.img[mask_of_tuple(tp)] = std::move(c);
  }
  return x;
}

json enumeration_to_json(const EnumerationResult& r) {
  json xs = json::array();
  for (const SimplexMap& x : r.simplices) xs.push_back(simplex_to_json(x));
  return json{{"dim", r.dim},
              {"cap", to_int64_checked(r.cap, "enumeration cap")},
              {"saturated", r.saturated},
              {"offending_tuples", r.offending_tuples},
              {"simplices", xs}};
}

EnumerationResult enumeration_from_json(std::shared_ptr<const Adc> target, const json& j) {
  EnumerationResult r;
  r.dim = want_small(j.at("dim"), "enumeration dimension");
  r.cap = Int(want_int(j.at("cap"), "enumeration cap"));
  r.saturated = j.at("saturated").get<bool>();
  for (const auto& t : j.at("offending_tuples")) r.offending_tuples.push_back(t.get<std::string>());
  for (const auto& x : j.at("simplices")) r.simplices.push_back(simplex_from_json(target, x));
  return r;
}

json classification_to_json(const ConeContext& c, const SimplexMap& x) {
  ConeClass k = classify(c, x);
  std::vector<int> deg;
  for (int i = 0; i < x.m; ++i)
    if (degenerate_at(x, i)) deg.push_back(i);
  std::string cls = "non-suspect";
  if (!k.hits) cls = "front";
  else if (k.conical) cls = "conical";
  else if (k.suspect && deg.empty()) cls = "suspect";
  return json{{"class", cls},
              {"rank", k.rank},
              {"corank", k.corank},
              {"suspect_index", k.index},
              {"degenerate_at", deg}};
}

json msset_to_json(const MSSet& s) {
  json dims = json::array();
  json marked = json::array();
  for (int q = 0; q <= s.stored_top(); ++q) {
    json row = json::array();
    for (int i = 0; i < s.counts[q]; ++i) {
      json cell = json::object();
      if (q < static_cast<int>(s.labels.size()) && i < static_cast<int>(s.labels[q].size()))
        cell["label"] = s.labels[q][i];
      json fs = json::array();
      if (q >= 1)
        for (const Gen& g : s.faces[q][i]) fs.push_back(gen_to_json(g));
      cell["faces"] = fs;
      row.push_back(cell);
    }
    dims.push_back(row);
    json mrow = json::array();
    for (int i = 0; i < s.counts[q]; ++i) mrow.push_back(static_cast<bool>(s.marked[q][i]));
    marked.push_back(mrow);
  }
  json j{{"name", s.name}, {"simplices", dims}, {"marked", marked}};
  j["truncation"] = s.truncation ? json(*s.truncation) : json(nullptr);
  return j;
}

MSSet msset_from_json(const json& j) {
  MSSet s;
  s.name = j.at("name").get<std::string>();
  if (!j.at("truncation").is_null()) s.truncation = want_small(j.at("truncation"), "truncation");
  const json& dims = j.at("simplices");
  const json& marked = j.at("marked");
  if (dims.size() != marked.size()) throw StructuralError("simplex and marking tables disagree");
  int top = static_cast<int>(dims.size()) - 1;
  if (top < 0) throw StructuralError("a simplicial set needs dimension 0");
  s.counts.resize(top + 1);
  s.faces.resize(top + 1);
  s.marked.resize(top + 1);
  s.labels.resize(top + 1);
  for (int q = 0; q <= top; ++q) {
    s.counts[q] = static_cast<int>(dims[q].size());
    if (marked[q].size() != dims[q].size()) throw StructuralError("marking row size mismatch");
    s.faces[q].resize(s.counts[q]);
    for (int i = 0; i < s.counts[q]; ++i) {
      const json& cell = dims[q][i];
      s.labels[q].push_back(cell.contains("label") ? cell["label"].get<std::string>() : "");
      s.marked[q].push_back(marked[q][i].get<bool>() ? 1 : 0);
      const json& fs = cell.at("faces");
      if (q == 0) {
        if (!fs.empty()) throw StructuralError("dimension-0 cell with faces");
        continue;
      }
      if (static_cast<int>(fs.size()) != q + 1) throw StructuralError("face row size mismatch");
      for (const auto& g : fs) s.faces[q][i].push_back(gen_from_json(g));
    }
  }
  if (auto bad = validate_msset(s)) throw StructuralError("simplicial set does not validate: " + *bad);
  return s;
}

json certificate_to_json(const Certificate& c) {
  json pairs = json::array();
  for (const CertPair& p : c.pairs)
    pairs.push_back(json{{"dim", p.dim},
                         {"x_cell", p.x_cell},
                         {"y_cell", p.y_cell},
                         {"rank", p.rank},
                         {"index", p.index}});
  return json{{"schema", 1},
              {"complex", c.complex_name},
              {"dmax", c.dmax},
              {"cap", to_int64_checked(c.cap, "certificate cap")},
              {"saturated", c.saturated},
              {"pairs", pairs},
              {"complement_total", c.complement_total},
              {"suspect_total", c.suspect_total}};
}

Certificate certificate_from_json(const json& j) {
  if (want_small(j.at("schema"), "certificate schema") != 1)
    throw StructuralError("unknown certificate schema version");
  Certificate c;
  c.complex_name = j.at("complex").get<std::string>();
  c.dmax = want_small(j.at("dmax"), "certificate dmax");
  c.cap = Int(want_int(j.at("cap"), "certificate cap"));
  c.saturated = j.at("saturated").get<bool>();
  for (const auto& p : j.at("pairs")) {
    CertPair cp;
    cp.dim = want_small(p.at("dim"), "pair dimension");
    cp.x_cell = want_small(p.at("x_cell"), "pair x_cell");
    cp.y_cell = want_small(p.at("y_cell"), "pair y_cell");
    cp.rank = want_small(p.at("rank"), "pair rank");
    cp.index = want_small(p.at("index"), "pair index");
    c.pairs.push_back(cp);
  }
  for (const auto& v : j.at("complement_total")) c.complement_total.push_back(want_small(v, "complement total"));
  for (const auto& v : j.at("suspect_total")) c.suspect_total.push_back(want_small(v, "suspect total"));
  return c;
}

json basis_analysis_to_json(const BasisAnalysis& b) {
  return json{{"unital", b.unital},
              {"strongly_loop_free", b.strongly_loop_free},
              {"atomic", b.atomic},
              {b.strongly_loop_free ? "order_witness" : "cycle_witness", b.order_witness}};
}

json dual_report_to_json(const DualReport& r) {
  return json{{"certificate", certificate_to_json(r.cert)},
              {"violations", r.violations},
              {"swap_iso_valid", r.swap_iso_valid},
              {"transport_bijective", r.transport_bijective},
              {"complements_agree", r.complements_agree},
              {"mismatches", r.mismatches},
              {"direct_total", r.direct_total},
              {"direct_nondeg", r.direct_nondeg}};
}

json oriental_stages_to_json(const std::vector<OrientalStage>& st) {
  json out = json::array();
  for (const OrientalStage& s : st)
    out.push_back(json{{"stage", s.k},
                       {"certificate", certificate_to_json(s.cert)},
                       {"violations", s.violations}});
  return out;
}

}
