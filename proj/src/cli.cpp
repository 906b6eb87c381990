#include "steiner/cli.hpp"
#include "steiner/json_io.hpp"
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

namespace steiner {

namespace {

json read_json(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

Adc read_valid_adc(const std::string& path) {
  Adc a = adc_from_json(read_json(path));
  std::vector<std::string> bad = validate_complex(a);
  if (!bad.empty()) {
    std::string msg = "complex '" + a.name + "' does not validate";
    for (const auto& b : bad) msg += "; " + b;
    throw StructuralError(msg);
  }
  return a;
}

struct Sink {
  std::string path;          /* empty = stdout */
  std::string format = "json";
  void write(const json& j, const std::string& text) const {
    std::string body = format == "json" ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write '" + path + "'");
    out << body;
  }
};

std::string yn(bool b) { return b ? "true" : "false"; }

std::string certificate_text(const Certificate& c, const std::vector<std::string>& violations) {
  std::ostringstream os;
  os << "complex: " << c.complex_name << "\n";
  os << "dmax: " << c.dmax << "  cap: " << c.cap << "  saturated: " << yn(c.saturated) << "\n";
  os << "pairs: " << c.pairs.size() << "\n";
  int last_d = -1, last_r = -1, last_p = -1;
  for (const CertPair& p : c.pairs) {
    if (p.dim != last_d || p.rank != last_r || p.index != last_p) {
      os << "  stratum d=" << p.dim << " r=" << p.rank << " p=" << p.index << "\n";
      last_d = p.dim, last_r = p.rank, last_p = p.index;
    }
    os << "    x#" << p.x_cell << " -> y#" << p.y_cell << "\n";
  }
  os << "complement per dimension:";
  for (int v : c.complement_total) os << " " << v;
  os << "\nsuspects per dimension:";
  for (int v : c.suspect_total) os << " " << v;
  os << "\nverdict: " << (violations.empty() ? (c.saturated ? "pass" : "pass up to cap") : "FAIL")
     << "\n";
  for (const auto& v : violations) os << "violation: " << v << "\n";
  return os.str();
}

int finish(const Sink& sink, const json& j, const std::string& text, bool failed, bool saturated,
           bool strict) {
  sink.write(j, text);
  if (failed) return 1;
  if (!saturated && strict) return 3;
  return 0;
}

}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact toolkit for augmented directed complexes, their nerves, and horn-filling certificates"};
  app.require_subcommand(1);

  long long cap_ll = to_int64_checked(default_cap(), "default cap");
  int dmax = 2, workers = 1, stage_n = 0, simplex_m = 0;
  bool strict = false;
  std::string in_a = "-", in_b = "-", out_path, format = "json";

  auto add_io = [&](CLI::App* c) {
    c->add_option("--out", out_path, "write the artifact here instead of stdout");
    c->add_option("--format", format, "artifact format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_knobs = [&](CLI::App* c) {
    c->add_option("--cap", cap_ll, "coefficient cap for the enumeration (env STEINER_DEFAULT_CAP)")
        ->check(CLI::PositiveNumber);
    c->add_option("--workers", workers, "worker threads; never changes output bytes")
        ->check(CLI::PositiveNumber);
    c->add_flag("--strict", strict, "exit 3 when the enumeration is not saturated");
  };

  CLI::App* adc = app.add_subcommand("adc", "augmented directed complex operations");
  adc->require_subcommand(1);
  CLI::App* adc_check = adc->add_subcommand("check", "validate and analyze a complex");
  adc_check->add_option("input", in_a, "complex JSON ('-' = stdin)");
  add_io(adc_check);
  CLI::App* adc_dual = adc->add_subcommand("dual", "alternating dual of a complex");
  adc_dual->add_option("input", in_a, "complex JSON ('-' = stdin)");
  add_io(adc_dual);
  CLI::App* adc_join = adc->add_subcommand("join", "join of two complexes");
  adc_join->add_option("left", in_a, "left complex JSON")->required();
  adc_join->add_option("right", in_b, "right complex JSON")->required();
  add_io(adc_join);

  CLI::App* simplex = app.add_subcommand("simplex", "emit the chains of a standard simplex");
  simplex->add_option("m", simplex_m, "simplex dimension")->required()->check(CLI::NonNegativeNumber);
  add_io(simplex);

  CLI::App* nerve = app.add_subcommand("nerve", "nerve enumeration");
  nerve->require_subcommand(1);
  CLI::App* nerve_enum = nerve->add_subcommand("enumerate", "enumerate nerve simplices by dimension");
  nerve_enum->add_option("input", in_a, "target complex JSON ('-' = stdin)");
  nerve_enum->add_option("--dmax", dmax, "top dimension")->check(CLI::NonNegativeNumber);
  add_knobs(nerve_enum);
  add_io(nerve_enum);

  CLI::App* cone = app.add_subcommand("cone", "operator calculus over a join with the point");
  cone->require_subcommand(1);
  CLI::App* cone_classify = cone->add_subcommand("classify", "classify a simplex of the coned nerve");
  cone_classify->add_option("front", in_a, "front complex JSON")->required();
  cone_classify->add_option("simplex", in_b, "simplex JSON ('-' = stdin)");
  add_io(cone_classify);

  CLI::App* certify = app.add_subcommand("certify", "build and verify filtration certificates");
  certify->require_subcommand(1);
  CLI::App* cert_cone = certify->add_subcommand("cone", "certificate for front ⋆ point");
  cert_cone->add_option("front", in_a, "front complex JSON ('-' = stdin)");
  cert_cone->add_option("--dmax", dmax, "top complement dimension")->check(CLI::NonNegativeNumber);
  add_knobs(cert_cone);
  add_io(cert_cone);
  CLI::App* cert_oriental = certify->add_subcommand("oriental", "certificate chain along the orientals");
  cert_oriental->add_option("n", stage_n, "final oriental stage")->required()->check(CLI::NonNegativeNumber);
  int oriental_dmax = -1;
  cert_oriental->add_option("--dmax", oriental_dmax, "top complement dimension (default n+1)");
  add_knobs(cert_oriental);
  add_io(cert_oriental);
  CLI::App* cert_dual = certify->add_subcommand("dual", "certificate for point ⋆ front via duality");
  cert_dual->add_option("front", in_a, "front complex JSON ('-' = stdin)");
  cert_dual->add_option("--dmax", dmax, "top complement dimension")->check(CLI::NonNegativeNumber);
  add_knobs(cert_dual);
  add_io(cert_dual);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Sink sink;
  Int cap(cap_ll);

  try {
    sink = Sink{out_path, format};

    if (adc_check->parsed()) {
      Adc a = read_valid_adc(in_a);
      BasisAnalysis b = analyze_basis(a);
      json j{{"name", a.name}, {"valid", true}, {"analysis", basis_analysis_to_json(b)},
             {"strong_steiner", strong_steiner(b)}};
      std::ostringstream os;
      os << "name: " << a.name << "\nvalid: true\nunital: " << yn(b.unital)
         << "\nstrongly loop-free: " << yn(b.strongly_loop_free) << "\natomic: " << yn(b.atomic)
         << "\nstrong Steiner: " << yn(strong_steiner(b)) << "\n";
      if (!b.strongly_loop_free) {
        os << "cycle witness:";
        for (const auto& w : b.order_witness) os << " " << w;
        os << "\n";
      }
      sink.write(j, os.str());
      return 0;
    }

    if (adc_dual->parsed()) {
      sink.write(adc_to_json(alternating_dual(read_valid_adc(in_a))), "");
      return 0;
    }

    if (adc_join->parsed()) {
      Adc l = read_valid_adc(in_a), r = read_valid_adc(in_b);
      sink.write(adc_to_json(join_complexes(l, r)), "");
      return 0;
    }

    if (simplex->parsed()) {
      sink.write(adc_to_json(standard_complex(simplex_m)), "");
      return 0;
    }

    if (nerve_enum->parsed()) {
      auto target = std::make_shared<Adc>(read_valid_adc(in_a));
      bool saturated = true;
      json per_dim = json::array();
      std::ostringstream os;
      os << "target: " << target->name << "\n";
      for (int d = 0; d <= dmax; ++d) {
        EnumOptions opts;
        opts.dim = d, opts.cap = cap, opts.workers = workers;
        EnumerationResult r = enumerate_simplices(target, opts);
        saturated = saturated && r.saturated;
        per_dim.push_back(enumeration_to_json(r));
        int nd = 0;
        for (const SimplexMap& x : r.simplices) nd += nondegenerate(x) ? 1 : 0;
        os << "dim " << d << ": " << r.simplices.size() << " simplices, " << nd
           << " nondegenerate" << (r.saturated ? "" : "  [cap hit]") << "\n";
      }
      os << "saturated: " << yn(saturated) << "\n";
      json j{{"target", target->name}, {"dmax", dmax},
             {"cap", to_int64_checked(cap, "cap")}, {"saturated", saturated}, {"dims", per_dim}};
      return finish(sink, j, os.str(), false, saturated, strict);
    }

    if (cone_classify->parsed()) {
      auto front = std::make_shared<Adc>(read_valid_adc(in_a));
      auto joined = std::make_shared<Adc>(join_complexes(*front, standard_complex(0)));
      ConeContext ctx = cone_context(joined);
      SimplexMap x = simplex_from_json(joined, read_json(in_b));
      if (auto bad = validate_directed(x))
        throw StructuralError("simplex does not validate: " + *bad);
      json j = classification_to_json(ctx, x);
      std::ostringstream os;
      os << "class: " << j["class"].get<std::string>() << "\nrank: " << j["rank"].get<int>()
         << "\ncorank: " << j["corank"].get<int>()
         << "\nsuspect index: " << j["suspect_index"].get<int>() << "\ndegenerate at:";
      for (const auto& v : j["degenerate_at"]) os << " " << v.get<int>();
      os << "\n";
      sink.write(j, os.str());
      return 0;
    }

    if (cert_cone->parsed()) {
      auto front = std::make_shared<Adc>(read_valid_adc(in_a));
      if (!strong_steiner(analyze_basis(*front)))
        throw StructuralError("front complex '" + front->name + "' is not strong Steiner");
      CertContext cc = certificate_context(front, dmax, cap, workers);
      Certificate cert = build_certificate(cc);
      std::vector<std::string> violations = verify_certificate(cc, cert);
      json j{{"certificate", certificate_to_json(cert)}, {"violations", violations}};
      return finish(sink, j, certificate_text(cert, violations), !violations.empty(),
                    cert.saturated, strict);
    }

    if (cert_oriental->parsed()) {
      int use_dmax = oriental_dmax >= 0 ? oriental_dmax : stage_n + 1;
      std::vector<OrientalStage> stages = certify_oriental(stage_n, use_dmax, cap, workers);
      bool failed = false, saturated = true;
      std::ostringstream os;
      for (const OrientalStage& st : stages) {
        failed = failed || !st.violations.empty();
        saturated = saturated && st.cert.saturated;
        os << "== stage " << st.k << " ==\n" << certificate_text(st.cert, st.violations);
      }
      if (stages.empty()) os << "no stages: the comparison map is an isomorphism\n";
      return finish(sink, oriental_stages_to_json(stages), os.str(), failed, saturated, strict);
    }

    if (cert_dual->parsed()) {
      auto front = std::make_shared<Adc>(read_valid_adc(in_a));
      if (!strong_steiner(analyze_basis(*front)))
        throw StructuralError("front complex '" + front->name + "' is not strong Steiner");
      if (!strong_steiner(analyze_basis(alternating_dual(*front))))
        throw StructuralError("the dual of '" + front->name +
                              "' is not strong Steiner; the duality route does not apply");
      DualReport rep = certify_dual(front, dmax, cap, workers);
      bool failed = !rep.violations.empty() || !rep.swap_iso_valid || !rep.transport_bijective ||
                    !rep.complements_agree;
      std::ostringstream os;
      os << certificate_text(rep.cert, rep.violations);
      os << "swap isomorphism: " << yn(rep.swap_iso_valid)
         << "\ntransport bijective: " << yn(rep.transport_bijective)
         << "\ncomplements agree: " << yn(rep.complements_agree) << "\n";
      for (const auto& m : rep.mismatches) os << "mismatch: " << m << "\n";
      return finish(sink, dual_report_to_json(rep), os.str(), failed, rep.cert.saturated, strict);
    }

    throw StructuralError("no subcommand selected");
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    json j{{"failure", std::string(e.what())}};
    sink.write(j, std::string("FAIL: ") + e.what() + "\n");
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}
