#include "gcpoly/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gcpoly/algspec.hpp"
#include "gcpoly/checker.hpp"
#include "gcpoly/parser.hpp"
#include "gcpoly/report.hpp"

namespace gcpoly::cli {

namespace {

struct AlgebraOptions {
  std::string file;
  std::string kind, group, tuple;
  int a = -1, b = -1;
  int conductor = -1;
  int budget = -1;
};

void add_algebra_options(CLI::App* cmd, AlgebraOptions& o) {
  cmd->add_option("--alg,--algebra", o.file, "algebra description file");
  cmd->add_option("--kind", o.kind, "mnf | mne | mab (inline algebra)");
  cmd->add_option("--group", o.group,
                  "grading group: Zn, ZnxZm..., trivial, table:<path>");
  cmd->add_option("--tuple", o.tuple, "grading tuple, comma separated names");
  cmd->add_option("--a", o.a, "even block size (mab)");
  cmd->add_option("--b", o.b, "odd block size (mab)");
  cmd->add_option("--conductor", o.conductor,
                  "work over Q(zeta_m) with this m");
  cmd->add_option("--grassmann-budget,--budget", o.budget,
                  "Grassmann generator budget");
}

GradedMatrixAlgebra build_algebra(const AlgebraOptions& o) {
  AlgebraSpec spec;
  if (!o.file.empty()) {
    spec = parse_algebra_file(o.file);
  } else {
    if (o.kind.empty())
      raise(ErrorCode::InvalidInput,
            "describe the algebra with --alg <file> or --kind plus "
            "--group/--tuple or --a/--b");
    std::ostringstream text;
    text << "kind = " << o.kind << "\n";
    if (!o.group.empty()) text << "group = " << o.group << "\n";
    if (!o.tuple.empty()) text << "tuple = " << o.tuple << "\n";
    if (o.a >= 0) text << "a = " << o.a << "\n";
    if (o.b >= 0) text << "b = " << o.b << "\n";
    spec = parse_algebra_text(text.str());
  }
  if (o.conductor >= 0) {
    if (o.conductor < 1)
      raise(ErrorCode::InvalidInput, "conductor must be at least 1");
    spec.conductor = o.conductor;
  }
  if (o.budget >= 0) spec.budget = o.budget;
  return spec.build();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graded identities, central polynomials and grading "
               "certificates for matrix algebras"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "print the JSON report");

  AlgebraOptions alg;
  std::string poly_text;
  bool ordinary = false, no_stability = false;
  unsigned seed = 12345;

  auto add_check_options = [&](CLI::App* cmd) {
    add_algebra_options(cmd, alg);
    cmd->add_option("poly,--poly", poly_text, "polynomial to test")->required();
    cmd->add_flag("--ordinary", ordinary,
                  "forget the grading (variables must be untagged)");
    cmd->add_flag("--no-stability", no_stability,
                  "skip the larger-budget stability probe");
    cmd->add_option("--seed", seed, "seed for the evidence scaling search");
    cmd->fallthrough();
  };

  CLI::App* ci = app.add_subcommand("check-identity",
                                    "is the polynomial a graded identity");
  add_check_options(ci);
  CLI::App* cc = app.add_subcommand(
      "check-central", "identity, graded central polynomial, or neither");
  add_check_options(cc);

  int torsion = -1;
  CLI::App* cl = app.add_subcommand(
      "classify",
      "does 'f g graded central implies f, g graded central' hold");
  add_algebra_options(cl, alg);
  cl->add_option("--torsion", torsion,
                 "order of the root-of-unity group of the field (default: "
                 "from the conductor)");
  cl->fallthrough();

  CLI::App* au = app.add_subcommand("aut-group",
                                    "tuple-permuting symmetries of the grading");
  add_algebra_options(au, alg);
  au->fallthrough();

  std::string diag_text;
  CLI::App* wi = app.add_subcommand(
      "witness", "cyclic witness polynomial for a diagonal matrix");
  add_algebra_options(wi, alg);
  wi->add_option("--diag", diag_text, "diagonal entries, comma separated")
      ->required();
  wi->fallthrough();

  std::string pairing = "grassmann";
  CLI::App* tr = app.add_subcommand(
      "transform", "crossing-scalar reweighting f -> f* for an envelope");
  tr->add_option("--pairing", pairing, "grassmann | pauli:<m>");
  tr->add_option("poly,--poly", poly_text, "multilinear polynomial")->required();
  tr->fallthrough();

  int env_a = 1, env_b = 1;
  CLI::App* en = app.add_subcommand(
      "envelope-check",
      "build the block algebra as a graded tensor square and verify it");
  en->add_option("--a", env_a, "even block size")->required();
  en->add_option("--b", env_b, "odd block size")->required();
  en->add_option("--grassmann-budget,--budget", alg.budget, "generator budget");
  en->add_option("--conductor", alg.conductor, "work over Q(zeta_m)");
  en->fallthrough();

  int maxdeg = 2;
  std::string coeffs_text = "1,-1";
  CLI::App* sc = app.add_subcommand(
      "primeness-scan",
      "search low-degree pairs for central products with non-central factors");
  add_algebra_options(sc, alg);
  sc->add_option("--maxdeg", maxdeg, "total degree bound per factor (1..3)");
  sc->add_option("--coeffs", coeffs_text, "allowed coefficients, comma separated");
  sc->fallthrough();

  std::vector<std::string> bindings;
  std::string at_text;
  CLI::App* ev = app.add_subcommand("eval", "evaluate at given matrices");
  add_algebra_options(ev, alg);
  ev->add_option("poly,--poly", poly_text, "polynomial to evaluate")->required();
  ev->add_option("--set", bindings, "binding like \"x1[g] = E12 + e1*E21\"");
  ev->add_option("--at", at_text,
                 "comma separated bindings like \"x1=E12,x2=E21\"");
  ev->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    report::json rep;
    int code = 0;

    if (ci->parsed() || cc->parsed()) {
      GradedMatrixAlgebra A = build_algebra(alg);
      GPolynomial f = parse_polynomial(poly_text, A.grading.group);
      CheckOptions opt;
      opt.ordinary = ordinary;
      opt.stability_probe = !no_stability;
      opt.seed = seed;
      Verdict v = check_graded_central(f, A, opt);
      rep = ci->parsed() ? report::identity_report(A, f, v, ordinary)
                         : report::central_report(A, f, v, ordinary);
    } else if (cl->parsed()) {
      GradedMatrixAlgebra A = build_algebra(alg);
      int r = torsion > 0 ? torsion : torsion_order(A.conductor);
      ClassifyResult res = classify_primeness(A, r);
      rep = report::classify_report(A, r, res);
      if (res.status == ClassifyStatus::Unsupported) code = 2;
    } else if (au->parsed()) {
      rep = report::aut_report(build_algebra(alg));
    } else if (wi->parsed()) {
      GradedMatrixAlgebra A = build_algebra(alg);
      std::vector<CycloScalar> p;
      for (const std::string& s : split_list(diag_text))
        p.push_back(parse_scalar(s));
      GPolynomial f = witness_polynomial(A.grading, p);
      std::map<GVar, RingMatrix> cyc;
      for (const GVar& v : f.variables())
        cyc.emplace(v, RingMatrix::scalar_unit(A.n, A.budget, v.index - 1,
                                               v.index % A.n));
      rep = report::witness_report(A, f, evaluate(f, A, cyc));
    } else if (tr->parsed()) {
      GroupPtr H;
      Bicharacter beta = [&]() {
        if (pairing == "grassmann") {
          H = FiniteGroup::cyclic_product({2}, true);
          return Bicharacter::grassmann_sign(H);
        }
        if (pairing.rfind("pauli:", 0) == 0) {
          int m = 0;
          try {
            m = std::stoi(pairing.substr(6));
          } catch (const std::exception&) {
            m = 0;
          }
          if (m < 2 || m > 8)
            raise(ErrorCode::InvalidInput, "pauli:<m> needs 2 <= m <= 8");
          H = FiniteGroup::cyclic_product({m, m});
          return Bicharacter::pauli(m, H);
        }
        raise(ErrorCode::InvalidInput,
              "pairing must be grassmann or pauli:<m>");
      }();
      GPolynomial f = parse_polynomial(poly_text, H);
      rep = report::transform_report(f, envelope_transform(f, beta), beta,
                                     pairing);
    } else if (en->parsed()) {
      int conductor = alg.conductor > 0 ? alg.conductor : 1;
      int budget = alg.budget >= 0 ? alg.budget : 6;
      GroupPtr z2 = FiniteGroup::cyclic_product({2}, true);
      std::vector<int> tuple((size_t)env_a, 0);
      tuple.insert(tuple.end(), (size_t)env_b, 1);
      GradedMatrixAlgebra base =
          GradedMatrixAlgebra::mnf(ElementaryGrading(z2, tuple), conductor);
      GradedMatrixAlgebra built = envelope(base, budget);
      rep = report::envelope_report(built, true);
    } else if (sc->parsed()) {
      GradedMatrixAlgebra A = build_algebra(alg);
      std::vector<CycloScalar> coeffs;
      for (const std::string& s : split_list(coeffs_text))
        coeffs.push_back(parse_scalar(s));
      ScanReport r = primeness_scan(A, maxdeg, coeffs);
      rep = report::scan_report(A, maxdeg, r);
      if (r.counterexample_count > 0) code = 1;
    } else if (ev->parsed()) {
      GradedMatrixAlgebra A = build_algebra(alg);
      GPolynomial f = parse_polynomial(poly_text, A.grading.group);
      // --at packs several bindings; commas inside a binding stay put because
      // a new binding always starts with a variable
      for (size_t i = 0, start = 0; i <= at_text.size(); ++i) {
        bool cut = i == at_text.size();
        if (!cut && at_text[i] == ',') {
          size_t j = i + 1;
          while (j < at_text.size() && std::isspace((unsigned char)at_text[j])) ++j;
          cut = j + 1 < at_text.size() && at_text[j] == 'x' &&
                std::isdigit((unsigned char)at_text[j + 1]);
        }
        if (cut) {
          std::string piece = at_text.substr(start, i - start);
          if (piece.find_first_not_of(" \t") != std::string::npos)
            bindings.push_back(piece);
          start = i + 1;
        }
      }
      // bindings are keyed by variable index; the polynomial fixes the tag
      const auto vars = f.variables();
      std::map<int, RingMatrix> by_index;
      for (const std::string& b : bindings) {
        auto [v, m] = parse_assignment(b, A);
        bool tagged = v.degree != A.grading.group->identity();
        if (tagged && std::find(vars.begin(), vars.end(), v) == vars.end())
          throw Error(ErrorCode::InvalidInput,
                      "binding for x" + std::to_string(v.index) +
                      " carries a tag the polynomial does not use");
        by_index.insert_or_assign(v.index, m);
      }
      std::map<GVar, RingMatrix> assign;
      for (const GVar& v : vars) {
        auto it = by_index.find(v.index);
        if (it != by_index.end()) assign.emplace(v, it->second);
      }
      rep = report::eval_report(A, f, assign, evaluate(f, A, assign));
    }

    if (json_out)
      out << rep.dump(2) << "\n";
    else
      out << report::prose(rep);
    return code;
  } catch (const Error& e) {
    if (json_out)
      out << report::error_report(e).dump(2) << "\n";
    err << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? 3 : 2;
  }
}

}  // namespace gcpoly::cli
