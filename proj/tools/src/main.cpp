// Command line interface: load a root datum from JSON, then validate it,
// compute products, basis conversions, supports, and inverses, run the
// named verification suites, or answer orbit, dominant-representative,
// and Bruhat-order queries. Results print as text and can be written as
// JSON reports with --out.
//
// Exit codes: 0 success, 1 a verified identity failed, 2 unreadable input
// or configuration, 3 a mathematical domain error (point outside the Tits
// cone, non-dominant anchor, ...), 4 an iteration or length cap was hit.

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/expr.hpp"
#include "hecke/io.hpp"
#include "hecke/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace hecke;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::ConfigInvalid:
    case Errc::DiagonalNotTwo:
    case Errc::PositiveOffDiagonal:
    case Errc::AsymmetricZero:
    case Errc::PairingMismatch:
    case Errc::HeightNotOne:
    case Errc::MixedN:
      return 2;
    case Errc::LengthCapExceeded:
    case Errc::TitsConeUnknown:
      return 4;
    default:
      return 3;
  }
}

struct Output {
  std::string out_path;
  bool as_json = false;

  void deliver(json& j, const std::string& text) const {
    j["report_version"] = 1;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      check(f.good(), Errc::ParseError, "cannot open " + out_path);
      f << j.dump(2) << '\n';
    }
    if (as_json)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
  }
};

std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

json coweight_json(const Coweight& v) {
  return json(std::vector<long long>(v.begin(), v.end()));
}

json hw_json(const HWElt& h) {
  json out = json::array();
  for (const auto& [w, c] : h.terms())
    out.push_back({{"w", word_str(w.word())}, {"coeff", c.str()}});
  return out;
}

json bl_json(const BLElt& a) {
  json out = json::array();
  for (const auto& [k, c] : a.terms())
    out.push_back({{"w", word_str(k.w.word())},
                   {"z", coweight_json(k.z)},
                   {"coeff", c.str()}});
  return out;
}

int cmd_validate(const RootDatum& rd, const Output& out) {
  json j{{"command", "validate"},
         {"datum", rd.name()},
         {"generators", rd.n_gen()},
         {"rank", rd.rank()},
         {"denominator", rd.N()},
         {"affine", rd.affine()}};
  std::ostringstream os;
  os << "datum " << rd.name() << ": " << rd.n_gen() << " generators, rank "
     << rd.rank() << ", height denominator " << rd.N()
     << (rd.affine() ? ", affine" : "") << "\n";
  out.deliver(j, os.str());
  return 0;
}

int cmd_product(const AlgebraContext& ctx, const std::string& ea,
                const std::string& eb, const Output& out) {
  BLElt a = parse_expr(ctx.bl, ea);
  BLElt b = parse_expr(ctx.bl, eb);
  BLElt p = ctx.bl.mul(a, b);
  json j{{"command", "product"},
         {"datum", ctx.rd.name()},
         {"a", ea},
         {"b", eb},
         {"result", bl_json(p)}};
  out.deliver(j, p.str() + "\n");
  return 0;
}

int cmd_convert(const AlgebraContext& ctx, const std::string& expr,
                const std::string& to, const Output& out) {
  BLElt a = parse_expr(ctx.bl, expr);
  json j{{"command", "convert"},
         {"datum", ctx.rd.name()},
         {"elt", expr},
         {"to", to}};
  std::ostringstream os;
  if (to == "bl") {
    j["result"] = bl_json(a);
    os << a.str() << "\n";
  } else if (to == "im") {
    json terms = json::array();
    for (const auto& [lam, h] : ctx.bl.expand_in_T(a)) {
      terms.push_back({{"lambda", coweight_json(lam)}, {"coeff", hw_json(h)}});
      os << "(" << h.str() << ") * T_" << cw_str(lam) << "\n";
    }
    j["result"] = terms;
  } else if (to == "im-right") {
    json terms = json::array();
    for (const auto& [lam, h] : ctx.bl.expand_in_T_right(a)) {
      terms.push_back({{"lambda", coweight_json(lam)}, {"coeff", hw_json(h)}});
      os << "T_" << cw_str(lam) << " * (" << h.str() << ")\n";
    }
    j["result"] = terms;
  } else if (to == "tt") {
    json terms = json::array();
    for (const auto& [k, c] : ctx.bl.expand_in_TT(a)) {
      terms.push_back({{"lambda", coweight_json(k.z)},
                       {"w", word_str(k.w.word())},
                       {"coeff", c.str()}});
      os << "(" << c.str() << ") * T_{" << cw_str(k.z) << "."
         << k.w.str() << "}\n";
    }
    j["result"] = terms;
  } else {
    fail(Errc::ParseError, "unknown target basis: " + to);
  }
  out.deliver(j, os.str());
  return 0;
}

int cmd_support(const AlgebraContext& ctx, const std::string& expr,
                const std::string& side, const std::string& variant,
                const std::string& word_text, const std::string& lambda_text,
                int cap, const Output& out) {
  json j{{"command", "support"}, {"datum", ctx.rd.name()}};
  std::ostringstream os;
  std::vector<Coweight> pts;
  if (!variant.empty()) {
    check(!lambda_text.empty(), Errc::ParseError,
          "--variant needs --lambda (and usually --w)");
    SupportVariant v;
    if (variant == "plain")
      v = SupportVariant::Plain;
    else if (variant == "bar")
      v = SupportVariant::Bar;
    else if (variant == "tilde")
      v = SupportVariant::Tilde;
    else if (variant == "hat")
      v = SupportVariant::Hat;
    else
      fail(Errc::ParseError, "unknown support variant: " + variant);
    const Coweight lam = parse_coweight(lambda_text, ctx.rd.rank());
    const std::vector<int> word = parse_word(word_text, ctx.rd.n_gen());
    auto img = ctx.sup.word_image(v, word, std::set<Coweight>{lam});
    pts.assign(img.begin(), img.end());
    j["variant"] = variant;
    j["word"] = word_str(word);
    j["lambda"] = coweight_json(lam);
  } else {
    check(!expr.empty(), Errc::ParseError,
          "support needs --elt or --variant/--lambda");
    BLElt a = parse_expr(ctx.bl, expr);
    pts = side == "t" ? ctx.bl.supp_T(a) : ctx.bl.supp_Z(a);
    j["elt"] = expr;
    j["side"] = side;
  }
  json arr = json::array();
  for (const Coweight& p : pts) {
    arr.push_back(coweight_json(p));
    os << cw_str(p) << "\n";
  }
  j["points"] = arr;
  j["count"] = pts.size();
  out.deliver(j, os.str());
  (void)cap;
  return 0;
}

int cmd_inverse(const AlgebraContext& ctx, const std::string& word_text,
                const Output& out) {
  const std::vector<int> word = parse_word(word_text, ctx.rd.n_gen());
  WeylElt w = ctx.weyl.from_word(word);
  HWElt inv = ctx.hecke.t_inverse(w);
  json j{{"command", "inverse"},
         {"datum", ctx.rd.name()},
         {"w", word_str(w.word())},
         {"result", hw_json(inv)}};
  json ap = json::array();
  for (const auto& [u, c] : ctx.hecke.a_polys_for(w))
    ap.push_back({{"u", word_str(u.word())}, {"a", c.str()}});
  j["a_polynomials"] = ap;
  out.deliver(j, inv.str() + "\n");
  return 0;
}

int cmd_verify(const RootDatum& rd, const std::string& suite,
               const SuiteOptions& opt, const Output& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  json reports = json::array();
  std::ostringstream os;
  bool all_pass = true;
  for (const std::string& name : names) {
    SuiteReport rep = run_suite(name, rd, opt);
    all_pass = all_pass && rep.passed;
    size_t failed = 0;
    json checks = json::array();
    for (const SuiteCheck& c : rep.checks) {
      if (!c.pass) {
        ++failed;
        os << "FAIL " << rep.suite << "/" << c.name
           << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      }
      checks.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    os << (rep.passed ? "pass" : "FAIL") << " " << rep.suite << " on "
       << rep.datum << ": " << rep.checks.size() - failed << "/"
       << rep.checks.size() << " checks\n";
    reports.push_back({{"suite", rep.suite},
                       {"datum", rep.datum},
                       {"passed", rep.passed},
                       {"checks", checks}});
  }
  json j{{"command", "verify"},
         {"datum", rd.name()},
         {"passed", all_pass},
         {"options",
          {{"L", opt.L},
           {"cap", opt.cap},
           {"depth", opt.depth},
           {"samples", opt.samples},
           {"seed", opt.seed}}},
         {"reports", reports}};
  out.deliver(j, os.str());
  return all_pass ? 0 : 1;
}

int cmd_orbit(const AlgebraContext& ctx, const std::string& lambda_text,
              int L, const Output& out) {
  const Coweight lam = parse_coweight(lambda_text, ctx.rd.rank());
  check(ctx.rd.is_dominant(lam), Errc::NotDominant,
        "orbit enumeration starts from a dominant point");
  bool complete = false;
  auto pts = ctx.weyl.orbit_upto(lam, L, &complete);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& [p, wmin] : pts) {
    arr.push_back({{"point", coweight_json(p)}, {"w", word_str(wmin.word())}});
    os << cw_str(p) << "  w=" << wmin.str() << "\n";
  }
  os << (complete ? "orbit complete" : "orbit truncated") << " at length "
     << L << ", " << pts.size() << " points\n";
  json j{{"command", "orbit"},
         {"datum", ctx.rd.name()},
         {"lambda", coweight_json(lam)},
         {"L", L},
         {"complete", complete},
         {"points", arr}};
  out.deliver(j, os.str());
  return 0;
}

int cmd_dominant_rep(const AlgebraContext& ctx, const std::string& lambda_text,
                     long long cap, const Output& out) {
  const Coweight lam = parse_coweight(lambda_text, ctx.rd.rank());
  TitsConeAnswer t = ctx.weyl.in_tits_cone(lam, cap);
  json j{{"command", "dominant-rep"},
         {"datum", ctx.rd.name()},
         {"lambda", coweight_json(lam)},
         {"steps", t.steps}};
  std::ostringstream os;
  switch (t.kind) {
    case TitsConeAnswer::Kind::Inside:
      j["kind"] = "inside";
      j["rep"] = coweight_json(t.rep);
      j["w_min"] = word_str(t.w_min.word());
      os << "inside: rep " << cw_str(t.rep) << ", w_min " << t.w_min.str()
         << ", " << t.steps << " raising steps\n";
      out.deliver(j, os.str());
      return 0;
    case TitsConeAnswer::Kind::Outside:
      j["kind"] = "outside";
      os << "outside the Tits cone\n";
      out.deliver(j, os.str());
      return 3;
    case TitsConeAnswer::Kind::Unknown:
    default:
      j["kind"] = "unknown";
      os << "undecided after " << t.steps << " raising steps\n";
      out.deliver(j, os.str());
      return 4;
  }
}

int cmd_bruhat(const AlgebraContext& ctx, const std::string& u_text,
               const std::string& w_text, int cap, const Output& out) {
  WeylElt u = ctx.weyl.from_word(parse_word(u_text, ctx.rd.n_gen()));
  WeylElt w = ctx.weyl.from_word(parse_word(w_text, ctx.rd.n_gen()));
  const bool leq = ctx.weyl.bruhat_leq(u, w);
  json j{{"command", "bruhat"},
         {"datum", ctx.rd.name()},
         {"u", word_str(u.word())},
         {"w", word_str(w.word())},
         {"leq", leq}};
  std::ostringstream os;
  os << u.str() << (leq ? " <= " : " !<= ") << w.str() << "\n";
  if (w.length() <= cap) {
    json arr = json::array();
    auto low = ctx.weyl.bruhat_lower_interval(w, cap);
    for (const WeylElt& v : low) arr.push_back(word_str(v.word()));
    j["lower_interval"] = arr;
    os << "[e, " << w.str() << "] has " << low.size() << " elements\n";
  }
  out.deliver(j, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations in Iwahori-Hecke algebras of Kac-Moody root "
      "data"};
  app.require_subcommand(1);
  // Let global options (--datum, --out, --json) appear after a subcommand.
  app.fallthrough();

  std::string datum_path, out_path, suite = "all";
  std::string expr_a, expr_b, expr_elt, to = "im", side = "z";
  std::string variant, word_w, word_u, lambda_text;
  bool as_json = false;
  SuiteOptions opt;
  int orbit_L = 4;
  long long steps_cap = 4096;

  app.add_option("--datum", datum_path, "Root datum JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "Write a JSON report to this path");
  app.add_flag("--json", as_json, "Print the JSON report to stdout");

  CLI::App* validate = app.add_subcommand("validate", "Check a root datum");

  CLI::App* compute = app.add_subcommand("compute", "Evaluate expressions");
  compute->require_subcommand(1);
  CLI::App* product = compute->add_subcommand("product", "Multiply a and b");
  product->add_option("--a", expr_a, "Left factor")->required();
  product->add_option("--b", expr_b, "Right factor")->required();
  CLI::App* convert =
      compute->add_subcommand("convert", "Rewrite in another basis");
  convert->add_option("--elt", expr_elt, "Element expression")->required();
  convert->add_option("--to", to, "Target basis: bl, im, im-right, tt");
  CLI::App* support = compute->add_subcommand(
      "support", "Support of an element, or a support operator image");
  support->add_option("--elt", expr_elt, "Element expression");
  support->add_option("--to", side, "Side for --elt supports: z or t");
  support->add_option("--variant", variant,
                      "Support operator: plain, bar, tilde, hat");
  support->add_option("--w", word_w, "Generator word, e.g. \"0,1,0\"");
  support->add_option("--lambda", lambda_text, "Coweight, e.g. \"0,1,3\"");
  CLI::App* inverse =
      compute->add_subcommand("inverse", "Inverse of a standard generator "
                                         "product");
  inverse->add_option("--w", word_w, "Generator word")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite,
                     "Suite name or 'all'; names: " + [] {
                       std::string s;
                       for (const auto& n : hecke::suite_names()) {
                         if (!s.empty()) s += ", ";
                         s += n;
                       }
                       return s;
                     }());
  verify->add_option("--L", opt.L, "Orbit window length");
  verify->add_option("--cap", opt.cap, "Length cap for enumerations");
  verify->add_option("--depth", opt.depth, "Window depth below the anchor");
  verify->add_option("--samples", opt.samples, "Randomized check count");
  verify->add_option("--seed", opt.seed, "Random seed");

  CLI::App* orbit = app.add_subcommand("orbit", "Enumerate an orbit window");
  orbit->add_option("--lambda", lambda_text, "Dominant coweight")->required();
  orbit->add_option("--L", orbit_L, "Maximal representative length");

  CLI::App* dominant =
      app.add_subcommand("dominant-rep", "Dominant representative of a "
                                         "coweight");
  dominant->add_option("--lambda", lambda_text, "Coweight")->required();
  dominant->add_option("--cap", steps_cap, "Raising step cap");

  CLI::App* bruhat = app.add_subcommand("bruhat", "Bruhat order queries");
  bruhat->add_option("--u", word_u, "Lower word");
  bruhat->add_option("--w", word_w, "Upper word")->required();
  bruhat->add_option("--cap", opt.cap, "Interval enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RootDatum rd = hecke::load_datum_file(datum_path);
    Output out{out_path, as_json};
    if (app.got_subcommand(validate)) return cmd_validate(rd, out);
    AlgebraContext ctx(rd);
    if (app.got_subcommand(compute)) {
      if (compute->got_subcommand(product))
        return cmd_product(ctx, expr_a, expr_b, out);
      if (compute->got_subcommand(convert))
        return cmd_convert(ctx, expr_elt, to, out);
      if (compute->got_subcommand(support))
        return cmd_support(ctx, expr_elt, side, variant, word_w, lambda_text,
                           opt.cap, out);
      if (compute->got_subcommand(inverse))
        return cmd_inverse(ctx, word_w, out);
    }
    if (app.got_subcommand(verify)) return cmd_verify(rd, suite, opt, out);
    if (app.got_subcommand(orbit)) return cmd_orbit(ctx, lambda_text, orbit_L, out);
    if (app.got_subcommand(dominant))
      return cmd_dominant_rep(ctx, lambda_text, steps_cap, out);
    if (app.got_subcommand(bruhat))
      return cmd_bruhat(ctx, word_u, word_w, opt.cap, out);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const hecke::Error& e) {
    std::cerr << "error [" << hecke::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
