#include "sylvsum/cli.hpp"

#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "sylvsum/double_sum.hpp"
#include "sylvsum/errors.hpp"
#include "sylvsum/json_io.hpp"
#include "sylvsum/subres.hpp"

namespace sylvsum::cli {
namespace {

struct HelpRequested {
  std::string text;
};

std::vector<Rational> rational_list(const std::string& flag, const std::string& text) {
  try {
    return parse_rational_list(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

struct RawOptions {
  std::string a;
  std::string b;
  std::string expect;
  std::string format = "json";
  std::string suite = "theorem";
};

void add_format(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_roots(CLI::App* sub, RawOptions& raw, bool with_b) {
  sub->add_option("--A", raw.a, "Comma-separated distinct rationals")->required();
  if (with_b) {
    sub->add_option("--B", raw.b, "Comma-separated distinct rationals")->required();
  }
}

}  // namespace

Command parse_args(std::span<const std::string> args) {
  CLI::App app{"Sylvester double sums, subresultants and their exact identities", "sylvsum"};
  app.require_subcommand(1);
  Command cmd;
  RawOptions raw;

  auto* from_roots = app.add_subcommand("from-roots", "Monic polynomial with the given roots");
  add_roots(from_roots, raw, false);
  add_format(from_roots, raw);

  auto* sylv = app.add_subcommand("sylv", "Double sum Sylv^{p,q}(A, B) by direct summation");
  auto* expected = app.add_subcommand("expected", "Closed form of Sylv^{p,q}(A, B) via subresultants");
  for (auto* sub : {sylv, expected}) {
    add_roots(sub, raw, true);
    sub->add_option("--p", cmd.p)->required();
    sub->add_option("--q", cmd.q)->required();
    sub->add_option("--expect", raw.expect, "Exit 1 unless the result equals this coefficient list");
    add_format(sub, raw);
  }

  auto* subres = app.add_subcommand("subres", "k-th subresultant of f = R(x, A), g = R(x, B)");
  add_roots(subres, raw, true);
  subres->add_option("--k", cmd.k)->required();
  subres->add_flag("--principal", cmd.principal, "Print the coefficient of x^k instead");
  subres->add_option("--expect", raw.expect, "Exit 1 unless the result equals this coefficient list");
  add_format(subres, raw);

  auto* cof = app.add_subcommand("cofactors", "Cofactors F_k, G_k and F_k f + G_k g");
  add_roots(cof, raw, true);
  cof->add_option("--k", cmd.k)->required();
  add_format(cof, raw);

  auto* verify = app.add_subcommand("verify", "Randomized exact verification sweep");
  verify->add_option("--m", cmd.m)->required();
  verify->add_option("--n", cmd.n)->required();
  verify->add_option("--seed", cmd.seed);
  verify->add_option("--trials", cmd.trials);
  verify->add_option("--bound", cmd.bound);
  verify->add_flag("--deterministic", cmd.deterministic, "Structured configurations instead of random ones");
  verify->add_option("--suite", raw.suite)->check(CLI::IsMember({"theorem", "specializations", "corollaries", "all"}));
  verify->add_option("--workers", cmd.workers, "Worker threads, 0 for all cores");
  add_format(verify, raw);

  auto* selftest = app.add_subcommand("selftest", "Worked examples and a fixed-seed sweep for m <= n <= 4");
  add_format(selftest, raw);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {from_roots, Subcommand::from_roots}, {sylv, Subcommand::sylv},       {subres, Subcommand::subres},
      {cof, Subcommand::cofactors},         {expected, Subcommand::expected}, {verify, Subcommand::verify},
      {selftest, Subcommand::selftest}};
  for (const auto& [sub, tag] : table) {
    if (sub->parsed()) {
      cmd.subcommand = tag;
    }
  }
  if (!raw.a.empty()) {
    cmd.a = rational_list("--A", raw.a);
  }
  if (!raw.b.empty()) {
    cmd.b = rational_list("--B", raw.b);
  }
  if (!raw.expect.empty()) {
    cmd.expect = rational_list("--expect", raw.expect);
  }
  cmd.format = raw.format == "text" ? Format::text : Format::json;
  cmd.suite = *parse_suite(raw.suite);
  return cmd;
}

namespace {

std::string render_poly(const Poly& poly, Format format) {
  if (format == Format::text) {
    return poly.to_string() + "\n";
  }
  Json out;
  out["poly"] = to_json(poly);
  return out.dump() + "\n";
}

std::string render_report(const CheckReport& report, Format format) {
  if (format == Format::json) {
    return to_json(report).dump() + "\n";
  }
  std::ostringstream os;
  os << to_string(report.status) << " " << report.identity << " m=" << report.m << " n=" << report.n
     << " p=" << report.p << " q=" << report.q << " k=" << report.k << " trial=" << report.trial;
  if (report.status == Status::fail && report.witness) {
    os << " lhs=" << report.witness->lhs.to_string() << " rhs=" << report.witness->rhs.to_string();
  }
  os << "\n";
  return os.str();
}

// Result of a sylv / expected / subres call, optionally checked against --expect.
ExecResult emit_poly(const Command& cmd, const std::string& identity, const Poly& result, const RootList& a,
                     const RootList& b) {
  ExecResult out;
  if (cmd.expect) {
    const Poly claimed(*cmd.expect);
    if (claimed != result) {
      CheckReport report{identity, static_cast<int>(a.size()), static_cast<int>(b.size()), cmd.p, cmd.q,
                         identity == "subres" ? cmd.k : cmd.p + cmd.q, 0, Status::fail,
                         Witness{result, claimed, a, b}};
      if (identity == "subres") {
        report.p = -1;
        report.q = -1;
      }
      out.out = render_report(report, cmd.format);
      out.err = "result does not match --expect\n";
      out.exit_code = kExitCheckFailed;
      return out;
    }
  }
  out.out = render_poly(result, cmd.format);
  return out;
}

std::vector<CheckReport> worked_examples() {
  const Rational one(1);
  const Poly f = poly_from_roots(std::vector<Rational>{1, 2});
  const Poly g = poly_from_roots(std::vector<Rational>{3, 4, 5});
  const RootList a(std::vector<Rational>{1, 2});
  const RootList b(std::vector<Rational>{3, 4, 5});
  const Poly sres1(std::vector<Rational>{-42, 18});

  std::vector<CheckReport> out;
  auto check = [&](std::string name, int m, int n, int p, int q, int k, const Poly& lhs, const Poly& rhs,
                   const RootList& ra, const RootList& rb) {
    CheckReport r{"selftest." + std::move(name), m, n, p, q, k, 0, Status::pass, std::nullopt};
    if (lhs != rhs) {
      r.status = Status::fail;
      r.witness = Witness{lhs, rhs, ra, rb};
    }
    out.push_back(std::move(r));
  };
  check("resultant", 2, 3, -1, -1, 0, Poly::constant(resultant(f, g)), Poly::constant(144), a, b);
  check("sres_1", 2, 3, -1, -1, 1, subresultant(f, g, 1), sres1, a, b);
  check("f_1", 2, 3, -1, -1, 1, cofactor_poly(f, g, 1, Cofactor::F), Poly(std::vector<Rational>{9, -1}), a, b);
  check("g_1", 2, 3, -1, -1, 1, cofactor_poly(f, g, 1, Cofactor::G), Poly::constant(one), a, b);
  check("sres_2", 2, 3, -1, -1, 2, subresultant(f, g, 2), f, a, b);
  check("f_2", 2, 3, -1, -1, 2, cofactor_poly(f, g, 2, Cofactor::F), Poly::constant(one), a, b);
  check("g_2", 2, 3, -1, -1, 2, cofactor_poly(f, g, 2, Cofactor::G), Poly(), a, b);
  check("sylv_0_1", 2, 3, 0, 1, 1, sylvester_double_sum(a, b, 0, 1), sres1, a, b);
  check("expected_0_1", 2, 3, 0, 1, 1, expected_sylv(a, b, 0, 1), sres1, a, b);
  check("sylv_1_1", 2, 3, 1, 1, 2, sylvester_double_sum(a, b, 1, 1), f * Rational(2), a, b);
  check("sylv_2_3", 2, 3, 2, 3, 5, sylvester_double_sum(a, b, 2, 3), f * g * Rational(144), a, b);

  const RootList a1(std::vector<Rational>{1});
  const RootList b1(std::vector<Rational>{3});
  const Poly f1 = poly_from_roots(a1.view());
  const Poly g1 = poly_from_roots(b1.view());
  const Rational res1(-2);
  check("corner_0_0", 1, 1, 0, 0, 0, sylvester_double_sum(a1, b1, 0, 0), Poly::constant(res1), a1, b1);
  check("corner_1_0", 1, 1, 1, 0, 1, sylvester_double_sum(a1, b1, 1, 0), f1, a1, b1);
  check("corner_0_1", 1, 1, 0, 1, 1, sylvester_double_sum(a1, b1, 0, 1), g1, a1, b1);
  check("corner_1_1", 1, 1, 1, 1, 2, sylvester_double_sum(a1, b1, 1, 1), f1 * g1 * res1, a1, b1);
  return out;
}

ExecResult run_selftest(const Command& cmd) {
  std::vector<CheckReport> reports = worked_examples();
  SweepOptions options;
  options.workers = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      auto more = verify_suite(Suite::all, m, n, 0, 3, options);
      std::move(more.begin(), more.end(), std::back_inserter(reports));
    }
  }
  ExecResult out;
  std::size_t failed = 0;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.status == Status::fail) {
      ++failed;
      out.out += render_report(r, cmd.format);
    } else if (r.status == Status::pass) {
      ++passed;
    }
  }
  if (cmd.format == Format::json) {
    Json summary;
    summary["selftest"] = failed == 0 ? "pass" : "fail";
    summary["passed"] = passed;
    summary["failed"] = failed;
    out.out += summary.dump() + "\n";
  } else {
    out.out += "selftest " + std::string(failed == 0 ? "pass" : "fail") + ": " + std::to_string(passed) +
               " passed, " + std::to_string(failed) + " failed\n";
  }
  out.exit_code = failed == 0 ? kExitOk : kExitCheckFailed;
  return out;
}

ExecResult dispatch(const Command& cmd) {
  switch (cmd.subcommand) {
    case Subcommand::from_roots: {
      const RootList roots(cmd.a);
      return {kExitOk, render_poly(poly_from_roots(roots.view()), cmd.format), ""};
    }
    case Subcommand::sylv: {
      const RootList a(cmd.a);
      const RootList b(cmd.b);
      return emit_poly(cmd, "sylv", sylvester_double_sum(a, b, cmd.p, cmd.q), a, b);
    }
    case Subcommand::expected: {
      const RootList a(cmd.a);
      const RootList b(cmd.b);
      return emit_poly(cmd, "expected", expected_sylv(a, b, cmd.p, cmd.q), a, b);
    }
    case Subcommand::subres: {
      const RootList a(cmd.a);
      const RootList b(cmd.b);
      const Poly f = poly_from_roots(a.view());
      const Poly g = poly_from_roots(b.view());
      const Poly sres = subresultant(f, g, cmd.k);
      if (cmd.principal) {
        const Rational value = sres.coeff(cmd.k);
        if (cmd.format == Format::text) {
          return {kExitOk, value.to_string() + "\n", ""};
        }
        Json out;
        out["value"] = value.to_string();
        return {kExitOk, out.dump() + "\n", ""};
      }
      return emit_poly(cmd, "subres", sres, a, b);
    }
    case Subcommand::cofactors: {
      const RootList a(cmd.a);
      const RootList b(cmd.b);
      const Poly f = poly_from_roots(a.view());
      const Poly g = poly_from_roots(b.view());
      const auto [F, G] = cofactors(f, g, cmd.k);
      const Poly recombined = F * f + G * g;
      if (cmd.format == Format::text) {
        return {kExitOk, "F = " + F.to_string() + "\nG = " + G.to_string() + "\nrecombined = " +
                             recombined.to_string() + "\n", ""};
      }
      Json out;
      out["F"] = to_json(F);
      out["G"] = to_json(G);
      out["recombined"] = to_json(recombined);
      return {kExitOk, out.dump() + "\n", ""};
    }
    case Subcommand::verify: {
      SweepOptions options;
      options.bound = cmd.bound;
      options.deterministic = cmd.deterministic;
      options.workers = cmd.workers;
      const auto reports = verify_suite(cmd.suite, cmd.m, cmd.n, cmd.seed, cmd.trials, options);
      ExecResult out;
      for (const auto& r : reports) {
        out.out += render_report(r, cmd.format);
      }
      out.exit_code = any_failed(reports) ? kExitCheckFailed : kExitOk;
      return out;
    }
    case Subcommand::selftest:
      return run_selftest(cmd);
  }
  return {kExitUsage, "", "unknown subcommand\n"};
}

}  // namespace

ExecResult execute(const Command& command) {
  try {
    return dispatch(command);
  } catch (const MathError& e) {
    return {kExitMath, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitMath, "", std::string("error: ") + e.what() + "\n"};
  }
}

ExecResult run(std::span<const std::string> args) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& help) {
    return {kExitOk, help.text, ""};
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  }
  return execute(cmd);
}

ExecResult run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return run(args);
}

}  // namespace sylvsum::cli
