#include "qbern/cli.hpp"

#include "qbern/function_spec.hpp"
#include "qbern/qapprox.hpp"
#include "qbern/qeulermac.hpp"
#include "qbern/report.hpp"
#include "qbern/verify.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>

namespace qbern::cli {

namespace {

struct ContextArgs {
  std::string q;
  std::string mode = "auto";
  double eps = Tolerances{}.eps_abs;
  double tail_tol = Tolerances{}.tail_tol;
  long max_terms = Tolerances{}.series_max_terms;

  void attach(CLI::App& app) {
    app.add_option("--q", q, "deformation parameter, p/q (exact) or decimal (float)")->required();
    app.add_option("--mode", mode, "arithmetic mode")->check(CLI::IsMember({"auto", "exact", "float"}));
    app.add_option("--eps", eps, "absolute tolerance for float comparisons");
    app.add_option("--tail-tol", tail_tol, "series truncation tolerance");
    app.add_option("--max-terms", max_terms, "term budget for series, products and limits");
  }

  QContext make() const {
    Scalar qv = Scalar::parse(q);
    Mode m = (mode == "float" || !qv.is_exact()) ? Mode::floating : Mode::exact;
    return make_context(qv, Scalar(1), m, Tolerances{eps, max_terms, tail_tol});
  }
};

struct TableArgs {
  ContextArgs ctx;
  int max_n = 10;
  std::string format = "json";
};

struct SumPowArgs {
  ContextArgs ctx;
  int s = 1;
  long b = 1;
};

struct EmSumArgs {
  ContextArgs ctx;
  std::string fn;
  long a = 0;
  std::optional<long> b;
  bool infinite = false;
  std::optional<int> N;
  std::optional<std::string> variant;
};

struct ApproxArgs {
  ContextArgs ctx;
  std::string fn;
  int N = 0;
  int samples = 1024;
  int bound_grid = 1024;
  std::string format = "json";
};

struct VerifyArgs {
  ContextArgs ctx;
  int max_n = 12;
  std::optional<int> inject_fault;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
  const QContext ctx = args.ctx.make();
  const BernoulliTable table(args.max_n, ctx);
  if (args.format == "csv")
    out << table_csv(table);
  else
    out << envelope(ctx, "table", to_json(table)).dump(2) << '\n';
  return kOk;
}

int cmd_sumpow(const SumPowArgs& args, std::ostream& out) {
  const QContext ctx = args.ctx.make();
  json results = to_json(sum_of_powers(args.s, args.b, ctx));
  results["s"] = args.s;
  results["b"] = args.b;
  out << envelope(ctx, "sumpow", std::move(results)).dump(2) << '\n';
  return kOk;
}

int cmd_emsum(const EmSumArgs& args, std::ostream& out) {
  const QContext ctx = args.ctx.make();
  const FunctionRep f = parse_function_spec(args.fn, ctx);
  EmReport report;
  if (args.infinite) {
    EmVariant v = args.variant ? parse_em_variant(*args.variant) : EmVariant::shifted;
    report = em_infinite(f, args.a, args.N, ctx, v);
  } else {
    EmVariant v = args.variant ? parse_em_variant(*args.variant) : EmVariant::literal;
    report = em_finite(f, args.a, *args.b, args.N, ctx, v);
  }
  json results = to_json(report);
  results["fn"] = args.fn;
  results["a"] = args.a;
  results["b"] = args.infinite ? json("inf") : json(*args.b);
  out << envelope(ctx, "emsum", std::move(results)).dump(2) << '\n';
  return kOk;
}

int cmd_approx(const ApproxArgs& args, std::ostream& out) {
  const QContext ctx = args.ctx.make();
  const FunctionRep f = parse_function_spec(args.fn, ctx);
  ApproxReport report = approximate(f, args.N, ctx, ApproxOptions{args.samples, args.bound_grid});
  if (args.format == "csv") {
    out << samples_csv(report);
  } else {
    json results = to_json(report);
    results["fn"] = args.fn;
    out << envelope(ctx, "approx", std::move(results)).dump(2) << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const QContext ctx = args.ctx.make();
  BernoulliTable table(args.max_n, ctx);
  if (args.inject_fault) {
    int k = *args.inject_fault;
    if (k < 0 || k > args.max_n) throw DomainError("--inject-fault index outside the table");
    auto numbers = table.numbers();
    numbers[static_cast<std::size_t>(k)] += Scalar(1);
    table = BernoulliTable::from_numbers(std::move(numbers), ctx);
  }
  const auto results = run_identity_suite(table);
  out << "q = " << ctx.q().to_string() << " (" << to_string(ctx.mode()) << "), max_n = " << args.max_n;
  if (args.inject_fault) out << ", fault injected at beta_" << *args.inject_fault;
  out << '\n';
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(58) << r.name << std::right
        << std::setw(6) << r.cases << " cases";
    if (!r.passed) out << "  " << r.detail;
    out << '\n';
  }
  bool ok = all_passed(results);
  out << (ok ? "all identities hold\n" : "identity failures detected\n");
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-Bernoulli numerics: tables, Euler-Maclaurin reports, approximation, verification"};
  app.require_subcommand(1);

  TableArgs table;
  auto* t = app.add_subcommand("table", "q-Bernoulli numbers and polynomial rows");
  table.ctx.attach(*t);
  t->add_option("--max-n", table.max_n, "largest n")->check(CLI::NonNegativeNumber);
  t->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv"}));

  SumPowArgs sumpow;
  auto* s = app.add_subcommand("sumpow", "q-analogue of the sum of powers 0^s + ... + (b-1)^s");
  sumpow.ctx.attach(*s);
  s->add_option("--s", sumpow.s, "power s >= 1")->required()->check(CLI::PositiveNumber);
  s->add_option("--b", sumpow.b, "upper limit b >= 1")->required()->check(CLI::PositiveNumber);

  EmSumArgs emsum;
  auto* e = app.add_subcommand("emsum", "q-Euler-Maclaurin report against direct summation");
  emsum.ctx.attach(*e);
  e->add_option("--fn", emsum.fn, "poly:c0,c1,... | eqneg | Eq | monomial:s")->required();
  e->add_option("--a", emsum.a, "lower limit")->check(CLI::NonNegativeNumber);
  auto* b_opt = e->add_option("--b", emsum.b, "upper limit (exclusive)");
  auto* inf_opt = e->add_flag("--infinite", emsum.infinite, "sum to infinity");
  b_opt->excludes(inf_opt);
  e->add_option("--N", emsum.N, "number of correction terms")->check(CLI::PositiveNumber);
  e->add_option("--variant", emsum.variant, "term grouping")->check(CLI::IsMember({"literal", "shifted"}));

  ApproxArgs approx;
  auto* ap = app.add_subcommand("approx", "truncated q-Bernoulli series approximation on [0,1]");
  approx.ctx.attach(*ap);
  ap->add_option("--fn", approx.fn, "poly:c0,c1,... | eqneg | Eq | monomial:s")->required();
  ap->add_option("--N", approx.N, "truncation order")->required()->check(CLI::NonNegativeNumber);
  ap->add_option("--samples", approx.samples, "sample points on [0,1]")->check(CLI::PositiveNumber);
  ap->add_option("--bound-grid", approx.bound_grid, "grid for the remainder-bound sups")->check(CLI::PositiveNumber);
  ap->add_option("--format", approx.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the identity suite");
  verify.ctx.attach(*v);
  v->add_option("--max-n", verify.max_n, "largest order checked")->check(CLI::NonNegativeNumber);
  v->add_option("--inject-fault", verify.inject_fault, "negative control: add 1 to beta_K before checking");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& pe) {
    err << "usage error: " << pe.what() << '\n';
    return kUsage;
  }

  try {
    if (t->parsed()) return cmd_table(table, out);
    if (s->parsed()) return cmd_sumpow(sumpow, out);
    if (e->parsed()) {
      if (!emsum.infinite && !emsum.b) {
        err << "usage error: emsum needs --b or --infinite\n";
        return kUsage;
      }
      if (emsum.b && *emsum.b <= emsum.a) {
        err << "usage error: emsum needs --b greater than --a\n";
        return kUsage;
      }
      return cmd_emsum(emsum, out);
    }
    if (ap->parsed()) return cmd_approx(approx, out);
    if (v->parsed()) return cmd_verify(verify, out);
  } catch (const SpecError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kUsage;
  } catch (const NonConvergence& ex) {
    err << "non-convergence: " << ex.what() << '\n';
    return kNonConvergence;
  } catch (const Error& ex) {
    err << "domain error: " << ex.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace qbern::cli
