// g2skein: command-line access to the G2 skein engine.
//
// Exit status: 0 success, 1 verification failure or internal error,
// 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2/acceptance.hpp"
#include "g2/mor22.hpp"
#include "g2/spectrum.hpp"
#include "g2/uqg2.hpp"

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string q = "2";
  int precision = 53;
  std::string output;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::string expr = "-";
  std::string alpha = "-1:1";
  std::string t = "0:1";
  int steps = 11;
  double tol = 1e-9;
  bool json = false;
};

mpq_class positive_q(const std::string& text) {
  mpq_class q = g2::parse_rational(text);
  if (q <= 0) throw UsageError("q must be positive, got " + text);
  return q;
}

g2::ScanRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like lo:hi, got " + text);
  return {g2::parse_rational(text.substr(0, colon)), g2::parse_rational(text.substr(colon + 1))};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

g2::Evaluator make_evaluator(const RunConfig& cfg) {
  g2::EvalOptions opt;
  opt.seed = cfg.seed;
  return g2::Evaluator(opt);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  g2::Morphism m = g2::parse_expression(read_input(cfg.expr));
  if (!m.is_closed()) throw UsageError("eval needs a closed expression (Mor(0,0))");
  g2::Evaluator ev = make_evaluator(cfg);
  out << ev.eval(m).to_string() << '\n';
  return kOk;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  g2::Morphism m = g2::parse_expression(read_input(cfg.expr));
  g2::Evaluator ev = make_evaluator(cfg);
  const g2::Morphism r = ev.reduce(m);
  if (r.source() == 2 && r.target() == 2) {
    const g2::Mor22Element x = g2::from_morphism(r);
    static const char* names[4] = {"id2", "E", "I", "H"};
    for (int i = 0; i < 4; ++i)
      if (!x.c[i].is_zero()) out << names[i] << ": " << x.c[i].to_string() << '\n';
    if (x.is_zero()) out << "0\n";
  } else {
    out << r.to_string() << '\n';
  }
  return kOk;
}

int cmd_idempotents(std::ostream& out) {
  using g2::Basis22;
  const g2::SkeinConstants& k = g2::constants();
  const g2::IdempotentSet& s = g2::idempotents();  // throws Defect if an identity fails
  const std::pair<const char*, const g2::Mor22Element*> all[] = {
      {"p_triv", &s.p_triv}, {"p_X", &s.p_X}, {"y_plus", &s.y_plus}, {"y_minus", &s.y_minus}};
  bool ok = true;
  g2::Mor22Element sum;
  for (const auto& [name, p] : all) {
    const bool idem = g2::multiply(*p, *p) == *p;
    const bool adj = g2::from_morphism(g2::adjoint(g2::to_morphism(*p))) == *p;
    ok = ok && idem && adj;
    sum = sum + *p;
    const g2::RatFunc tr = g2::trace(*p);
    out << name << " idempotent=" << (idem ? "yes" : "no") << " self_adjoint=" << (adj ? "yes" : "no")
        << " trace=" << tr.to_string() << " trace_at_1=" << tr.eval_at(mpq_class(1)).get_str() << '\n';
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!g2::multiply(*all[i].second, *all[j].second).is_zero()) {
        ok = false;
        out << all[i].first << " * " << all[j].first << " != 0\n";
      }
  const bool complete = sum == g2::Mor22Element::basis(Basis22::id2);
  const bool trace_sum = g2::trace(s.y_plus) + g2::trace(s.y_minus) == k.delta * k.delta - k.delta - 1;
  ok = ok && complete && trace_sum;
  out << "sum_is_id2=" << (complete ? "yes" : "no") << '\n'
      << "trace_y_plus_plus_y_minus_is_delta2_minus_delta_minus_1=" << (trace_sum ? "yes" : "no") << '\n'
      << "status=" << (ok ? "verified" : "failed") << '\n';
  return ok ? kOk : kFailed;
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  const g2::GramReport g = g2::gram_positivity(positive_q(cfg.q));
  out << "qval=" << g.qval.get_str() << '\n' << "basis=id2,E,I,H\n";
  for (const auto& row : g.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j].get_str();
    out << '\n';
  }
  for (const auto& row : g.entries) {
    out << "~ ";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << g2::to_decimal(row[j]);
    out << '\n';
  }
  for (std::size_t n = 0; n < g.leading_minors.size(); ++n)
    out << "minor" << n + 1 << '=' << g.leading_minors[n].get_str() << " ~ "
        << g2::to_decimal(g.leading_minors[n]) << '\n';
  out << "positive_definite=" << (g.positive_definite ? "true" : "false") << '\n';
  return g.positive_definite ? kOk : kFailed;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  if (cfg.threads < 1) throw UsageError("thread count must be at least 1");
  const auto rows =
      g2::scan(positive_q(cfg.q), parse_range(cfg.alpha), parse_range(cfg.t), cfg.steps, cfg.threads);
  out << g2::scan_csv(rows);
  return kOk;
}

int cmd_certificate(const RunConfig& cfg, std::ostream& out) {
  const g2::Certificate c = g2::certificate(positive_q(cfg.q));
  out << (cfg.json ? g2::render_json(c) : g2::render(c));
  return kOk;
}

int cmd_uqg2(const RunConfig& cfg, std::ostream& out) {
  if (cfg.precision < 53 || cfg.precision > 113) throw UsageError("precision must be 53..113 bits");
  const g2::uqg2::Report r = g2::uqg2::full_suite(positive_q(cfg.q), cfg.precision, cfg.tol);
  out << g2::uqg2::render(r);
  return r.passed() ? kOk : kFailed;
}

int cmd_selftest(std::ostream& out) {
  bool ok = true;
  for (int id = 1; id <= 7; ++id) {
    const g2::CriterionResult r = g2::run_criterion(id);
    out << g2::render(r, false) << std::flush;  // no timings: output is reproducible
    ok = ok && r.passed;
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation and verification for the quantum G2 trivalent category"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "randomize face order with this seed (eval, reduce)");
  app.add_option("-o,--output", cfg.output, "write output here instead of stdout");
  app.add_option("--threads", cfg.threads, "worker threads (spectrum-scan)")
      ->envname("G2SKEIN_THREADS")
      ->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "evaluate a closed diagram expression");
  eval->add_option("--expr", cfg.expr, "expression file, or - for stdin")->required();
  auto* reduce = app.add_subcommand("reduce", "reduce a diagram expression to normal form");
  reduce->add_option("--expr", cfg.expr, "expression file, or - for stdin")->required();
  auto* idem = app.add_subcommand("idempotents", "verify the minimal idempotents of Mor(2,2)");
  auto* gram = app.add_subcommand("gram", "trace-pairing Gram matrix of Mor(2,2) at q");
  gram->add_option("--q", cfg.q, "positive rational or decimal")->required();
  auto* scan = app.add_subcommand("spectrum-scan", "CSV of f(alpha, t) on a grid");
  scan->add_option("--q", cfg.q, "positive rational or decimal")->required();
  scan->add_option("--alpha", cfg.alpha, "range lo:hi")->required();
  scan->add_option("--t", cfg.t, "range lo:hi")->required();
  scan->add_option("--steps", cfg.steps, "grid points per axis (>= 2)")->required();
  auto* cert = app.add_subcommand("certificate", "isolation certificate at q");
  cert->add_option("--q", cfg.q, "positive rational or decimal")->required();
  cert->add_flag("--json", cfg.json, "JSON instead of key=value lines");
  auto* uq = app.add_subcommand("uqg2-verify", "numeric checks on the 7-dimensional representation");
  uq->add_option("--q", cfg.q, "positive rational or decimal")->required();
  uq->add_option("--tol", cfg.tol, "residual tolerance");
  uq->add_option("--precision", cfg.precision, "53 (double) or up to 113 bits (quad)");
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*seed_opt) cfg.seed = seed;

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (*eval) status = cmd_eval(cfg, buffer);
    else if (*reduce) status = cmd_reduce(cfg, buffer);
    else if (*idem) status = cmd_idempotents(buffer);
    else if (*gram) status = cmd_gram(cfg, buffer);
    else if (*scan) status = cmd_scan(cfg, buffer);
    else if (*cert) status = cmd_certificate(cfg, buffer);
    else if (*uq) status = cmd_uqg2(cfg, buffer);
    else if (*self) status = cmd_selftest(cfg.output.empty() ? std::cout : buffer);
  } catch (const UsageError& e) {
    std::cerr << "g2skein: " << e.what() << '\n';
    return kUsage;
  } catch (const g2::ParseError& e) {
    std::cerr << "g2skein: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "g2skein: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "g2skein: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "g2skein: " << e.what() << '\n';
    return kFailed;
  }

  if (cfg.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      std::cerr << "g2skein: cannot write " << cfg.output << '\n';
      return kUsage;
    }
    f << buffer.str();
  }
  return status;
}
