#include "g2/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "g2/mor22.hpp"
#include "g2/spectrum.hpp"
#include "g2/uqg2.hpp"

namespace g2 {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Checker {
  std::vector<std::string> misses;
  void expect(bool ok, const std::string& what) {
    if (!ok) misses.push_back(what);
  }
  // Runs `body` and requires it to finish within `limit` seconds.
  void timed(const std::string& what, double limit, const std::function<void()>& body) {
    const auto t0 = Clock::now();
    body();
    const double s = since(t0);
    if (s > limit) {
      std::ostringstream os;
      os << what << " took " << std::fixed << std::setprecision(2) << s << " s (limit " << limit << " s)";
      misses.push_back(os.str());
    }
  }
};

void symbolic_identities(Checker& c) {
  const SkeinConstants& k = constants();
  const RatFunc q = RatFunc::q();
  c.timed("xi identities", 5, [&] {
    c.expect(k.xi * k.xi == xi_radicand(k), "(a) xi^2 equals its radicand");
    const RatFunc closed = (1 + q.pow(2)).pow(2) * RatFunc::parse("1-q^2+q^6-q^8+q^10-q^14+q^16") /
                           (q.pow(6) * (1 + q.pow(8)));
    c.expect(equals(k.xi, closed), "(b) xi equals its closed rational form");
    const RatFunc lhs = (k.delta * k.c + k.delta + k.c) / k.xi;
    const RatFunc rhs = (1 + q.pow(2) + q.pow(4)) * (1 + q.pow(8)) / (q.pow(4) * (1 + q.pow(2)).pow(2));
    c.expect(equals(lhs, rhs), "(c) (delta c + delta + c)/xi closed form");
  });
  c.timed("derivative closed forms", 5, [&] {
    const Partials p = partials(), f = partials_closed_form();
    c.expect(p.f_alpha == f.f_alpha, "(d) f_alpha closed form");
    c.expect(p.f_t == f.f_t, "(d) f_t closed form");
    c.expect(p.f_tt == f.f_tt, "(d) f_tt closed form");
  });
  c.timed("f at the trivial point", 5, [&] {
    c.expect(f_poly().eval(RatFunc(), k.delta).is_zero(), "(e) f(0, delta) = 0");
  });
}

void skein_evaluation(Checker& c) {
  const SkeinConstants& k = constants();
  c.timed("basic values", 1, [&] {
    c.expect(eval_closed(catalog::loop()) == k.delta, "loop -> delta");
    c.expect(eval_closed(catalog::theta()) == k.delta, "theta -> delta");
    c.expect(eval_closed(catalog::tetrahedron()) == k.c * k.delta, "K4 -> c delta");
  });

  std::mt19937_64 rng(20240611);
  c.timed("tadpoles", 1, [&] {
    c.expect(eval_closed(catalog::H().trace_closed()).is_zero(), "traced H is a tadpole -> 0");
    int found = 0;
    for (int tries = 0; found < 10 && tries < 10000; ++tries) {
      Diagram d = catalog::random_word(rng, 10).trace_closed();
      if (!d.has_tadpole()) continue;
      ++found;
      Evaluator e(EvalOptions{.memoize = false});
      c.expect(e.eval(d).is_zero(), "random tadpole diagram -> 0: " + d.describe());
    }
    c.expect(found == 10, "found 10 random tadpole diagrams");
  });

  int nonzero = 0;
  for (int pair = 0; pair < 20; ++pair) {
    Diagram x = catalog::random_closed(rng, 8), y = catalog::random_closed(rng, 8);
    c.timed("multiplicativity pair " + std::to_string(pair), 1, [&] {
      Evaluator e(EvalOptions{.memoize = false});
      RatFunc vx = e.eval(x), vy = e.eval(y);
      Evaluator fresh;
      c.expect(fresh.eval(tensor(x, y)) == vx * vy, "disjoint union of pair " + std::to_string(pair));
      if (!(vx * vy).is_zero()) ++nonzero;
    });
  }
  c.expect(nonzero > 0, "some multiplicativity pair is nonzero");

  std::vector<Diagram> cat = {catalog::theta(), catalog::tetrahedron(),
                              tensor(catalog::theta(), catalog::loop())};
  for (int n = 2; n <= 6; ++n) cat.push_back(catalog::prism(n));
  for (int j = 0; j < 12; ++j) cat.push_back(catalog::random_closed(rng, 11));
  for (std::size_t j = 0; j < cat.size(); ++j) {
    const Diagram& d = cat[j];
    c.expect(d.vertex_count() <= 12, "catalog diagram has at most 12 vertices");
    c.timed("confluence on diagram " + std::to_string(j), 1, [&] {
      c.expect(confluence_check(Morphism(d), 10, 1000 + j), "confluence on " + d.describe());
    });
  }
}

void mor22_suite(Checker& c) {
  const SkeinConstants& k = constants();
  const IdempotentSet& s = idempotents();
  const Mor22Element all[4] = {s.p_triv, s.p_X, s.y_plus, s.y_minus};
  const char* names[4] = {"p_triv", "p_X", "y_plus", "y_minus"};
  Mor22Element sum;
  for (int i = 0; i < 4; ++i) {
    c.expect(multiply(all[i], all[i]) == all[i], std::string(names[i]) + " is idempotent");
    c.expect(from_morphism(adjoint(to_morphism(all[i]))) == all[i], std::string(names[i]) + " is self-adjoint");
    for (int j = i + 1; j < 4; ++j)
      c.expect(multiply(all[i], all[j]).is_zero(),
               std::string(names[i]) + " and " + names[j] + " are orthogonal");
    sum = sum + all[i];
  }
  c.expect(sum == Mor22Element::basis(Basis22::id2), "idempotents sum to id2");

  const StructureTable& skein = structure_constants();
  const StructureTable spectral = spectral_structure_constants();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      c.expect(skein[i][j] == spectral[i][j],
               "structure constant " + std::to_string(i) + "," + std::to_string(j));

  c.expect(trace(s.y_plus) + trace(s.y_minus) == k.delta * k.delta - k.delta - 1,
           "trace(y_plus) + trace(y_minus) = delta^2 - delta - 1");
  const mpq_class one(1);
  const int dims[4] = {1, 7, 14, 27};
  mpq_class total = 0;
  for (int i = 0; i < 4; ++i) {
    const mpq_class t = trace(all[i]).eval_at(one);
    c.expect(t == dims[i], std::string("trace of ") + names[i] + " at q = 1 is " + std::to_string(dims[i]));
    total += t;
  }
  c.expect(total == 49, "traces at q = 1 sum to 49");
}

void certificate_suite(Checker& c) {
  c.expect(sign_proof().holds(), "derivative signs hold term by term");
  for (const mpq_class& q : {mpq_class(1, 2), mpq_class(9, 10), mpq_class(11, 10), mpq_class(2)}) {
    const std::string at = " at q = " + q.get_str();
    c.timed("certificate" + at, 5, [&] {
      const Certificate cert = certificate(q);
      c.expect(cert.status == CertificateStatus::certified, "certified" + at);
      c.expect(cert.epsilon > 0, "epsilon > 0" + at);
      const SampleReport r = sample_quarter_disc(cert, 10000);
      c.expect(r.samples >= 10000, "at least 10^4 samples" + at);
      c.expect(r.all_negative(), "f < 0 on every sample" + at);
    });
  }
  const Certificate one = certificate(mpq_class(1));
  c.expect(one.f_t == 0, "f_t = 0 at q = 1");
  c.expect(one.status == CertificateStatus::degenerate, "degenerate at q = 1");
}

void rotation_oracle(Checker& c) {
  c.expect(f_poly_formula() == f_poly_rotation(), "f from rotation equals its closed formula");
}

void representation_suite(Checker& c) {
  c.timed("representation suite", 10, [&] {
    for (const mpq_class& q : {mpq_class(4, 5), mpq_class(13, 10)}) {
      const uqg2::Report r = uqg2::full_suite(q, 53, 1e-9);
      for (const auto& check : r.checks)
        c.expect(check.verdict == uqg2::Verdict::pass,
                 check.name + " at q = " + q.get_str() + " (" + uqg2::verdict_name(check.verdict) + ")");
    }
  });
}

void gram_suite(Checker& c) {
  for (const mpq_class& q : {mpq_class(9, 10), mpq_class(11, 10), mpq_class(2)}) {
    const GramReport g = gram_positivity(q);
    c.expect(g.positive_definite, "Gram matrix positive definite at q = " + q.get_str());
    for (const auto& m : g.leading_minors) c.expect(m > 0, "leading minor > 0 at q = " + q.get_str());
  }
}

struct Criterion {
  const char* title;
  void (*body)(Checker&);
};

const Criterion kCriteria[] = {
    {"symbolic identities", symbolic_identities},
    {"skein evaluation", skein_evaluation},
    {"Mor(2,2) algebra", mor22_suite},
    {"property (T) certificate", certificate_suite},
    {"rotation consistency", rotation_oracle},
    {"quantum group representation", representation_suite},
    {"Gram positivity", gram_suite},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 7) throw std::invalid_argument("criterion id must be 1..7");
  const Criterion& cr = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = cr.title;
  Checker c;
  const auto t0 = Clock::now();
  try {
    cr.body(c);
  } catch (const std::exception& e) {
    c.misses.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = since(t0);
  r.misses = std::move(c.misses);
  r.passed = r.misses.empty();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 7; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string render(const CriterionResult& r, bool with_time) {
  std::ostringstream os;
  os << "criterion " << r.id << ' ' << (r.passed ? "pass" : "fail") << ' ' << r.title;
  if (with_time) os << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
  os << '\n';
  for (const auto& m : r.misses) os << "  miss: " << m << '\n';
  return os.str();
}

}  // namespace g2
