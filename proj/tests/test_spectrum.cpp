#include <random>

#include "doctest.h"
#include "g2/spectrum.hpp"

using namespace g2;

TEST_CASE("delta map") {
  const auto& k = constants();
  CHECK(delta_map(Mor22Element::basis(Basis22::I)) == FusionPoly::second());
  CHECK(delta_map(Mor22Element::basis(Basis22::E)) == FusionPoly(k.delta));
  CHECK(delta_map(Mor22Element::basis(Basis22::H)) == FusionPoly::first());
  CHECK(delta_map(Mor22Element::basis(Basis22::id2)) == FusionPoly::second().pow(2));
}

TEST_CASE("kappa and the change of basis") {
  const auto& k = constants();
  RatFunc q = RatFunc::q();
  RatFunc q2 = q.pow(2);
  CHECK(equals((k.delta * k.c + k.delta + k.c) / k.xi,
               (1 + q2 + q.pow(4)) * (1 + q.pow(8)) / (q.pow(4) * (1 + q2).pow(2))));
  CHECK(kappa() == idempotents().y_plus[Basis22::H].inverse());
  CHECK(kappa().eval_at(mpq_class(1)) == mpq_class(2, 3));

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> coef(-5, 5), e(0, 3);
  for (int trial = 0; trial < 5; ++trial) {
    FusionPoly p;
    for (int j = 0; j < 4; ++j)
      p = p + FusionPoly::monomial(RatFunc(coef(rng)) * q.pow(e(rng)), e(rng), e(rng));
    CHECK(h_basis(yplus_basis(p)) == p);
    CHECK(yplus_basis(h_basis(p)) == p);
  }
  // The trivial point (h, x) = (0, delta) sends an idempotent to its trace:
  // Delta(y_plus) there is 14 at q = 1.
  FusionPoly Y = h_basis(FusionPoly::first());
  CHECK(Y.eval(mpq_class(1), 0, 7) == 14);
  CHECK(Y.eval(RatFunc(), k.delta) == trace(idempotents().y_plus));
  CHECK(delta_map(idempotents().y_minus).eval(RatFunc(), k.delta) == trace(idempotents().y_minus));
}

TEST_CASE("f two ways") {
  CHECK(f_poly_formula() == f_poly_rotation());
  const FusionPoly& f = f_poly();
  const auto& k = constants();
  CHECK(f.eval(RatFunc(), k.delta).is_zero());
  // quadratic in t only
  CHECK(f.total_degree() == 2);
  CHECK(f.coeff(2, 0).is_zero());
  CHECK(f.coeff(1, 1).is_zero());
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      if (a + b == 3) {
        FusionPoly d = f;
        for (int i = 0; i < a; ++i) d = d.derivative(0);
        for (int i = 0; i < b; ++i) d = d.derivative(1);
        CHECK(d.is_zero());
      }
  // coefficients at q = 1
  const mpq_class one(1);
  CHECK(f.coeff(0, 0).eval_at(one) == mpq_class(21, 4));
  CHECK(f.coeff(0, 2).eval_at(one) == mpq_class(3, 28));
  CHECK(f.coeff(1, 0).eval_at(one) == mpq_class(-3, 2));
  CHECK(f.coeff(0, 1).eval_at(one) == mpq_class(-3, 2));
  CHECK(f.eval(one, 0, 7) == 0);
}

TEST_CASE("partials") {
  Partials p = partials(), c = partials_closed_form();
  CHECK(p.f_alpha == c.f_alpha);
  CHECK(p.f_t == c.f_t);
  CHECK(p.f_tt == c.f_tt);
  const auto& k = constants();
  const RatFunc &d = k.delta, &cc = k.c, &xi = k.xi;
  CHECK(p.f_alpha == (d * (cc + 2) * cc - xi + cc * cc + 1) / (2 * xi));
  CHECK(p.f_t == (d + 1) * (cc * cc - cc - 1) / (-xi) - 1);
  CHECK(p.f_t.eval_at(mpq_class(1)) == 0);
  CHECK(p.f_alpha.eval_at(mpq_class(1)) == mpq_class(-3, 2));
  CHECK(p.f_alpha.eval_at(mpq_class(2)) == mpq_class(-357, 100));
  CHECK(p.f_t.eval_at(mpq_class(2)) == mpq_class(189, 16));
  CHECK(p.f_tt.eval_at(mpq_class(2)) == mpq_class(2688, 136525));
  CHECK(sign_proof().holds());
  for (const mpq_class& q : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(99, 100), mpq_class(3)}) {
    CHECK(p.f_alpha.eval_at(q) < 0);
    CHECK(p.f_t.eval_at(q) > 0);
    CHECK(p.f_tt.eval_at(q) > 0);
  }
}

TEST_CASE("certificates") {
  Certificate c1 = certificate(mpq_class(1));
  CHECK(c1.status == CertificateStatus::degenerate);
  CHECK(c1.f_t == 0);
  CHECK(c1.epsilon == 0);
  CHECK(!sample_quarter_disc(c1, 100).all_negative());

  Certificate c2 = certificate(mpq_class(2));
  CHECK(c2.status == CertificateStatus::certified);
  CHECK(c2.M == mpq_class(-357, 100));
  CHECK(c2.lambda == mpq_class(1344, 136525));
  CHECK(c2.epsilon == mpq_class(357, 100) / mpq_class(1344, 136525));
  CHECK(c2.epsilon.get_d() == doctest::Approx(362.6).epsilon(1e-3));

  for (const mpq_class& q : {mpq_class(1, 2), mpq_class(9, 10), mpq_class(11, 10), mpq_class(2)}) {
    Certificate c = certificate(q);
    CHECK(c.status == CertificateStatus::certified);
    CHECK(c.epsilon > 0);
    SampleReport r = sample_quarter_disc(c, 10000);
    CHECK(r.samples >= 10000);
    CHECK(r.all_negative());
  }
  CHECK_THROWS_AS((void)certificate(mpq_class(0)), EvaluationError);
  CHECK(render(c2).find("status=certified") != std::string::npos);
  CHECK(render_json(c2).find("\"status\": \"certified\"") != std::string::npos);
}

TEST_CASE("scan") {
  const mpq_class q(2);
  const mpq_class delta = constants().delta.eval_at(q);
  auto rows = scan(q, {-1, 1}, {0, delta + 1}, 3, 1);
  // alpha axis -1, 0, 1; t axis 0, (delta+1)/2, delta, delta+1
  CHECK(rows.size() == 12);
  bool anchor = false, below = false, above = false;
  for (const auto& r : rows) {
    if (r.alpha == 0 && r.t == delta) {
      anchor = true;
      CHECK(r.f == 0);
      CHECK(r.prefilter == "pass");
    }
    if (r.alpha == -1 && r.t == 0) {
      below = true;
      CHECK(r.prefilter.find("alpha<0") != std::string::npos);
    }
    if (r.alpha == 0 && r.t == delta + 1) {
      above = true;
      CHECK(r.prefilter.find("|t|>delta") != std::string::npos);
    }
  }
  CHECK(anchor);
  CHECK(below);
  CHECK(above);
  // row-major, alpha outer
  CHECK(rows[0].alpha == -1);
  CHECK(rows[4].alpha == 0);
  // thread count does not change the output
  CHECK(scan_csv(scan(q, {0, 2}, {-3, 3}, 9, 4)) == scan_csv(scan(q, {0, 2}, {-3, 3}, 9, 1)));
  CHECK(scan_csv(rows).rfind("alpha,t,f,prefilter\n", 0) == 0);
  CHECK_THROWS_AS(scan(q, {0, 1}, {0, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(scan(q, {1, 0}, {0, 1}, 3), std::invalid_argument);
}
