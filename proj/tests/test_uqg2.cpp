#include <cmath>

#include "doctest.h"
#include "g2/skein.hpp"
#include "g2/uqg2.hpp"

using namespace g2;
using namespace g2::uqg2;

namespace {

double residual(const Report& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->residual;
}

const mpq_class q08(4, 5), q13(13, 10);

}  // namespace

TEST_CASE("cartan data") {
  CartanData cd;
  auto A = cd.inner_product();
  CHECK(A[0][0] == 2);
  CHECK(A[0][1] == -3);
  CHECK(A[1][0] == -3);
  CHECK(A[1][1] == 6);
}

TEST_CASE("q-numbers") {
  CHECK(qnumber(2, 2.0) == doctest::Approx(2.5));
  CHECK(qnumber(3, 1.0) == 3);
  CHECK(qbinomial(4, 2, 1.0) == 6);
  // [4 choose 1]_x = [4]_x
  CHECK(qbinomial(4, 1, 1.7) == doctest::Approx(qnumber(4, 1.7)));
  const double x = 1.3;
  CHECK(qnumber(3, x) == doctest::Approx((std::pow(x, 3) - std::pow(x, -3)) / (x - 1 / x)));
}

TEST_CASE("explicit matrices") {
  const double q = 1.3;
  Rep7<double> rep = build_rep<double>(q13);
  CHECK(rep.E[0](0, 1) == doctest::Approx(std::sqrt(q)));
  CHECK(rep.E[0](2, 3) == doctest::Approx(q * std::sqrt(q + 1 / q)));
  CHECK(rep.E[1](1, 2) == doctest::Approx(std::pow(q, 1.5)));
  const double k1[] = {q, 1 / q, q * q, 1, 1 / (q * q), q, 1 / q};
  for (int i = 0; i < kDim; ++i) CHECK(rep.K[0](i, i) == doctest::Approx(k1[i]));
  // F1 = E1^T K1^{-1}: the (row 2, col 1) entry is q^{1/2} q^{-1}
  CHECK(rep.F[0](1, 0) == doctest::Approx(std::pow(q, -0.5)));
  CHECK_THROWS_AS(build_rep<double>(mpq_class(0)), std::invalid_argument);
  CHECK(build_rep<double>(mpq_class(1)).classical);
}

TEST_CASE("defining relations hold at q = 0.8 and 1.3") {
  for (const mpq_class& q : {q08, q13}) {
    Report r = verify_relations(build_rep<double>(q), 1e-9);
    CHECK(r.passed());
    CHECK(r.checks.size() == 2 + 1 + 8 + 4 + 4 + 8);
    CHECK(residual(r, "[E1,F1]") <= 1e-9);
    CHECK(residual(r, "[E1,F2]") <= 1e-9);
    CHECK(residual(r, "serre-E12") <= 1e-9);
  }
}

TEST_CASE("relations fail on a perturbed representation") {
  Rep7<double> rep = build_rep<double>(q13);
  rep.E[0](2, 3) *= 1.001;
  Report r = verify_relations(rep, 1e-9);
  CHECK(!r.passed());
  CHECK(r.find("[E1,F1]")->verdict == Verdict::fail);
  // K-conjugation only sees weights, which the perturbation keeps
  CHECK(r.find("KE11")->verdict == Verdict::pass);
}

TEST_CASE("the commutator is undefined at q = 1") {
  Report r = verify_relations(build_rep<double>(mpq_class(1)), 1e-9);
  CHECK(r.find("[E1,F1]")->verdict == Verdict::inconclusive);
  CHECK(r.find("[E1,F2]")->verdict == Verdict::pass);
  CHECK(!r.passed());
}

TEST_CASE("duality suite") {
  for (const mpq_class& q : {q08, q13}) {
    Rep7<double> rep = build_rep<double>(q);
    Report r = duality_suite(rep, 1e-9);
    CHECK(r.passed());
    CHECK(residual(r, "W-pairing") <= 1e-12);
    CHECK(residual(r, "T-unitary") <= 1e-12);
    CHECK(residual(r, "conjugate-left") <= 1e-9);
    CHECK(residual(r, "self-duality-right") <= 1e-9);

    // independent oracle: W_i = q^{-e_i/2} with e = weights of K1^10 K2^6
    DualityData<double> d = build_duality(rep);
    const double qd = q.get_d();
    const int e[] = {10, 8, 2, 0, -2, -8, -10};
    double sum = 0;
    for (int i = 0; i < kDim; ++i) {
      CHECK(d.W(i, i) == doctest::Approx(std::pow(qd, -e[i] / 2.0)));
      sum += std::pow(qd, -e[i]);
    }
    CHECK((d.R.transpose() * d.R)(0, 0) == doctest::Approx(sum));
    CHECK(sum == doctest::Approx(constants().delta.eval_at(q).get_d()));
  }
}

TEST_CASE("R is not the flat pairing") {
  // R is supported on the antidiagonal, with weights W_i, so it is not symmetric
  DualityData<double> d = build_duality(build_rep<double>(q13));
  CHECK(d.R(0 * kDim + 6, 0) == doctest::Approx(std::pow(1.3, -5)));
  CHECK(d.R(6 * kDim + 0, 0) == doctest::Approx(std::pow(1.3, 5)));
  CHECK(d.R(0 * kDim + 0, 0) == 0);
}

TEST_CASE("a wrong sign in T breaks the intertwiner") {
  Rep7<double> rep = build_rep<double>(q08);
  const auto bar = unitary_dual(rep);
  DualityData<double> d = build_duality(rep);
  Mat<double> T = d.T;
  T(0, 6) = -T(0, 6);
  double worst = 0;
  const Mat<double> gens[] = {rep.E[0], rep.E[1], rep.F[0], rep.F[1]};
  for (int g = 0; g < 4; ++g) worst = std::max(worst, (T * gens[g] - bar[2 + g] * T).cwiseAbs().maxCoeff());
  CHECK(worst > 1e-3);
}

TEST_CASE("quad precision shrinks residuals") {
  Rep7<Quad> rep = build_rep<Quad>(q13);
  Report hi = verify_relations(rep, 1e-25);
  hi.merge(duality_suite(rep, 1e-25, 1e-25));
  CHECK(hi.passed());
  Rep7<double> drep = build_rep<double>(q13);
  Report lo = verify_relations(drep, 1e-9);
  lo.merge(duality_suite(drep, 1e-9));
  auto worst = [](const Report& r) {
    double w = 0;
    for (const auto& c : r.checks) w = std::max(w, c.residual);
    return w;
  };
  CHECK(worst(lo) > 0);
  CHECK(worst(hi) < 1e-12 * worst(lo));
}

TEST_CASE("invariant dimensions") {
  for (const mpq_class& q : {q08, q13}) {
    Rep7<double> rep = build_rep<double>(q);
    const int expected[] = {0, 1, 1};
    for (int n = 1; n <= 3; ++n) {
      InvariantDim d = invariant_dims(rep, n);
      CHECK(d.dim == expected[n - 1]);
      CHECK(d.verdict == Verdict::pass);
      CHECK(d.gap >= 1e3);
    }
  }
  // a threshold inside the bulk of the spectrum has no gap around it
  InvariantDim loose = invariant_dims(build_rep<double>(q13), 2, 0.9, 1e3);
  CHECK(loose.verdict == Verdict::inconclusive);
  CHECK_THROWS_AS(invariant_dims(build_rep<double>(q13), 4), std::invalid_argument);
}

TEST_CASE("basis vectors as words in F against the explicit matrices") {
  // v3 recomputes to [2]_q e3: its normalization carries [2]^{1/2}
  // where the explicit matrices need [2]^{-1/2}. The rest agree.
  const double q = 0.8;
  Report r = basis_normalization(build_rep<double>(q08), 1e-12);
  for (int k = 0; k < kDim; ++k) {
    if (k == 3)
      CHECK(residual(r, "basis-v3") == doctest::Approx(q + 1 / q - 1));
    else
      CHECK(residual(r, "basis-v" + std::to_string(k)) <= 1e-12);
  }
}

TEST_CASE("full suite and report format") {
  Report r = full_suite(q13, 53, 1e-9);
  CHECK(r.passed());
  CHECK(r.find("invariant-dim-n3")->verdict == Verdict::pass);
  std::string text = render(r);
  CHECK(text.find("W-pairing ") != std::string::npos);
  CHECK(text.find("summary ") != std::string::npos);
  CHECK(text.substr(text.rfind("summary")).find("pass\n") != std::string::npos);
  CHECK(full_suite(q08, 113, 1e-9).passed());
  CHECK_THROWS_AS(full_suite(q13, 40, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(full_suite(mpq_class(-1), 53, 1e-9), std::invalid_argument);
}
