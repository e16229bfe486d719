#include "g2/uqg2.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "g2/skein.hpp"

namespace g2::uqg2 {

namespace {

template <class S>
S to_scalar(const mpq_class& x) {
  if constexpr (std::is_same_v<S, double>) {
    return x.get_d();
  } else {
    return S(x.get_num().get_str()) / S(x.get_den().get_str());
  }
}

template <class S>
double to_double(const S& x) {
  return static_cast<double>(x);
}

template <class S>
Mat<S> identity(int n) {
  return Mat<S>::Identity(n, n);
}

template <class S>
double max_norm(const Mat<S>& m) {
  if (m.size() == 0) return 0;
  return to_double<S>(m.cwiseAbs().maxCoeff());
}

template <class S>
Mat<S> diag(const std::array<S, kDim>& d) {
  Mat<S> m = Mat<S>::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) m(i, i) = d[i];
  return m;
}

template <class S>
S ipow(const S& x, int e) {
  S r(1);
  S b = e < 0 ? S(1) / x : x;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

template <class S>
Mat<S> mpow(const Mat<S>& m, int e) {
  Mat<S> r = identity<S>(static_cast<int>(m.rows()));
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Verdict judge(double residual, double tol) {
  return residual <= tol ? Verdict::pass : Verdict::fail;  // NaN fails
}

}  // namespace

std::array<std::array<int, 2>, 2> CartanData::inner_product() const {
  std::array<std::array<int, 2>, 2> A{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A[i][j] = d[i] * a[i][j];
  return A;
}

template <class S>
S qnumber(int n, const S& x) {
  S sum(0);
  for (int k = 0; k < n; ++k) sum += ipow(x, n - 1 - 2 * k);
  return sum;
}

template <class S>
S qbinomial(int m, int k, const S& x) {
  if (k < 0 || k > m) return S(0);
  S num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= qnumber(m - i, x);
    den *= qnumber(i + 1, x);
  }
  return num / den;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

void Report::add(std::string name, double residual, double tol) {
  checks.push_back({std::move(name), residual, tol, judge(residual, tol)});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::passed() const {
  return !checks.empty() && count(Verdict::pass) == static_cast<int>(checks.size());
}

int Report::count(Verdict v) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [v](const CheckResult& c) { return c.verdict == v; }));
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string render(const Report& r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3);
  for (const auto& c : r.checks) os << c.name << ' ' << c.residual << ' ' << verdict_name(c.verdict) << '\n';
  os << "summary " << r.count(Verdict::pass) << " pass " << r.count(Verdict::fail) << " fail "
     << r.count(Verdict::inconclusive) << " inconclusive " << (r.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

template <class S>
Rep7<S> build_rep(const mpq_class& q) {
  if (q <= 0) throw std::invalid_argument("q must be positive");
  Rep7<S> rep;
  rep.exact_q = q;
  rep.q = to_scalar<S>(q);
  rep.classical = q == 1;
  const S& Q = rep.q;
  rep.s = sqrt(Q);
  const CartanData cd;
  for (int i = 0; i < 2; ++i) rep.qi[i] = ipow(Q, cd.d[i]);

  const S b2 = sqrt(qnumber(2, Q));  // [2]_q^{1/2}
  Mat<S> E1 = Mat<S>::Zero(kDim, kDim), E2 = Mat<S>::Zero(kDim, kDim);
  E1(0, 1) = rep.s;
  E1(2, 3) = Q * b2;
  E1(3, 4) = b2;
  E1(5, 6) = rep.s;
  E2(1, 2) = Q * rep.s;
  E2(4, 5) = Q * rep.s;
  rep.E = {E1, E2};

  const S qm = S(1) / Q;
  rep.K[0] = diag<S>({Q, qm, Q * Q, S(1), qm * qm, Q, qm});
  rep.K[1] = diag<S>({S(1), ipow(Q, 3), ipow(Q, -3), S(1), ipow(Q, 3), ipow(Q, -3), S(1)});
  for (int i = 0; i < 2; ++i) {
    Mat<S> inv = Mat<S>::Zero(kDim, kDim);
    for (int k = 0; k < kDim; ++k) inv(k, k) = S(1) / rep.K[i](k, k);
    rep.Kinv[i] = inv;
    rep.F[i] = rep.E[i].transpose() * rep.Kinv[i];
  }
  return rep;
}

template <class S>
Report verify_relations(const Rep7<S>& rep, double tol) {
  const CartanData cd;
  const Mat<S> I = identity<S>(kDim);
  Report r;
  for (int i = 0; i < 2; ++i) {
    const std::string n = std::to_string(i + 1);
    r.add("K" + n + "Kinv" + n,
          std::max(max_norm<S>(rep.K[i] * rep.Kinv[i] - I), max_norm<S>(rep.Kinv[i] * rep.K[i] - I)), tol);
  }
  r.add("K1K2-commute", max_norm<S>(rep.K[0] * rep.K[1] - rep.K[1] * rep.K[0]), tol);

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      const S w = ipow(rep.qi[i], cd.a[i][j]);
      r.add("KE" + ij, max_norm<S>(rep.K[i] * rep.E[j] * rep.Kinv[i] - w * rep.E[j]), tol);
      r.add("KF" + ij, max_norm<S>(rep.K[i] * rep.F[j] * rep.Kinv[i] - rep.F[j] / w), tol);
    }

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const std::string name = "[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "]";
      Mat<S> lhs = rep.E[i] * rep.F[j] - rep.F[j] * rep.E[i];
      if (i != j) {
        r.add(name, max_norm<S>(lhs), tol);
      } else if (rep.classical) {
        r.add({name, std::numeric_limits<double>::quiet_NaN(), tol, Verdict::inconclusive});
      } else {
        const S qi = rep.qi[i];
        r.add(name, max_norm<S>(lhs - (rep.K[i] - rep.Kinv[i]) / (qi - S(1) / qi)), tol);
      }
    }

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      const int m = 1 - cd.a[i][j];
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      for (const auto* X : {&rep.E, &rep.F}) {
        Mat<S> sum = Mat<S>::Zero(kDim, kDim);
        for (int k = 0; k <= m; ++k) {
          const S c = (k % 2 ? S(-1) : S(1)) * qbinomial(m, k, rep.qi[i]);
          sum += c * mpow((*X)[i], k) * (*X)[j] * mpow((*X)[i], m - k);
        }
        r.add(std::string("serre-") + (X == &rep.E ? "E" : "F") + ij, max_norm<S>(sum), tol);
      }
    }

  // K* = K, E* = F K, F* = K^{-1} E, (K^{-1})* = K^{-1}
  for (int i = 0; i < 2; ++i) {
    const std::string n = std::to_string(i + 1);
    r.add("star-K" + n, max_norm<S>(rep.K[i].transpose() - rep.K[i]), tol);
    r.add("star-Kinv" + n, max_norm<S>(rep.Kinv[i].transpose() - rep.Kinv[i]), tol);
    r.add("star-E" + n, max_norm<S>(rep.E[i].transpose() - rep.F[i] * rep.K[i]), tol);
    r.add("star-F" + n, max_norm<S>(rep.F[i].transpose() - rep.Kinv[i] * rep.E[i]), tol);
  }
  return r;
}

template <class S>
DualityData<S> build_duality(const Rep7<S>& rep) {
  DualityData<S> d;
  const Mat<S> k2rho = mpow(rep.K[0], 10) * mpow(rep.K[1], 6);
  d.W = Mat<S>::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) d.W(i, i) = S(1) / sqrt(k2rho(i, i));
  d.T = Mat<S>::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) d.T(kDim - 1 - i, i) = i % 2 ? S(-1) : S(1);
  // R = (W (x) T^*) r, r = sum v_i (x) conj(v_i); T^* conj(v_j) = (-1)^j v_{6-j}
  d.R = Mat<S>::Zero(kDim * kDim, 1);
  const Mat<S> Tstar = d.T.transpose();
  for (int i = 0; i < kDim; ++i)
    for (int b = 0; b < kDim; ++b) d.R(i * kDim + b, 0) = d.W(i, i) * Tstar(b, i);
  return d;
}

template <class S>
std::array<Mat<S>, 8> unitary_dual(const Rep7<S>& rep) {
  std::array<Mat<S>, 8> out;
  for (int i = 0; i < 2; ++i) {
    out[i] = rep.Kinv[i].transpose();
    out[2 + i] = (-rep.qi[i] * rep.Kinv[i] * rep.E[i]).transpose();
    out[4 + i] = (-(rep.F[i] * rep.K[i]) / rep.qi[i]).transpose();
    out[6 + i] = rep.K[i].transpose();
  }
  return out;
}

template <class S>
Report duality_suite(const Rep7<S>& rep, double tol, double pair_tol) {
  const DualityData<S> d = build_duality(rep);
  const Mat<S> I = identity<S>(kDim);
  const Mat<S> I49 = identity<S>(kDim * kDim);
  const Mat<S> Winv = d.W.inverse();
  Report r;

  double offdiag = 0;
  bool positive = true;
  double pairing = 0;
  for (int i = 0; i < kDim; ++i) {
    positive = positive && d.W(i, i) > 0;
    pairing = std::max(pairing, to_double<S>(abs(d.W(i, i) * d.W(kDim - 1 - i, kDim - 1 - i) - S(1))));
    for (int j = 0; j < kDim; ++j)
      if (i != j) offdiag = std::max(offdiag, to_double<S>(abs(d.W(i, j))));
  }
  r.add("W-positive-diagonal", positive ? offdiag : std::numeric_limits<double>::infinity(), pair_tol);
  r.add("W-pairing", pairing, pair_tol);
  const Mat<S> k2rho = mpow(rep.K[0], 10) * mpow(rep.K[1], 6);
  r.add("W-squared-K2rho", max_norm<S>(d.W * d.W * k2rho - I), tol);

  r.add("T-unitary", max_norm<S>(d.T.transpose() * d.T - I), pair_tol);
  r.add("T-self-adjoint", max_norm<S>(d.T.transpose() - d.T), pair_tol);
  r.add("T-star-jW", max_norm<S>(d.T.transpose() * d.W - Winv * d.T.transpose()), tol);

  const std::array<Mat<S>, 8> gens = {rep.K[0], rep.K[1], rep.E[0], rep.E[1],
                                      rep.F[0], rep.F[1], rep.Kinv[0], rep.Kinv[1]};
  // antipode S(x): K -> K^{-1}, E -> -K^{-1} E, F -> -F K
  std::array<Mat<S>, 8> antipode;
  for (int i = 0; i < 2; ++i) {
    antipode[i] = rep.Kinv[i];
    antipode[2 + i] = -rep.Kinv[i] * rep.E[i];
    antipode[4 + i] = -rep.F[i] * rep.K[i];
    antipode[6 + i] = rep.K[i];
  }
  const std::array<Mat<S>, 8> bar = unitary_dual(rep);
  double intertwine = 0, realizations = 0;
  for (int g = 0; g < 8; ++g) {
    intertwine = std::max(intertwine, max_norm<S>(d.T * gens[g] - bar[g] * d.T));
    // j(W) pi^c(x) j(W^{-1}), pi^c(x) = pi(S(x))^T
    realizations = std::max(realizations, max_norm<S>(d.W * antipode[g].transpose() * Winv - bar[g]));
  }
  r.add("T-intertwines", intertwine, tol);
  r.add("unitary-dual-realizations", realizations, tol);

  double invariance = 0;
  for (int i = 0; i < 2; ++i) {
    invariance = std::max(invariance, max_norm<S>((kron(rep.E[i], I) + kron(rep.K[i], rep.E[i])) * d.R));
    invariance = std::max(invariance, max_norm<S>((kron(rep.F[i], rep.Kinv[i]) + kron(I, rep.F[i])) * d.R));
    invariance = std::max(invariance, max_norm<S>(kron(rep.K[i], rep.K[i]) * d.R - d.R));
  }
  r.add("R-invariant", invariance, tol);

  const Mat<S> Rt = d.R.transpose();
  r.add("conjugate-left", max_norm<S>(kron(I, Rt) * kron(d.R, I) - I), tol);
  r.add("conjugate-right", max_norm<S>(kron(Rt, I) * kron(I, d.R) - I), tol);

  const Mat<S> middle = kron(kron(I, d.R), I);  // 1 (x) R (x) 1 on H (x) H
  const Mat<S> spread = middle * d.R;
  r.add("self-duality-left", max_norm<S>(kron(I49, Rt) * spread - d.R), tol);
  r.add("self-duality-right", max_norm<S>(kron(Rt, I49) * spread - d.R), tol);

  // R^T R = sum W_i^2 = tr pi(K_{2rho})^{-1}, against the loop value
  const S delta = to_scalar<S>(constants().delta.eval_at(rep.exact_q));
  r.add("RdaggerR-delta", to_double<S>(abs((Rt * d.R)(0, 0) - delta)), tol);
  r.add("quantum-dimension", to_double<S>(abs(k2rho.inverse().trace() - delta)), tol);
  return r;
}

namespace {

// sum_k A^{(x) k} (x) X (x) B^{(x) (n-k-1)}
Mat<double> spread(const Mat<double>& A, const Mat<double>& X, const Mat<double>& B, int n) {
  Mat<double> total;
  for (int k = 0; k < n; ++k) {
    Mat<double> term = identity<double>(1);
    for (int p = 0; p < n; ++p) term = kron(term, p < k ? A : p == k ? X : B);
    total = k == 0 ? term : Mat<double>(total + term);
  }
  return total;
}

}  // namespace

InvariantDim invariant_dims(const Rep7<double>& rep, int n, double threshold, double min_gap) {
  if (n < 1 || n > 3) throw std::invalid_argument("tensor power must be 1, 2 or 3");
  const Mat<double> I = identity<double>(kDim);
  std::vector<Mat<double>> blocks;
  for (int i = 0; i < 2; ++i) {
    blocks.push_back(spread(rep.K[i], rep.E[i], I, n));     // E (x) 1 + K (x) E
    blocks.push_back(spread(I, rep.F[i], rep.Kinv[i], n));  // F (x) K^{-1} + 1 (x) F
    Mat<double> k = identity<double>(1);
    for (int p = 0; p < n; ++p) k = kron(k, rep.K[i]);
    blocks.push_back(k - identity<double>(static_cast<int>(k.rows())));
  }
  const Eigen::Index cols = blocks.front().cols();
  Mat<double> stacked(static_cast<Eigen::Index>(blocks.size()) * cols, cols);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    stacked.middleRows(static_cast<Eigen::Index>(b) * cols, cols) = blocks[b];

  Eigen::VectorXd sv = Eigen::BDCSVD<Mat<double>>(stacked).singularValues();
  InvariantDim out;
  out.n = n;
  const double top = sv.size() ? sv(0) : 0;
  double smallest_kept = std::numeric_limits<double>::infinity(), largest_dropped = 0;
  bool any_dropped = false;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double rel = top > 0 ? sv(i) / top : 0;
    out.singular_values.push_back(rel);
    if (rel > threshold) {
      smallest_kept = std::min(smallest_kept, rel);
    } else {
      any_dropped = true;
      largest_dropped = std::max(largest_dropped, rel);
    }
  }
  // columns beyond the rank of a tall matrix are all reported, so the kernel
  // dimension is the number of dropped values
  out.dim = static_cast<int>(std::count_if(out.singular_values.begin(), out.singular_values.end(),
                                            [&](double v) { return v <= threshold; }));
  if (!any_dropped)
    out.gap = smallest_kept / threshold;
  else if (std::isinf(smallest_kept))
    out.gap = largest_dropped > 0 ? threshold / largest_dropped : std::numeric_limits<double>::infinity();
  else
    out.gap = largest_dropped > 0 ? smallest_kept / largest_dropped : std::numeric_limits<double>::infinity();
  out.verdict = out.gap >= min_gap ? Verdict::pass : Verdict::inconclusive;
  return out;
}

template <class S>
Report basis_normalization(const Rep7<S>& rep, double tol) {
  const Mat<S>& f1 = rep.F[0];
  const Mat<S>& f2 = rep.F[1];
  const S& q = rep.q;
  const S two = qnumber(2, q);
  Mat<S> v0 = Mat<S>::Zero(kDim, 1);
  v0(0, 0) = S(1);
  const std::array<Mat<S>, kDim> v = {
      v0,
      rep.s * f1 * v0,
      q * q * f2 * f1 * v0,
      ipow(q, 3) * sqrt(two) * f1 * f2 * f1 * v0,
      ipow(q, 3) / two * f1 * f1 * f2 * f1 * v0,
      ipow(q, 4) * rep.s / two * f2 * f1 * f1 * f2 * f1 * v0,
      ipow(q, 5) / two * f1 * f2 * f1 * f1 * f2 * f1 * v0,
  };
  Report r;
  for (int k = 0; k < kDim; ++k) {
    Mat<S> e = Mat<S>::Zero(kDim, 1);
    e(k, 0) = S(1);
    r.add("basis-v" + std::to_string(k), max_norm<S>(v[k] - e), tol);
  }
  return r;
}

namespace {

template <class S>
Report suite_at(const mpq_class& q, double tol) {
  const Rep7<S> rep = build_rep<S>(q);
  Report r = verify_relations(rep, tol);
  r.merge(duality_suite(rep, tol, std::min(tol, 1e-12)));
  return r;
}

}  // namespace

Report full_suite(const mpq_class& q, int precision_bits, double tol) {
  if (precision_bits < 53 || precision_bits > 113)
    throw std::invalid_argument("precision must be between 53 and 113 bits");
  Report r = precision_bits == 53 ? suite_at<double>(q, tol) : suite_at<Quad>(q, tol);
  const Rep7<double> rep = build_rep<double>(q);
  constexpr int expected[] = {0, 1, 1};
  for (int n = 1; n <= 3; ++n) {
    const InvariantDim d = invariant_dims(rep, n);
    CheckResult c{"invariant-dim-n" + std::to_string(n), std::abs(double(d.dim - expected[n - 1])), 0,
                  d.verdict};
    if (c.verdict == Verdict::pass && d.dim != expected[n - 1]) c.verdict = Verdict::fail;
    r.add(c);
  }
  return r;
}

#define G2_UQG2_INSTANTIATE(S)                                           \
  template S qnumber<S>(int, const S&);                                  \
  template S qbinomial<S>(int, int, const S&);                           \
  template Rep7<S> build_rep<S>(const mpq_class&);                       \
  template Report verify_relations<S>(const Rep7<S>&, double);           \
  template DualityData<S> build_duality<S>(const Rep7<S>&);              \
  template std::array<Mat<S>, 8> unitary_dual<S>(const Rep7<S>&);        \
  template Report duality_suite<S>(const Rep7<S>&, double, double);      \
  template Report basis_normalization<S>(const Rep7<S>&, double);

G2_UQG2_INSTANTIATE(double)
G2_UQG2_INSTANTIATE(Quad)

}  // namespace g2::uqg2
