#include "g2/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace g2 {

FusionPoly::FusionPoly(const RatFunc& constant) { add({0, 0}, constant); }

FusionPoly FusionPoly::monomial(const RatFunc& c, int first, int second) {
  FusionPoly p;
  p.add({first, second}, c);
  return p;
}

void FusionPoly::add(const Exponents& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc FusionPoly::coeff(int first, int second) const {
  auto it = terms_.find({first, second});
  return it == terms_.end() ? RatFunc() : it->second;
}

int FusionPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

FusionPoly operator+(const FusionPoly& a, const FusionPoly& b) {
  FusionPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

FusionPoly operator-(const FusionPoly& a, const FusionPoly& b) {
  FusionPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, -c);
  return out;
}

FusionPoly operator*(const FusionPoly& a, const FusionPoly& b) {
  FusionPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

FusionPoly FusionPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  FusionPoly out(RatFunc(1)), base = *this;
  for (; e > 0; e >>= 1, base = base * base)
    if (e & 1) out = out * base;
  return out;
}

FusionPoly FusionPoly::derivative(int var) const {
  FusionPoly out;
  for (const auto& [e, c] : terms_) {
    int k = var == 0 ? e.first : e.second;
    if (k == 0) continue;
    Exponents d = var == 0 ? Exponents{k - 1, e.second} : Exponents{e.first, k - 1};
    out.add(d, RatFunc(k) * c);
  }
  return out;
}

FusionPoly FusionPoly::substitute_first(const FusionPoly& r) const {
  FusionPoly out;
  for (const auto& [e, c] : terms_) out = out + monomial(c, 0, e.second) * r.pow(e.first);
  return out;
}

RatFunc FusionPoly::eval(const RatFunc& first, const RatFunc& second) const {
  RatFunc sum;
  for (const auto& [e, c] : terms_) sum += c * first.pow(e.first) * second.pow(e.second);
  return sum;
}

namespace {
mpq_class mpq_pow(const mpq_class& x, int e) {
  mpq_class r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace

mpq_class FusionPoly::eval(const mpq_class& qval, const mpq_class& first,
                           const mpq_class& second) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_)
    sum += c.eval_at(qval) * mpq_pow(first, e.first) * mpq_pow(second, e.second);
  return sum;
}

std::string FusionPoly::to_string(const char* first, const char* second) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += " + ";
    s += c.to_string();
    if (e.first) s += std::string("*") + first + (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second)
      s += std::string("*") + second + (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return s;
}

FusionPoly delta_map(const Mor22Element& m) {
  const RatFunc& d = constants().delta;
  return FusionPoly::monomial(m[Basis22::id2], 0, 2) + FusionPoly(m[Basis22::E] * d) +
         FusionPoly::monomial(m[Basis22::I], 0, 1) + FusionPoly::monomial(m[Basis22::H], 1, 0);
}

RatFunc kappa() {
  RatFunc q = RatFunc::q();
  RatFunc q2 = q.pow(2);
  return q.pow(4) * (1 + q2).pow(2) / ((1 + q2 + q.pow(4)) * (1 + q.pow(8)));
}

FusionPoly h_basis(const FusionPoly& in_yplus) {
  // Delta(y_plus) in terms of h and x
  return in_yplus.substitute_first(delta_map(idempotents().y_plus));
}

FusionPoly yplus_basis(const FusionPoly& in_h) {
  // h = kappa (Y - Delta(y_plus without its H part))
  Mor22Element rest = idempotents().y_plus;
  rest[Basis22::H] = RatFunc();
  FusionPoly h = FusionPoly(kappa()) * (FusionPoly::first() - delta_map(rest));
  return in_h.substitute_first(h);
}

FusionPoly f_poly_formula() {
  const SkeinConstants& k = constants();
  const RatFunc &d = k.delta, &c = k.c, &xi = k.xi;
  const RatFunc c2 = c * c;
  RatFunc constant = d * (-(d + 1) * c2 - xi + 1) / (-2 * xi);
  RatFunc t2 = (d * (c2 - 2 * c - 2) + xi + c2 - 2 * c - 1) / (-2 * d * xi);
  RatFunc alpha = -(d * (c + 2) * c - xi + c2 + 1) / (-2 * xi);
  RatFunc t1 = (d * c + d + c) / (-xi);
  return FusionPoly(constant) + FusionPoly::monomial(t2, 0, 2) +
         FusionPoly::monomial(alpha, 1, 0) + FusionPoly::monomial(t1, 0, 1);
}

FusionPoly f_poly_rotation() { return delta_map(rotate(idempotents().y_minus)); }

const FusionPoly& f_poly() {
  static const FusionPoly f = [] {
    FusionPoly a = f_poly_formula();
    if (!(a == f_poly_rotation())) throw Defect("the two derivations of f disagree");
    return a;
  }();
  return f;
}

Partials partials() {
  const FusionPoly& f = f_poly();
  const RatFunc zero, d = constants().delta;
  return {f.derivative(0).eval(zero, d), f.derivative(1).eval(zero, d),
          f.derivative(1).derivative(1).eval(zero, d)};
}

Partials partials_closed_form() {
  RatFunc q = RatFunc::q();
  RatFunc q2 = q.pow(2), q4 = q.pow(4), q6 = q.pow(6), q8 = q.pow(8);
  Partials p;
  p.f_alpha = -(1 + q2 + 2 * q4 + q6 + q8) / (q + q.pow(3)).pow(2);
  p.f_t = (q2 - 1).pow(2) * (1 + q2 + q4) / q4;
  p.f_tt = 2 * q6 * (1 + q2 + q4) /
           ((1 + q2).pow(2) * (1 + q2 + q4 + q6 + q8 + q.pow(10) + q.pow(12)));
  return p;
}

namespace {

bool nonnegative_coeffs(const Poly& p) {
  return !p.is_zero() && std::all_of(p.coeffs().begin(), p.coeffs().end(),
                                     [](const mpz_class& c) { return c >= 0; });
}

// Positive at every q > 0: a ratio of nonzero polynomials with nonnegative
// coefficients (each is positive on q > 0).
bool positive_on_positive_reals(const RatFunc& r) {
  return nonnegative_coeffs(r.numerator()) && nonnegative_coeffs(r.denominator());
}

}  // namespace

SignProof sign_proof() {
  Partials p = partials();
  RatFunc q2m1 = RatFunc::q().pow(2) - 1;
  SignProof s;
  s.f_alpha_negative = positive_on_positive_reals(-p.f_alpha);
  // (q^2-1)^2 vanishes only at q = 1 on q > 0
  s.f_t_positive_off_one = positive_on_positive_reals(p.f_t / (q2m1 * q2m1));
  s.f_tt_positive = positive_on_positive_reals(p.f_tt);
  return s;
}

Certificate certificate(const mpq_class& qval) {
  if (qval <= 0) throw EvaluationError("q must be positive");
  Partials p = partials();
  Certificate c;
  c.qval = qval;
  c.delta = constants().delta.eval_at(qval);
  c.f_alpha = p.f_alpha.eval_at(qval);
  c.f_t = p.f_t.eval_at(qval);
  c.f_tt = p.f_tt.eval_at(qval);
  c.lambda = c.f_tt / 2;
  c.M = std::max(c.f_alpha, mpq_class(-c.f_t));
  if (c.f_alpha < 0 && c.f_t > 0) {
    c.epsilon = abs(c.M) / c.lambda;
    c.status = CertificateStatus::certified;
  } else {
    c.epsilon = 0;
    c.status = CertificateStatus::degenerate;
  }
  return c;
}

SampleReport sample_quarter_disc(const Certificate& cert, int count) {
  SampleReport r;
  if (cert.status != CertificateStatus::certified || count <= 0) return r;
  std::map<FusionPoly::Exponents, mpq_class> coeffs;
  for (const auto& [e, c] : f_poly().terms()) coeffs[e] = c.eval_at(cert.qval);
  auto f = [&](const mpq_class& a, const mpq_class& t) {
    mpq_class sum = 0;
    for (const auto& [e, c] : coeffs) sum += c * mpq_pow(a, e.first) * mpq_pow(t, e.second);
    return sum;
  };
  const int angles = 101;
  const int radii = (count + angles - 1) / angles;
  const double eps = cert.epsilon.get_d();
  const mpq_class eps2 = cert.epsilon * cert.epsilon;
  bool first = true;
  for (int i = 1; i <= radii; ++i) {
    const double rad = eps * i / (radii + 1);
    for (int j = 0; j < angles; ++j) {
      const double th = -std::numbers::pi / 2 * j / (angles - 1);
      mpq_class x(std::max(0.0, rad * std::cos(th))), y(std::min(0.0, rad * std::sin(th)));
      mpq_class n2 = x * x + y * y;
      if (n2 == 0 || n2 >= eps2) continue;
      mpq_class v = f(x, cert.delta + y);
      ++r.samples;
      if (v < 0) ++r.negative;
      if (first || v > r.worst) r.worst = v;
      first = false;
    }
  }
  return r;
}

namespace {
const char* status_name(CertificateStatus s) {
  return s == CertificateStatus::certified ? "certified" : "degenerate";
}
}  // namespace

std::string render(const Certificate& c, int digits) {
  std::ostringstream os;
  os << "qval=" << to_decimal(c.qval, digits) << "\n"
     << "delta=" << to_decimal(c.delta, digits) << "\n"
     << "f_alpha=" << to_decimal(c.f_alpha, digits) << "\n"
     << "f_t=" << to_decimal(c.f_t, digits) << "\n"
     << "f_tt=" << to_decimal(c.f_tt, digits) << "\n"
     << "lambda=" << to_decimal(c.lambda, digits) << "\n"
     << "M=" << to_decimal(c.M, digits) << "\n"
     << "epsilon=" << to_decimal(c.epsilon, digits) << "\n"
     << "status=" << status_name(c.status) << "\n";
  return os.str();
}

std::string render_json(const Certificate& c, int digits) {
  nlohmann::ordered_json j;
  auto field = [&](const char* name, const mpq_class& v) {
    j[name] = {{"decimal", to_decimal(v, digits)}, {"exact", v.get_str()}};
  };
  field("qval", c.qval);
  field("delta", c.delta);
  field("f_alpha", c.f_alpha);
  field("f_t", c.f_t);
  field("f_tt", c.f_tt);
  field("lambda", c.lambda);
  field("M", c.M);
  field("epsilon", c.epsilon);
  j["status"] = status_name(c.status);
  return j.dump(2) + "\n";
}

namespace {

std::vector<mpq_class> axis(const ScanRange& r, int steps, const mpq_class& anchor) {
  std::vector<mpq_class> v;
  for (int i = 0; i < steps; ++i) v.push_back(r.lo + (r.hi - r.lo) * mpq_class(i, steps - 1));
  if (anchor >= r.lo && anchor <= r.hi && std::find(v.begin(), v.end(), anchor) == v.end()) {
    v.push_back(anchor);
    std::sort(v.begin(), v.end());
  }
  return v;
}

}  // namespace

std::vector<ScanRow> scan(const mpq_class& qval, const ScanRange& alpha, const ScanRange& t,
                          int steps, int threads) {
  if (qval <= 0) throw EvaluationError("q must be positive");
  if (steps < 2) throw std::invalid_argument("scan needs at least 2 steps per axis");
  if (alpha.lo > alpha.hi || t.lo > t.hi) throw std::invalid_argument("scan range is empty");
  threads = std::max(threads, 1);
  const mpq_class delta = constants().delta.eval_at(qval);
  const auto as = axis(alpha, steps, 0);
  const auto ts = axis(t, steps, delta);
  std::map<FusionPoly::Exponents, mpq_class> coeffs;
  for (const auto& [e, c] : f_poly().terms()) coeffs[e] = c.eval_at(qval);

  std::vector<ScanRow> rows(as.size() * ts.size());
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < as.size(); i += static_cast<std::size_t>(threads))
      for (std::size_t j = 0; j < ts.size(); ++j) {
        ScanRow& row = rows[i * ts.size() + j];
        row.alpha = as[i];
        row.t = ts[j];
        row.f = 0;
        for (const auto& [e, c] : coeffs)
          row.f += c * mpq_pow(row.alpha, e.first) * mpq_pow(row.t, e.second);
        std::string reasons;
        auto reject = [&](const char* why) { reasons += (reasons.empty() ? "" : ";") + std::string(why); };
        if (row.alpha < 0) reject("alpha<0");
        if (abs(row.t) > delta) reject("|t|>delta");
        if (row.f < 0) reject("f<0");
        row.prefilter = reasons.empty() ? "pass" : reasons;
      }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(work, static_cast<std::size_t>(k));
  work(0);
  for (auto& th : pool) th.join();
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, int digits) {
  std::ostringstream os;
  os << "alpha,t,f,prefilter\n";
  for (const auto& r : rows)
    os << to_decimal(r.alpha, digits) << ',' << to_decimal(r.t, digits) << ','
       << to_decimal(r.f, digits) << ',' << r.prefilter << '\n';
  return os.str();
}

}  // namespace g2
