#include "g2/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace g2 {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly Poly::monomial(const mpz_class& c, int k) {
  if (c == 0) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  return divexact(content());
}

Poly Poly::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::divexact(const mpz_class& s) const {
  if (s == 1) return *this;
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v;
  if (k > 0) {
    v.assign(static_cast<std::size_t>(k), mpz_class(0));
    v.insert(v.end(), c_.begin(), c_.end());
  } else {
    if (-k > valuation()) throw std::logic_error("Poly::shifted: inexact division by q");
    v.assign(c_.begin() + (-k), c_.end());
  }
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

mpz_class Poly::max_abs_coeff() const {
  mpz_class m = 0;
  for (const auto& x : c_)
    if (abs(x) > m) m = abs(x);
  return m;
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class Poly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Poly::eval(double x) const { return eval_as<double>(x); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  std::vector<mpz_class> v = big;
  for (std::size_t i = 0; i < small.size(); ++i) v[i] += small[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    mpz_class a = abs(c);
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += k == 1 ? std::string("q") : "q^" + std::to_string(k);
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Poly();
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<mpz_class> quot(static_cast<std::size_t>(da - db) + 1);
  auto bc = b.coeffs();
  const mpz_class& lc = b.leading();
  for (int i = da - db; i >= 0; --i) {
    mpz_class& top = r[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class qi;
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[i + j].get_mpz_t(), qi.get_mpz_t(), bc[j].get_mpz_t());
    quot[i] = std::move(qi);
  }
  for (int j = 0; j < db; ++j)
    if (r[j] != 0) return std::nullopt;
  return Poly(std::move(quot));
}

namespace {

Poly positive_leading(Poly p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  Poly r = a;
  const int db = b.degree();
  const mpz_class lc = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    Poly t = b.scaled(r.leading()).shifted(r.degree() - db);
    r = r.scaled(lc) - t;
  }
  return r;
}

Poly gcd_prs(Poly a, Poly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (true) {
    Poly r = pseudo_remainder(a, b);
    if (r.is_zero()) return positive_leading(b.primitive());
    if (r.degree() == 0) return Poly(1);
    a = std::move(b);
    b = r.primitive();
  }
}

// Heuristic gcd (Char, Geddes, Gonnet): evaluate at a large integer, take the
// integer gcd, and read the polynomial back off its balanced xi-adic digits.
// The candidate is accepted only after exact trial division, so a miss costs
// time, never correctness.
std::optional<Poly> gcd_heuristic(const Poly& a, const Poly& b) {
  mpz_class xi = 2 * std::min(a.max_abs_coeff(), b.max_abs_coeff()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class gamma;
    mpz_class av = a.eval(xi);
    mpz_class bv = b.eval(xi);
    mpz_gcd(gamma.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    std::vector<mpz_class> digits;
    mpz_class half = xi / 2;
    while (gamma != 0) {
      mpz_class d;
      mpz_fdiv_r(d.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      digits.push_back(d);
      gamma -= d;
      mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    }
    Poly g = positive_leading(Poly(std::move(digits)).primitive());
    if (!g.is_zero() && divide_exact(a, g) && divide_exact(b, g)) return g;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const int va = a.valuation();
  const int vb = b.valuation();
  Poly pa = a.divexact(ca).shifted(-va);
  Poly pb = b.divexact(cb).shifted(-vb);
  Poly g(1);
  if (pa.degree() > 0 && pb.degree() > 0) {
    if (pa == pb || pa == -pb) {
      g = positive_leading(pa);
    } else if (auto h = gcd_heuristic(pa, pb)) {
      g = *h;
    } else {
      g = gcd_prs(pa, pb);
    }
  }
  return g.scaled(c).shifted(std::min(va, vb));
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const mpq_class& c)
    : num_(Poly(std::vector<mpz_class>{c.get_num()})), den_(Poly(std::vector<mpz_class>{c.get_den()})) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c != 1) {
    num_ = num_.divexact(c);
    den_ = den_.divexact(c);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::laurent(std::initializer_list<std::pair<int, long>> terms) {
  int low = 0;
  for (const auto& [k, c] : terms) low = std::min(low, k);
  Poly num;
  for (const auto& [k, c] : terms) num = num + Poly::monomial(c, k - low);
  return {num, Poly::monomial(1, -low)};
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.leading() < 0) return {Raw{}, -den_, -num_};
  return {Raw{}, den_, num_};
}

RatFunc RatFunc::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

mpq_class RatFunc::eval_at(const mpq_class& qval) const {
  if (qval <= 0) throw EvaluationError("q must be positive");
  mpq_class d = den_.eval(qval);
  if (d == 0) throw EvaluationError("denominator vanishes at q");
  mpq_class r = num_.eval(qval) / d;
  r.canonicalize();
  return r;
}

double RatFunc::eval_at(double qval) const { return eval_as<double>(qval); }

RatFunc RatFunc::operator-() const { return {Raw{}, -num_, den_}; }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool equals(const RatFunc& x, const RatFunc& y) {
  return (x.numerator() * y.denominator() - y.numerator() * x.denominator()).is_zero();
}

std::string RatFunc::to_string() const {
  std::string s = "(" + num_.to_string() + ")";
  if (!den_.is_one()) s += "/(" + den_.to_string() + ")";
  return s;
}

// ---------------------------------------------------------------- parsing

namespace {

class RatFuncParser {
 public:
  explicit RatFuncParser(std::string_view text) : s_(text) {}

  RatFunc run() {
    RatFunc v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = i_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    RatFunc b = base();
    if (accept('^')) {
      skip();
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else {
        accept('+');
      }
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, i_ - start)));
      if (neg && b.is_zero()) throw ParseError("division by zero", start);
      b = b.pow(neg ? -e : e);
    }
    return b;
  }

  RatFunc base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == 'q') {
      ++i_;
      return RatFunc::q();
    }
    if (c == '(') {
      ++i_;
      RatFunc v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.'))
        ++i_;
      return RatFunc(parse_rational(s_.substr(start, i_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return RatFuncParser(text).run(); }

mpq_class parse_rational(std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) throw ParseError("empty number", 0);
  auto parse_int = [&](const std::string& s, std::size_t offset) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("expected digit", offset + j);
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (auto slash = t.find('/'); slash != std::string::npos) {
    mpz_class n = parse_int(t.substr(0, slash), 0);
    mpz_class d = parse_int(t.substr(slash + 1), slash + 1);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    mpq_class r(n, d);
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool neg = false;
  if (t[i] == '+' || t[i] == '-') neg = t[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  bool any = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any = true;
      if (seen_dot) ++scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) throw ParseError("expected digits", i);
  long exponent = 0;
  if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
    exponent = parse_int(t.substr(i + 1), i + 1).get_si();
    i = t.size();
  }
  if (i != t.size()) throw ParseError("unexpected character in number", i);
  mpz_class n(digits, 10);
  if (neg) n = -n;
  long e10 = exponent - scale;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
  mpq_class r = e10 >= 0 ? mpq_class(n * p) : mpq_class(n, p);
  r.canonicalize();
  return r;
}

std::string to_decimal(const mpq_class& x, int significant) {
  if (x == 0) return "0";
  mpf_class f(x, 512);
  char buf[256];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", significant, f.get_mpf_t());
  return buf;
}

}  // namespace g2
