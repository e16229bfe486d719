#pragma once

/**
 * @file uqg2.hpp
 * @brief Numeric checks on the 7-dimensional unitary representation of
 * U_q(g2): defining relations, the unitary dual, the duality vector R and the
 * dimensions of invariant subspaces of tensor powers.
 *
 * Matrices act on the ordered basis v0..v6. The conjugate space is a second
 * copy of the same ordered basis; for a real matrix f the antilinear
 * transport j(f) is the transpose. Half-integer powers of q enter through
 * s = sqrt(q) only.
 */

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace g2::uqg2 {

/// 113-bit significand, no expression templates (Eigen requirement).
using Quad = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float_quad::backend_type, boost::multiprecision::et_off>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

struct CartanData {
  std::array<std::array<int, 2>, 2> a{{{2, -3}, {-1, 2}}};
  std::array<int, 2> d{1, 3};
  /// A_ij = d_i a_ij
  [[nodiscard]] std::array<std::array<int, 2>, 2> inner_product() const;
};

inline constexpr int kDim = 7;

template <class S>
struct Rep7 {
  mpq_class exact_q;
  S q, s;                   // s = sqrt(q)
  std::array<S, 2> qi;      // q^{d_i}
  std::array<Mat<S>, 2> E, F, K, Kinv;
  bool classical = false;   // q == 1: the commutator relation is undefined
};

/// The explicit matrices at q; F_i = E_i^T K_i^{-1}. Throws std::invalid_argument
/// for q <= 0.
template <class S>
Rep7<S> build_rep(const mpq_class& q);

/// [n]_x = x^{n-1} + x^{n-3} + ... + x^{1-n}; finite at x = 1.
template <class S>
S qnumber(int n, const S& x);
template <class S>
S qbinomial(int m, int k, const S& x);

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  double residual = 0;
  double tol = 0;
  Verdict verdict = Verdict::pass;
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, double tol);
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const Report& other);
  [[nodiscard]] bool passed() const;
  [[nodiscard]] int count(Verdict v) const;
  [[nodiscard]] const CheckResult* find(const std::string& name) const;
};

/// One line per check, `<name> <residual> <verdict>`, then a summary line.
std::string render(const Report& r);

/// K_i K_i^{-1}, commuting K's, K E K^{-1}, K F K^{-1}, [E_i, F_j], both Serre
/// families and the star structure on all six generators. Max-norm residuals.
template <class S>
Report verify_relations(const Rep7<S>& rep, double tol);

template <class S>
struct DualityData {
  Mat<S> W;  // pi(K_{2rho})^{-1/2}
  Mat<S> T;  // H -> conj(H), T v_i = (-1)^{i+1} conj(v)_{8-i} (1-based i)
  Mat<S> R;  // 49 x 1, coefficient of v_a (x) v_b at row 7a + b
};

template <class S>
DualityData<S> build_duality(const Rep7<S>& rep);

/// pi-bar(x) = pi(R_q(x))^T for each generator, in the order K1, K2, E1, E2,
/// F1, F2, K1^{-1}, K2^{-1}.
template <class S>
std::array<Mat<S>, 8> unitary_dual(const Rep7<S>& rep);

/// W pairing, W^2 K_{2rho} = 1, T unitary and self-adjoint, T in (pi, pi-bar),
/// agreement of the two realizations of pi-bar, T^* j(W) = W^{-1} T^*, R
/// invariant, both conjugate equations, symmetric self-duality, R^T R = delta
/// and the quantum-dimension trace. `pair_tol` is applied to W_i W_{8-i} = 1
/// and the T identities, `tol` to the rest.
template <class S>
Report duality_suite(const Rep7<S>& rep, double tol, double pair_tol = 1e-12);

struct InvariantDim {
  int n = 0;
  int dim = 0;
  double gap = 0;  // smallest kept / largest discarded singular value
  Verdict verdict = Verdict::pass;
  std::vector<double> singular_values;  // descending, relative to the largest
};

/// Dimension of the joint kernel of E_i, F_i and K_i - 1 acting on H^{(x) n}
/// through the coproduct. Singular values are taken relative to the largest;
/// those at or below `threshold` count as zero. A gap smaller than `min_gap`
/// makes the count inconclusive.
InvariantDim invariant_dims(const Rep7<double>& rep, int n, double threshold = 1e-6,
                            double min_gap = 1e3);

/// Basis vectors defined as normalized words in F_1, F_2 applied to v0,
/// recomputed and compared with the unit vectors. Informational: not part of any pass
/// criterion.
template <class S>
Report basis_normalization(const Rep7<S>& rep, double tol);

/// verify_relations + duality_suite at the requested precision (53 or up to
/// 113 bits), plus invariant dimensions for n = 1..3 in double precision.
/// Throws std::invalid_argument for q <= 0 or precision outside [53, 113].
Report full_suite(const mpq_class& q, int precision_bits, double tol);

}  // namespace g2::uqg2
