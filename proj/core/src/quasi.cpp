#include "symm/quasi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "symm/bezout.hpp"
#include "symm/errors.hpp"
#include "symm/linalg.hpp"
#include "symm/spectral.hpp"

namespace symm {
namespace {

/// Roots of a strictly hyperbolic family member, as exact rationals, with
/// the signed diagonal d_k = (GR)_kk = (−1)^{k+m} Π_{j≠k}(λ_k − λ_j).
struct RootData {
  std::vector<double> roots;
  std::vector<Rational> exact;
  std::vector<Rational> d;
};

RootData root_data(const RootProfile<double>& prof) {
  if (!prof.is_simple()) throw MultipleRootError("quasi-symmetrizer: family member has a multiple root");
  RootData rd;
  rd.roots = prof.flattened();
  const std::size_t m = rd.roots.size();
  for (double x : rd.roots) rd.exact.push_back(to_rational(x));
  for (std::size_t k = 0; k < m; ++k) {
    Rational prod(1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) prod *= rd.exact[k] - rd.exact[j];
    // 0-based k: the 1-based sign (−1)^{k+1+m}.
    rd.d.push_back((k + 1 + m) % 2 == 0 ? prod : Rational(-prod));
  }
  return rd;
}

/// Columns of G^{−1} = R diag(1/d).
std::vector<std::vector<Rational>> inverse_g_columns(const RootData& rd) {
  const std::size_t m = rd.exact.size();
  std::vector<std::vector<Rational>> cols(m, std::vector<Rational>(m));
  for (std::size_t k = 0; k < m; ++k) {
    Rational power(1);
    for (std::size_t i = 0; i < m; ++i) {
      cols[k][i] = power / rd.d[k];
      power *= rd.exact[k];
    }
  }
  return cols;
}

Rational bilinear(const Matrix<Rational>& k, const std::vector<Rational>& z, const std::vector<Rational>& w) {
  Rational acc(0);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (is_zero(w[i])) continue;
    Rational row(0);
    for (std::size_t j = 0; j < k.cols(); ++j) row += k(i, j) * z[j];
    acc += w[i] * row;
  }
  return acc;
}

double row_cond1(const RootData& rd, double eps, double r) {
  double worst = std::numeric_limits<double>::infinity();
  for (const Rational& d : rd.d) worst = std::min(worst, std::fabs(to_double(d)));
  return worst / std::pow(eps, r);
}

double row_cond2(const RootData& rd, const RationalPolynomial& q_eps, double eps, double s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < rd.exact.size(); ++k) {
    const double qv = q_eps.is_zero() ? 0.0 : std::fabs(to_double(q_eps(rd.exact[k])));
    worst = std::max(worst, qv / (std::pow(eps, s) * std::fabs(to_double(rd.d[k]))));
  }
  return worst;
}

}  // namespace

FamilySupplier nuij_family(const RationalPolynomial& p, double tol) {
  return [p, tol](double epsilon) { return nuij_family_point(p, epsilon, tol); };
}

QuasiConditions check_conditions(const FamilySupplier& family, const std::vector<double>& grid, double r, double s) {
  QuasiConditions out;
  out.r = r;
  out.s = s;
  out.c_lower = std::numeric_limits<double>::infinity();
  for (double eps : grid) {
    const NuijFamilyPoint pt = family(eps);
    ConditionRow row;
    row.epsilon = eps;
    if (pt.roots_eps.is_simple()) {
      const RootData rd = root_data(pt.roots_eps);
      row.cond1 = row_cond1(rd, eps, r);
      row.cond2 = row_cond2(rd, pt.q_eps, eps, s);
    } else {
      row.cond1 = 0.0;
      row.cond2 = std::numeric_limits<double>::infinity();
    }
    out.c_lower = std::min(out.c_lower, row.cond1);
    out.C_upper = std::max(out.C_upper, row.cond2);
    out.rows.push_back(row);
  }
  return out;
}

QuasiConditions check_conditions(const RationalPolynomial& p, const std::vector<double>& grid, double r, double s,
                                 double tol) {
  if (!p.is_monic()) throw NonMonicError("check_conditions");
  return check_conditions(nuij_family(p, tol), grid, r, s);
}

CommutatorDecomposition commutator_decomposition(const RationalPolynomial& p, double epsilon, double tol) {
  const NuijFamilyPoint pt = nuij_family_point(p, epsilon, tol);
  const RootData rd = root_data(pt.roots_eps);
  const std::size_t m = rd.roots.size();
  CommutatorDecomposition out;
  out.epsilon = epsilon;
  out.a = sylvester_matrix(p).a;
  out.a_eps = sylvester_matrix(pt.p_eps).a;
  out.q_eps = out.a - out.a_eps;
  out.g_eps = g_matrix(std::span<const double>(rd.roots));
  out.s_eps = Matrix<double>(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const Rational qv = pt.q_eps.is_zero() ? Rational(0) : pt.q_eps(rd.exact[k]);
    out.s_eps(m - 1, k) = -to_double(Rational(qv / rd.d[k]));
  }
  out.qsg_residual = max_abs(Matrix<double>(out.q_eps.cast<double>() - out.s_eps * out.g_eps));
  return out;
}

double tail_slope(const std::vector<double>& eps, const std::vector<double>& values, Trend trend) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (eps.empty() || eps.size() != values.size()) return kInf;
  for (double x : values)
    if (!std::isfinite(x) || (trend == Trend::kMustNotDecay && !(x > 0.0))) return kInf;
  const double lo = *std::min_element(eps.begin(), eps.end());
  std::size_t top = 0;
  bool found = false;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] <= 10.0 * lo * (1 + 1e-12) && (!found || eps[i] > eps[top])) {
      top = i;
      found = true;
    }
  const double span = std::log(eps[top] / lo);
  if (!(span > 0.0)) return 0.0;
  double worst = 1.0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] > eps[top]) continue;
    if (trend == Trend::kMustNotDecay)
      worst = std::max(worst, values[top] / values[i]);
    else if (values[top] > 0.0)
      worst = std::max(worst, values[i] / values[top]);
    else if (values[i] > 0.0)
      return kInf;
  }
  return std::log(worst) / span;
}

QuasiVerdict verify_quasi(const RationalPolynomial& p, const std::vector<double>& grid, double r, double s,
                          int samples, std::uint64_t seed, double tol) {
  if (!p.is_monic()) throw NonMonicError("verify_quasi");
  if (grid.empty()) throw std::invalid_argument("verify_quasi: empty epsilon grid");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const Matrix<Rational> a = sylvester_matrix(p).a;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);

  QuasiVerdict v;
  v.r = r;
  v.s = s;
  v.samples_consistent = true;
  for (double eps : grid) {
    const NuijFamilyPoint pt = nuij_family_point(p, eps, tol);
    const RootData rd = root_data(pt.roots_eps);
    const Matrix<Rational> h = bezout_matrix(pt.p_eps, pt.p_eps.derivative()).h;
    const Matrix<Rational> a_eps = sylvester_matrix(pt.p_eps).a;
    const Matrix<Rational> k = h * a - a.transpose() * h;
    const auto cols = inverse_g_columns(rd);

    QuasiPoint row;
    row.epsilon = eps;
    row.a_eps_symmetrized = is_zero(asymmetry(Matrix<Rational>(h * a_eps)));
    row.cond1 = row_cond1(rd, eps, r);
    row.cond2 = row_cond2(rd, pt.q_eps, eps, s);

    // H_ε = ᵗG G, so λ_min(H_ε) = σ_max(G^{−1})^{−2}.
    Matrix<double> ginv(m, m);
    for (std::size_t kk = 0; kk < m; ++kk)
      for (std::size_t i = 0; i < m; ++i) ginv(i, kk) = to_double(cols[kk][i]);
    const double smax = spectral_norm(ginv);
    row.min_eigenvalue = 1.0 / (smax * smax);
    row.lower_bound_constant = row.min_eigenvalue / std::pow(eps, 2.0 * r);
    row.lower_bound_reciprocal = 1.0 / row.lower_bound_constant;

    // The bilinear bound becomes an operator norm after the congruence by G^{−1}.
    Matrix<double> kprime(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) kprime(i, j) = to_double(bilinear(k, cols[j], cols[i]));
    const double scale = std::pow(eps, s);
    row.commutator_constant = spectral_norm(kprime) / scale;

    // Sampling cross-check, half in the original coordinates and half
    // through G^{−1}, where the supremum is approached.
    const auto draw = [&]() {
      std::vector<Rational> z(m, Rational(0));
      const bool via_g = coin(rng);
      for (std::size_t i = 0; i < m; ++i) {
        const Rational x = to_rational(normal(rng));
        if (via_g) {
          for (std::size_t t = 0; t < m; ++t) z[t] += x * cols[i][t];
        } else {
          z[i] = x;
        }
      }
      return z;
    };
    for (int t = 0; t < samples; ++t) {
      const std::vector<Rational> z = draw();
      const std::vector<Rational> w = draw();
      const double hz = to_double(bilinear(h, z, z));
      const double hw = to_double(bilinear(h, w, w));
      if (!(hz > 0.0) || !(hw > 0.0)) continue;
      const double ratio = std::fabs(to_double(bilinear(k, z, w))) / (scale * std::sqrt(hz * hw));
      row.sampled_commutator = std::max(row.sampled_commutator, ratio);
    }
    if (row.sampled_commutator > row.commutator_constant * (1.0 + 1e-6) + 1e-12) v.samples_consistent = false;

    // Q_ε = S_ε G_ε, from the same roots.
    Matrix<double> g = g_matrix(std::span<const double>(rd.roots));
    Matrix<double> sm(m, m);
    for (std::size_t kk = 0; kk < m; ++kk) {
      const Rational qv = pt.q_eps.is_zero() ? Rational(0) : pt.q_eps(rd.exact[kk]);
      sm(m - 1, kk) = -to_double(Rational(qv / rd.d[kk]));
    }
    row.qsg_residual = max_abs(Matrix<double>(Matrix<Rational>(a - a_eps).cast<double>() - sm * g));
    v.rows.push_back(row);
  }

  double lo_min = std::numeric_limits<double>::infinity(), lo_max = 0.0;
  double cm_min = std::numeric_limits<double>::infinity(), cm_max = 0.0;
  std::vector<double> eps, lower, comm;
  for (const QuasiPoint& row : v.rows) {
    lo_min = std::min(lo_min, row.lower_bound_constant);
    lo_max = std::max(lo_max, row.lower_bound_constant);
    cm_min = std::min(cm_min, row.commutator_constant);
    cm_max = std::max(cm_max, row.commutator_constant);
    eps.push_back(row.epsilon);
    lower.push_back(row.lower_bound_constant);
    comm.push_back(row.commutator_constant);
  }
  const auto ratio = [](double hi, double lo) {
    return lo > 0.0 ? hi / lo : (hi > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  };
  v.lower_variation = ratio(lo_max, lo_min);
  v.commutator_variation = ratio(cm_max, cm_min);
  v.lower_tail_slope = tail_slope(eps, lower, Trend::kMustNotDecay);
  v.commutator_tail_slope = tail_slope(eps, comm, Trend::kMustNotGrow);
  v.lower_bounded = lo_min > 0.0 && std::isfinite(lo_max) && v.lower_tail_slope <= kMaxTailSlope;
  v.commutator_bounded = std::isfinite(cm_max) && v.commutator_tail_slope <= kMaxTailSlope;
  bool exact_ok = true;
  for (const QuasiPoint& row : v.rows) exact_ok = exact_ok && row.a_eps_symmetrized && row.qsg_residual <= 1e-9;
  v.uniform_pass = v.lower_bounded && v.commutator_bounded && v.samples_consistent && exact_ok;
  return v;
}

QuasiVerdict quasi_for_multiplicity(const RationalPolynomial& p, const std::vector<double>& grid, int samples,
                                    std::uint64_t seed, double tol) {
  const int rho = max_multiplicity(real_roots(p, tol));
  return verify_quasi(p, grid, rho - 1, 1.0, samples, seed, tol);
}

}  // namespace symm
