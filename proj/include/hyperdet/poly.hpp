#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hyperdet/errors.hpp"

namespace hyperdet {

using Cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Cplx, 3>;

inline CVec3 to_cvec(const Vec3& v) {
  return {Cplx(v[0]), Cplx(v[1]), Cplx(v[2])};
}

namespace detail {

// Pascal triangle, enough for degrees up to (d-1)^2 with d <= 6 and change.
inline double binomial(int n, int k) {
  static constexpr int kMax = 64;
  static const auto table = [] {
    std::array<std::array<double, kMax>, kMax> t{};
    for (int i = 0; i < kMax; ++i) {
      t[i][0] = 1.0;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0.0);
    }
    return t;
  }();
  assert(n >= 0 && n < kMax && k >= 0 && k <= n);
  return table[n][k];
}

}  // namespace detail

/// Dense homogeneous polynomial in x, y, z with complex coefficients.
///
/// Coefficients are stored for every exponent triple (i, j, k) with
/// i + j + k = degree, ordered by descending i then descending j, so the
/// first entry is x^degree and the last is z^degree. The zero polynomial is
/// representable at every degree.
class HomogPoly3 {
 public:
  HomogPoly3() : degree_(0), coef_(1, Cplx(0.0)) {}
  explicit HomogPoly3(int degree)
      : degree_(checked_degree(degree)), coef_(term_count(degree), Cplx(0.0)) {}

  static int term_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

  // The index depends only on (j, k); i is implied by the degree.
  static int index_of(int j, int k) {
    const int m = j + k;
    return m * (m + 1) / 2 + k;
  }

  struct Exponents {
    int i, j, k;
  };

  static Exponents exponents_at(int degree, int index) {
    int m = static_cast<int>((std::sqrt(8.0 * index + 1.0) - 1.0) / 2.0);
    while (m * (m + 1) / 2 > index) --m;
    while ((m + 1) * (m + 2) / 2 <= index) ++m;
    const int k = index - m * (m + 1) / 2;
    return Exponents{degree - m, m - k, k};
  }

  static HomogPoly3 monomial(int i, int j, int k, Cplx c = Cplx(1.0)) {
    HomogPoly3 p(i + j + k);
    p.coef_[index_of(j, k)] = c;
    return p;
  }

  // 0 = x, 1 = y, 2 = z
  static HomogPoly3 variable(int axis) {
    switch (axis) {
      case 0: return monomial(1, 0, 0);
      case 1: return monomial(0, 1, 0);
      default: return monomial(0, 0, 1);
    }
  }

  static HomogPoly3 linear_form(const CVec3& c) {
    HomogPoly3 p(1);
    p.set(1, 0, 0, c[0]);
    p.set(0, 1, 0, c[1]);
    p.set(0, 0, 1, c[2]);
    return p;
  }
  static HomogPoly3 linear_form(const Vec3& c) { return linear_form(to_cvec(c)); }

  static HomogPoly3 constant(Cplx c) {
    HomogPoly3 p(0);
    p.coef_[0] = c;
    return p;
  }

  int degree() const { return degree_; }
  int term_count() const { return static_cast<int>(coef_.size()); }

  Cplx coeff(int i, int j, int k) const {
    check_exponents(i, j, k);
    return coef_[index_of(j, k)];
  }
  void set(int i, int j, int k, Cplx c) {
    check_exponents(i, j, k);
    coef_[index_of(j, k)] = c;
  }
  void add(int i, int j, int k, Cplx c) {
    check_exponents(i, j, k);
    coef_[index_of(j, k)] += c;
  }

  Cplx operator[](int index) const { return coef_[index]; }
  Cplx& operator[](int index) { return coef_[index]; }

  const std::vector<Cplx>& coeffs() const { return coef_; }

  double norm_inf() const {
    double m = 0.0;
    for (const auto& c : coef_) m = std::max(m, std::abs(c));
    return m;
  }
  double norm2() const {
    double s = 0.0;
    for (const auto& c : coef_) s += std::norm(c);
    return std::sqrt(s);
  }
  double max_imag() const {
    double m = 0.0;
    for (const auto& c : coef_) m = std::max(m, std::abs(c.imag()));
    return m;
  }

  bool is_zero(double tol = 0.0) const { return norm_inf() <= tol; }

  /// True when all imaginary parts are negligible against the largest
  /// coefficient magnitude.
  bool is_real(double rel_tol = 1e-12) const {
    const double scale = norm_inf();
    return max_imag() <= rel_tol * std::max(scale, 1e-300);
  }

  HomogPoly3 operator-() const {
    HomogPoly3 r(*this);
    for (auto& c : r.coef_) c = -c;
    return r;
  }

  HomogPoly3& operator+=(const HomogPoly3& q) {
    require_same_degree(q);
    for (size_t t = 0; t < coef_.size(); ++t) coef_[t] += q.coef_[t];
    return *this;
  }
  HomogPoly3& operator-=(const HomogPoly3& q) {
    require_same_degree(q);
    for (size_t t = 0; t < coef_.size(); ++t) coef_[t] -= q.coef_[t];
    return *this;
  }
  HomogPoly3& operator*=(Cplx s) {
    for (auto& c : coef_) c *= s;
    return *this;
  }

 private:
  static int checked_degree(int degree) {
    if (degree < 0) throw DegreeError("HomogPoly3: negative degree");
    return degree;
  }
  void check_exponents(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i + j + k != degree_)
      throw DegreeError("HomogPoly3: exponent triple does not match degree");
  }
  void require_same_degree(const HomogPoly3& q) const {
    if (degree_ != q.degree_)
      throw DegreeError("HomogPoly3: degree mismatch (" +
                        std::to_string(degree_) + " vs " +
                        std::to_string(q.degree_) + ")");
  }

  int degree_;
  std::vector<Cplx> coef_;
};

inline HomogPoly3 operator+(HomogPoly3 p, const HomogPoly3& q) { return p += q; }
inline HomogPoly3 operator-(HomogPoly3 p, const HomogPoly3& q) { return p -= q; }
inline HomogPoly3 operator*(HomogPoly3 p, Cplx s) { return p *= s; }
inline HomogPoly3 operator*(Cplx s, HomogPoly3 p) { return p *= s; }
inline HomogPoly3 operator*(HomogPoly3 p, double s) { return p *= Cplx(s); }
inline HomogPoly3 operator*(double s, HomogPoly3 p) { return p *= Cplx(s); }

inline HomogPoly3 operator*(const HomogPoly3& p, const HomogPoly3& q) {
  HomogPoly3 r(p.degree() + q.degree());
  const int dp = p.degree();
  for (int tp = 0; tp < p.term_count(); ++tp) {
    const Cplx cp = p[tp];
    if (cp == Cplx(0.0)) continue;
    const auto ep = HomogPoly3::exponents_at(dp, tp);
    for (int tq = 0; tq < q.term_count(); ++tq) {
      const Cplx cq = q[tq];
      if (cq == Cplx(0.0)) continue;
      const auto eq = HomogPoly3::exponents_at(q.degree(), tq);
      r.add(ep.i + eq.i, ep.j + eq.j, ep.k + eq.k, cp * cq);
    }
  }
  return r;
}

inline HomogPoly3 poly_pow(const HomogPoly3& p, int n) {
  if (n < 0) throw DegreeError("poly_pow: negative exponent");
  HomogPoly3 r = HomogPoly3::constant(1.0);
  for (int t = 0; t < n; ++t) r = r * p;
  return r;
}

inline HomogPoly3 conjugate_poly(const HomogPoly3& p) {
  HomogPoly3 r(p.degree());
  for (int t = 0; t < p.term_count(); ++t) r[t] = std::conj(p[t]);
  return r;
}

inline HomogPoly3 real_part(const HomogPoly3& p) {
  HomogPoly3 r(p.degree());
  for (int t = 0; t < p.term_count(); ++t) r[t] = Cplx(p[t].real(), 0.0);
  return r;
}

inline bool approx_equal(const HomogPoly3& p, const HomogPoly3& q, double tol) {
  if (p.degree() != q.degree()) return false;
  const double scale = std::max({p.norm_inf(), q.norm_inf(), 1e-300});
  for (int t = 0; t < p.term_count(); ++t)
    if (std::abs(p[t] - q[t]) > tol * scale) return false;
  return true;
}

inline Cplx evaluate(const HomogPoly3& p, const CVec3& pt) {
  const int d = p.degree();
  // power tables per axis
  std::array<std::vector<Cplx>, 3> pw;
  for (int a = 0; a < 3; ++a) {
    pw[a].resize(d + 1);
    pw[a][0] = Cplx(1.0);
    for (int t = 1; t <= d; ++t) pw[a][t] = pw[a][t - 1] * pt[a];
  }
  Cplx acc(0.0);
  for (int t = 0; t < p.term_count(); ++t) {
    const Cplx c = p[t];
    if (c == Cplx(0.0)) continue;
    const auto e = HomogPoly3::exponents_at(d, t);
    acc += c * pw[0][e.i] * pw[1][e.j] * pw[2][e.k];
  }
  return acc;
}

inline Cplx evaluate(const HomogPoly3& p, const Vec3& pt) {
  return evaluate(p, to_cvec(pt));
}

inline HomogPoly3 partial_derivative(const HomogPoly3& p, int axis) {
  if (p.degree() == 0) throw ConstantError("partial_derivative: degree 0");
  HomogPoly3 r(p.degree() - 1);
  for (int t = 0; t < p.term_count(); ++t) {
    const Cplx c = p[t];
    if (c == Cplx(0.0)) continue;
    auto e = HomogPoly3::exponents_at(p.degree(), t);
    int exps[3] = {e.i, e.j, e.k};
    if (exps[axis] == 0) continue;
    const double n = exps[axis];
    exps[axis] -= 1;
    r.add(exps[0], exps[1], exps[2], n * c);
  }
  return r;
}

/// D_e p = e0 dp/dx + e1 dp/dy + e2 dp/dz.
inline HomogPoly3 directional_derivative(const HomogPoly3& p, const Vec3& e) {
  if (p.degree() == 0) throw ConstantError("directional_derivative: degree 0");
  HomogPoly3 r(p.degree() - 1);
  for (int a = 0; a < 3; ++a) {
    if (e[a] == 0.0) continue;
    r += e[a] * partial_derivative(p, a);
  }
  return r;
}

inline CVec3 eval_gradient(const HomogPoly3& p, const CVec3& pt) {
  CVec3 g{Cplx(0.0), Cplx(0.0), Cplx(0.0)};
  if (p.degree() == 0) return g;
  for (int a = 0; a < 3; ++a) g[a] = evaluate(partial_derivative(p, a), pt);
  return g;
}

/// Univariate polynomial with complex coefficients, coeffs[i] is the
/// coefficient of t^i.
class UniPoly {
 public:
  UniPoly() : coef_(1, Cplx(0.0)) {}
  explicit UniPoly(std::vector<Cplx> coeffs) : coef_(std::move(coeffs)) {
    if (coef_.empty()) coef_.assign(1, Cplx(0.0));
  }

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  Cplx operator[](int i) const { return coef_[i]; }
  Cplx& operator[](int i) { return coef_[i]; }
  const std::vector<Cplx>& coeffs() const { return coef_; }

  Cplx leading() const { return coef_.back(); }

  double norm_inf() const {
    double m = 0.0;
    for (const auto& c : coef_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Degree after dropping trailing coefficients below rel_tol * norm_inf.
  int effective_degree(double rel_tol = 1e-10) const {
    const double thr = rel_tol * std::max(norm_inf(), 1e-300);
    for (int i = degree(); i >= 1; --i)
      if (std::abs(coef_[i]) > thr) return i;
    return 0;
  }

  UniPoly trimmed(double rel_tol = 1e-10) const {
    const int d = effective_degree(rel_tol);
    return UniPoly(std::vector<Cplx>(coef_.begin(), coef_.begin() + d + 1));
  }

  Cplx eval(Cplx t) const {
    Cplx acc(0.0);
    for (int i = degree(); i >= 0; --i) acc = acc * t + coef_[i];
    return acc;
  }

  UniPoly derivative() const {
    if (degree() == 0) return UniPoly(std::vector<Cplx>{Cplx(0.0)});
    std::vector<Cplx> d(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i)
      d[i - 1] = double(i) * coef_[i];
    return UniPoly(std::move(d));
  }

 private:
  std::vector<Cplx> coef_;
};

/// Restriction t -> p(t*e + a). The leading (t^degree) coefficient equals
/// p(e), independent of a.
inline UniPoly restrict_to_line(const HomogPoly3& p, const Vec3& e,
                                const CVec3& a) {
  const int d = p.degree();
  if (p.is_zero())
    return UniPoly(std::vector<Cplx>(d + 1, Cplx(0.0)));
  // binom[a][power] tables: (t*e_a + a_a)^power expanded in t
  std::array<std::vector<std::vector<Cplx>>, 3> bin;
  for (int ax = 0; ax < 3; ++ax) {
    bin[ax].resize(d + 1);
    for (int pw = 0; pw <= d; ++pw) {
      bin[ax][pw].resize(pw + 1);
      for (int r = 0; r <= pw; ++r) {
        // coefficient of t^r in (e t + a)^pw
        bin[ax][pw][r] = detail::binomial(pw, r) * std::pow(Cplx(e[ax]), r) *
                         (pw - r == 0 ? Cplx(1.0) : std::pow(a[ax], pw - r));
      }
    }
  }
  std::vector<Cplx> out(d + 1, Cplx(0.0));
  std::vector<Cplx> tmp, tmp2;
  for (int t = 0; t < p.term_count(); ++t) {
    const Cplx c = p[t];
    if (c == Cplx(0.0)) continue;
    const auto ex = HomogPoly3::exponents_at(d, t);
    const auto& bx = bin[0][ex.i];
    const auto& by = bin[1][ex.j];
    const auto& bz = bin[2][ex.k];
    tmp.assign(ex.i + ex.j + 1, Cplx(0.0));
    for (int r = 0; r <= ex.i; ++r)
      for (int s = 0; s <= ex.j; ++s) tmp[r + s] += bx[r] * by[s];
    tmp2.assign(d + 1, Cplx(0.0));
    for (int r = 0; r < static_cast<int>(tmp.size()); ++r)
      for (int s = 0; s <= ex.k; ++s) tmp2[r + s] += tmp[r] * bz[s];
    for (int r = 0; r <= d; ++r) out[r] += c * tmp2[r];
  }
  return UniPoly(std::move(out));
}

inline UniPoly restrict_to_line(const HomogPoly3& p, const Vec3& e,
                                const Vec3& a) {
  return restrict_to_line(p, e, to_cvec(a));
}

struct DivisionResult {
  HomogPoly3 quotient;
  double residual = 0.0;  // ||p - q*quotient||_2 / ||p||_2
};

/// Least-squares division: the quotient minimizing ||p - q*quotient|| over
/// coefficient vectors. The residual is an exactness certificate; callers
/// treat residual < 1e-8 (or their own threshold) as exact.
inline DivisionResult exact_divide(const HomogPoly3& p, const HomogPoly3& q) {
  if (q.is_zero(1e-300 * 0.0))
    throw Error("exact_divide: divisor is identically zero");
  if (p.degree() < q.degree())
    throw DegreeError("exact_divide: dividend degree below divisor degree");
  const int dq = p.degree() - q.degree();
  const int rows = HomogPoly3::term_count(p.degree());
  const int cols = HomogPoly3::term_count(dq);

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, cols);
  for (int col = 0; col < cols; ++col) {
    const auto em = HomogPoly3::exponents_at(dq, col);
    for (int t = 0; t < q.term_count(); ++t) {
      const Cplx c = q[t];
      if (c == Cplx(0.0)) continue;
      const auto eq = HomogPoly3::exponents_at(q.degree(), t);
      A(HomogPoly3::index_of(eq.j + em.j, eq.k + em.k), col) += c;
    }
  }
  Eigen::VectorXcd b(rows);
  for (int t = 0; t < rows; ++t) b(t) = p[t];

  const Eigen::VectorXcd u = A.colPivHouseholderQr().solve(b);
  const double bnorm = b.norm();
  const double res = bnorm > 0.0 ? (A * u - b).norm() / bnorm : 0.0;

  HomogPoly3 quot(dq);
  for (int col = 0; col < cols; ++col) quot[col] = u(col);
  return DivisionResult{std::move(quot), res};
}

/// p composed with the linear change of variables v -> T v, i.e. the
/// polynomial v -> p(T v).
inline HomogPoly3 compose_linear(const HomogPoly3& p,
                                 const Eigen::Matrix3d& T) {
  const int d = p.degree();
  std::array<HomogPoly3, 3> rows;
  for (int r = 0; r < 3; ++r)
    rows[r] = HomogPoly3::linear_form(Vec3{T(r, 0), T(r, 1), T(r, 2)});
  // power tables of each row form
  std::array<std::vector<HomogPoly3>, 3> pw;
  for (int r = 0; r < 3; ++r) {
    pw[r].resize(d + 1);
    pw[r][0] = HomogPoly3::constant(1.0);
    for (int t = 1; t <= d; ++t) pw[r][t] = pw[r][t - 1] * rows[r];
  }
  HomogPoly3 out(d);
  for (int t = 0; t < p.term_count(); ++t) {
    const Cplx c = p[t];
    if (c == Cplx(0.0)) continue;
    const auto e = HomogPoly3::exponents_at(d, t);
    out += c * (pw[0][e.i] * pw[1][e.j] * pw[2][e.k]);
  }
  return out;
}

inline std::string to_string(const HomogPoly3& p) {
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < p.term_count(); ++t) {
    const Cplx c = p[t];
    if (c == Cplx(0.0)) continue;
    const auto e = HomogPoly3::exponents_at(p.degree(), t);
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ")";
    const char* names[3] = {"x", "y", "z"};
    const int exps[3] = {e.i, e.j, e.k};
    for (int a = 0; a < 3; ++a) {
      if (exps[a] == 0) continue;
      os << names[a];
      if (exps[a] > 1) os << "^" << exps[a];
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace hyperdet
