#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/rational.hpp"

namespace lorentz {

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline Vec basis_vector(int s, int i) {
  Vec e = Vec::Zero(s);
  e[i] = 1;
  return e;
}

inline Vec make_vec(std::initializer_list<Rational> entries) {
  Vec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& q : entries) v[i++] = q;
  return v;
}

using Exponents = std::vector<int>;

/// Graded-lexicographic order; within one homogeneous polynomial all
/// exponent vectors share the total degree, so this is plain lex there.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse homogeneous polynomial with exact rational coefficients.
/// Houses a volume polynomial f(v) = v^d . Omega; zero coefficients are
/// never stored and every exponent vector sums to the degree.
class VolumePolynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  VolumePolynomial(int degree, int nvars) : degree_(degree), nvars_(nvars) {
    if (degree < 0 || nvars < 1) throw input_error("polynomial needs degree >= 0 and nvars >= 1");
  }

  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw input_error("exponent vector length does not match nvars");
    int total = 0;
    for (int k : e) {
      if (k < 0) throw input_error("negative exponent");
      total += k;
    }
    if (total != degree_) throw input_error("exponent vector does not sum to the degree");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  static VolumePolynomial monomial(int nvars, const Exponents& e, const Rational& c) {
    VolumePolynomial f(std::accumulate(e.begin(), e.end(), 0), nvars);
    f.add_term(e, c);
    return f;
  }

  VolumePolynomial& operator+=(const VolumePolynomial& g) {
    if (g.degree_ != degree_ || g.nvars_ != nvars_)
      throw input_error("polynomial sum shape mismatch");
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }

  VolumePolynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
  }

  bool operator==(const VolumePolynomial& g) const {
    return degree_ == g.degree_ && nvars_ == g.nvars_ && terms_ == g.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << c.str();
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) out << "*t" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out.str();
  }

 private:
  int degree_;
  int nvars_;
  TermMap terms_;
};

inline VolumePolynomial operator*(const VolumePolynomial& f, const VolumePolynomial& g) {
  if (f.nvars() != g.nvars()) throw input_error("polynomial product shape mismatch");
  VolumePolynomial h(f.degree() + g.degree(), f.nvars());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) {
      Exponents e(ea);
      for (int i = 0; i < f.nvars(); ++i) e[i] += eb[i];
      h.add_term(e, ca * cb);
    }
  return h;
}

inline Rational evaluate(const VolumePolynomial& f, const Vec& v) {
  if (v.size() != f.nvars()) throw input_error("evaluate: vector length does not match nvars");
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational m = c;
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= v[i];
    total += m;
  }
  return total;
}

/// D_v f, homogeneous of degree d-1 and linear in v.
inline VolumePolynomial directional_derivative(const VolumePolynomial& f, const Vec& v) {
  if (v.size() != f.nvars()) throw input_error("derivative: vector length does not match nvars");
  if (f.degree() < 1) throw domain_error("directional derivative of a degree-0 polynomial");
  VolumePolynomial g(f.degree() - 1, f.nvars());
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0 || v[i] == 0) continue;
      Exponents de(e);
      de[i] -= 1;
      g.add_term(de, c * e[i] * v[i]);
    }
  return g;
}

/// Monomial derivative d/dx_i, used by the Hessian machinery.
inline VolumePolynomial partial_derivative(const VolumePolynomial& f, int i) {
  if (f.degree() < 1) throw domain_error("partial derivative of a degree-0 polynomial");
  VolumePolynomial g(f.degree() - 1, f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponents de(e);
    de[i] -= 1;
    g.add_term(de, c * e[i]);
  }
  return g;
}

inline Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Slots with multiplicities; the workhorse behind mixed values.
using Slots = std::vector<std::pair<Vec, int>>;

/// Mixed value (1/d!) D_{v_1} ... D_{v_d} f: the intersection-number
/// surrogate, so mixed of d copies of v recovers f(v).
inline Rational mixed_value(const VolumePolynomial& f, const Slots& slots) {
  int total = 0;
  for (const auto& [v, mult] : slots) {
    if (mult < 0) throw input_error("negative slot multiplicity");
    if (v.size() != f.nvars()) throw input_error("mixed_value: vector length does not match nvars");
    total += mult;
  }
  if (total != f.degree())
    throw input_error("mixed_value: expected " + std::to_string(f.degree()) + " directions, got " +
                      std::to_string(total));
  VolumePolynomial g = f;
  for (const auto& [v, mult] : slots)
    for (int k = 0; k < mult; ++k) {
      if (g.is_zero()) return 0;
      g = directional_derivative(g, v);
    }
  Rational c = g.is_zero() ? Rational(0) : g.terms().begin()->second;
  return c / factorial(f.degree());
}

inline Rational mixed_value(const VolumePolynomial& f, const std::vector<Vec>& dirs) {
  Slots slots;
  slots.reserve(dirs.size());
  for (const auto& v : dirs) slots.emplace_back(v, 1);
  return mixed_value(f, slots);
}

/// g(y) = f(y_1 v_1 + ... + y_m v_m), exact.
inline VolumePolynomial substitute_cone(const VolumePolynomial& f, const std::vector<Vec>& gens) {
  if (gens.empty()) throw input_error("substitute_cone: empty generator list");
  int m = static_cast<int>(gens.size());
  for (const auto& g : gens)
    if (g.size() != f.nvars()) throw input_error("substitute_cone: generator length mismatch");
  // Linear forms L_j(y) = sum_i v_i[j] y_i.
  std::vector<VolumePolynomial> linear;
  linear.reserve(f.nvars());
  for (int j = 0; j < f.nvars(); ++j) {
    VolumePolynomial L(1, m);
    for (int i = 0; i < m; ++i) {
      Exponents e(m, 0);
      e[i] = 1;
      L.add_term(e, gens[i][j]);
    }
    linear.push_back(std::move(L));
  }
  VolumePolynomial out(f.degree(), m);
  for (const auto& [e, c] : f.terms()) {
    VolumePolynomial term(0, m);
    term.add_term(Exponents(m, 0), c);
    for (int j = 0; j < f.nvars(); ++j)
      for (int k = 0; k < e[j]; ++k) term = term * linear[j];
    out += term;
  }
  return out;
}

/// Volume polynomial of the contracted class w . Omega: for f of degree d
/// representing Omega, returns g of degree d-1 with
/// g(v) = v^{d-1} . (w . Omega) = D_w f / d.
inline VolumePolynomial contract(const VolumePolynomial& f, const Vec& w) {
  if (f.degree() < 1) throw domain_error("contract: degree-0 polynomial");
  VolumePolynomial g = directional_derivative(f, w);
  g *= Rational(1, f.degree());
  return g;
}

inline VolumePolynomial contract_power(const VolumePolynomial& f, const Vec& w, int times) {
  VolumePolynomial g = f;
  for (int k = 0; k < times; ++k) g = contract(g, w);
  return g;
}

/// s_k = alpha^k . beta^{d-k} . Omega for k = 0..d.
struct SequenceSk {
  std::vector<Rational> values;  // length d+1, entry k is s_k

  const Rational& operator[](std::size_t k) const { return values.at(k); }
  std::size_t size() const { return values.size(); }
};

inline SequenceSk sequence_sk(const VolumePolynomial& f, const Vec& alpha, const Vec& beta) {
  if (alpha.size() != f.nvars() || beta.size() != f.nvars())
    throw input_error("sequence_sk: vector length does not match nvars");
  SequenceSk s;
  s.values.resize(f.degree() + 1);
  VolumePolynomial partial = f;  // D_alpha^k f as k grows
  for (int k = 0; k <= f.degree(); ++k) {
    VolumePolynomial g = partial;
    for (int j = k; j < f.degree() && !g.is_zero(); ++j) g = directional_derivative(g, beta);
    Rational c = g.is_zero() ? Rational(0) : g.terms().begin()->second;
    s.values[k] = c / factorial(f.degree());
    if (k < f.degree())
      partial = partial.is_zero() ? partial : directional_derivative(partial, alpha);
  }
  return s;
}

/// Exact proportionality of vectors; when proportional and `ratio` is
/// non-null, writes c with a = c*b.
inline bool proportional(const Vec& a, const Vec& b, Rational* ratio = nullptr) {
  if (a.size() != b.size()) return false;
  int pivot = -1;
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (b[i] != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  if (pivot < 0) {  // b = 0: proportional iff a = 0
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != 0) return false;
    if (ratio) *ratio = 0;
    return true;
  }
  Rational c = a[pivot] / b[pivot];
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return false;
  if (ratio) *ratio = c;
  return true;
}

/// Exact proportionality of polynomials with a positive constant.
inline bool proportional_positive(const VolumePolynomial& f, const VolumePolynomial& g,
                                  Rational* ratio = nullptr) {
  if (f.degree() != g.degree() || f.nvars() != g.nvars()) return false;
  if (f.is_zero() && g.is_zero()) {
    if (ratio) *ratio = 1;
    return true;
  }
  if (f.is_zero() || g.is_zero()) return false;
  if (f.terms().size() != g.terms().size()) return false;
  Rational c = f.terms().begin()->second / g.terms().begin()->second;
  if (c <= 0) return false;
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  for (; it != f.terms().end(); ++it, ++jt)
    if (it->first != jt->first || it->second != c * jt->second) return false;
  if (ratio) *ratio = c;
  return true;
}

}  // namespace lorentz
