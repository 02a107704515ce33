#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace lorentz {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Malformed user input (bad file, bad flag, dimension mismatch).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operation called outside its mathematical domain.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A violated internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw input_error("invalid rational literal '" + text + "'");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in '" + text + "'");
    if (den < 0) throw input_error("negative denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw input_error("invalid rational literal '" + text + "': " + e.what());
  }
}

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Int pow2(unsigned k) {
  Int one = 1;
  return one << k;
}

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational acc = 1, b = base;
  unsigned k = e;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

/// floor(num/den) for integers, den > 0.
inline Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (q * den > num) --q;
  return q;
}

inline Int ceil_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

/// True iff x has a rational n-th root; writes it to out when present.
inline bool exact_nth_root(const Rational& x, unsigned n, Rational& out) {
  if (n == 0) throw domain_error("0-th root");
  if (x < 0) return false;
  Int num = numerator(x), den = denominator(x);
  Int rn, rd;
  int num_exact = mpz_root(rn.backend().data(), num.backend().data(), n);
  int den_exact = mpz_root(rd.backend().data(), den.backend().data(), n);
  if (!num_exact || !den_exact) return false;
  out = Rational(rn, rd);
  return true;
}

/// Closed interval with exact rational endpoints.  All arithmetic keeps
/// the enclosure exact; only n-th roots introduce width.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rational point) : lo(point), hi(point) {}  // NOLINT: implicit by design
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw internal_error("interval endpoints out of order");
  }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}
inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Rational lo = c[0], hi = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < lo) lo = c[i];
    if (c[i] > hi) hi = c[i];
  }
  return Interval(lo, hi);
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw domain_error("interval division by interval containing 0");
  return a * Interval(Rational(1) / b.hi, Rational(1) / b.lo);
}

inline Interval operator+(const Interval& a, const Rational& b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, const Rational& b) { return a - Interval(b); }
inline Interval operator*(const Rational& a, const Interval& b) { return Interval(a) * b; }

/// Guaranteed enclosure of x^(1/n) with dyadic endpoints of the given
/// precision; collapses to a point when the root is rational.
inline Interval nth_root(const Rational& x, unsigned n, unsigned bits) {
  if (n == 0) throw domain_error("0-th root");
  if (x < 0) throw domain_error("n-th root of negative rational");
  if (x == 0) return Interval(Rational(0));
  Rational exact;
  if (exact_nth_root(x, n, exact)) return Interval(exact);
  Int scale = pow2(static_cast<unsigned>(n) * bits);
  Int num = numerator(x), den = denominator(x);
  Int lo_arg = floor_div(num * scale, den);
  Int hi_arg = ceil_div(num * scale, den);
  Int lo_root, hi_root;
  mpz_root(lo_root.backend().data(), lo_arg.backend().data(), n);
  int hi_exact = mpz_root(hi_root.backend().data(), hi_arg.backend().data(), n);
  if (!hi_exact) ++hi_root;
  Int denom = pow2(bits);
  return Interval(Rational(lo_root, denom), Rational(hi_root, denom));
}

inline Interval interval_sqrt(const Rational& x, unsigned bits) { return nth_root(x, 2, bits); }

/// Precision ladder for root comparisons: start at `start` bits and
/// double until separation or the cap.  The cap may be raised (only
/// raised, never lowered) via LORENTZKIT_PRECISION_CAP.
struct RootPrecision {
  unsigned start = 128;
  unsigned cap = 2048;

  static RootPrecision defaults() {
    RootPrecision p;
    if (const char* env = std::getenv("LORENTZKIT_PRECISION_CAP")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > static_cast<long>(p.cap)) p.cap = static_cast<unsigned>(v);
    }
    return p;
  }
};

/// Decides a <= c*sqrt(u) exactly (c, u >= 0), with no root computed.
inline bool leq_root_rhs(const Rational& a, const Rational& c, const Rational& u) {
  if (a <= 0) return true;
  return a * a <= c * c * u;
}

/// Decides a <= c1*sqrt(u) + c2*sqrt(v) exactly (c1, c2, u, v >= 0).
inline bool leq_two_root_rhs(const Rational& a, const Rational& c1, const Rational& u,
                             const Rational& c2, const Rational& v) {
  if (a <= 0) return true;
  Rational t = a * a - c1 * c1 * u - c2 * c2 * v;
  if (t <= 0) return true;
  return t * t <= 4 * c1 * c1 * c2 * c2 * u * v;
}

}  // namespace lorentz
