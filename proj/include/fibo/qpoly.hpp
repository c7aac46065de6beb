#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fibo {

using Int = boost::multiprecision::cpp_int;

/// Exact integer-coefficient polynomial in the formal variable q.
/// Canonical form: coeffs() is empty for the zero polynomial, otherwise
/// its last entry is nonzero.
class QPoly {
public:
  QPoly() = default;
  QPoly(long constant) { // NOLINT: implicit on purpose, 3*p etc.
    if (constant != 0) coeffs_.emplace_back(constant);
  }
  explicit QPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly monomial(Int coeff, std::size_t exp);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Coefficient of q^s, zero beyond the degree.
  Int coeff(std::size_t s) const {
    return s < coeffs_.size() ? coeffs_[s] : Int(0);
  }
  /// Sum of all coefficients (specialization q = 1).
  Int eval_at_one() const;
  /// Multiplication by q^m.
  QPoly shifted(std::size_t m) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
  friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Canonical rendering "c0 + c1*q + c2*q^2 + ..." with zero terms omitted.
  std::string to_string() const;
  /// Compact rendering without '*', e.g. "6+4q+q^2"; used by table output.
  std::string to_compact_string() const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Int> coeffs_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; the zero polynomial for n = 0.
QPoly qbracket(long n);

QPoly pow(const QPoly& base, unsigned exp);

/// Bivariate polynomial in q and p, sparse storage keyed (q-exp, p-exp).
class PQPoly {
public:
  using Key = std::pair<long, long>;

  PQPoly() = default;

  void add_term(long qexp, long pexp, Int c);
  Int coeff(long qexp, long pexp) const;
  bool is_zero() const { return terms_.empty(); }
  Int eval_at_one_one() const;
  const std::map<Key, Int>& terms() const { return terms_; }

  PQPoly& operator+=(const PQPoly& o);
  friend PQPoly operator+(PQPoly a, const PQPoly& b) { a += b; return a; }
  /// Multiply by the monomial c * q^a * p^b.
  PQPoly scaled(Int c, long qexp, long pexp) const;

  friend bool operator==(const PQPoly& a, const PQPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PQPoly& a, const PQPoly& b) { return !(a == b); }

private:
  std::map<Key, Int> terms_;
};

/// Power series in t truncated at a fixed order, QPoly coefficients.
class TSeries {
public:
  explicit TSeries(std::size_t order) : coeffs_(order + 1) {}
  TSeries(std::size_t order, QPoly constant) : coeffs_(order + 1) {
    coeffs_[0] = std::move(constant);
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const QPoly& coeff(std::size_t n) const { return coeffs_.at(n); }
  QPoly& coeff(std::size_t n) { return coeffs_.at(n); }

  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<QPoly> coeffs_;
};

/// Cauchy product truncated at the common order; orders must match.
TSeries series_mul(const TSeries& a, const TSeries& b);

/// Truncation of 1/(1 - c t): coefficient of t^n is c^n.
TSeries geometric(const QPoly& c, std::size_t order);

} // namespace fibo
