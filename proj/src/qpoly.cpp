#include "fibo/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fibo {

QPoly QPoly::monomial(Int coeff, std::size_t exp) {
  QPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(exp + 1, Int(0));
    p.coeffs_[exp] = std::move(coeff);
  }
  return p;
}

Int QPoly::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

QPoly QPoly::shifted(std::size_t m) const {
  if (is_zero() || m == 0) {
    QPoly r = *this;
    return r;
  }
  QPoly r;
  r.coeffs_.assign(coeffs_.size() + m, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + m] = coeffs_[i];
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

namespace {

std::string render(const std::vector<Int>& coeffs, bool compact) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (compact ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + "));
    }
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << (compact ? "" : "*");
      out << 'q';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

} // namespace

std::string QPoly::to_string() const { return render(coeffs_, false); }
std::string QPoly::to_compact_string() const { return render(coeffs_, true); }

QPoly qbracket(long n) {
  if (n < 0) throw std::invalid_argument("qbracket: negative argument");
  QPoly p;
  if (n > 0) p = QPoly(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
  return p;
}

QPoly pow(const QPoly& base, unsigned exp) {
  QPoly r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

void PQPoly::add_term(long qexp, long pexp, Int c) {
  if (c == 0) return;
  Key k{qexp, pexp};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int PQPoly::coeff(long qexp, long pexp) const {
  auto it = terms_.find({qexp, pexp});
  return it == terms_.end() ? Int(0) : it->second;
}

Int PQPoly::eval_at_one_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

PQPoly& PQPoly::operator+=(const PQPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

PQPoly PQPoly::scaled(Int c, long qexp, long pexp) const {
  PQPoly r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.add_term(k.first + qexp, k.second + pexp, v * c);
  return r;
}

TSeries series_mul(const TSeries& a, const TSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series_mul: mismatched truncation orders");
  TSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    QPoly acc;
    for (std::size_t i = 0; i <= n; ++i) acc += a.coeff(i) * b.coeff(n - i);
    r.coeff(n) = acc;
  }
  return r;
}

TSeries geometric(const QPoly& c, std::size_t order) {
  TSeries r(order);
  QPoly p(1);
  r.coeff(0) = p;
  for (std::size_t n = 1; n <= order; ++n) {
    p *= c;
    r.coeff(n) = p;
  }
  return r;
}

} // namespace fibo
