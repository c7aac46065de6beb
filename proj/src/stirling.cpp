#include "fibo/stirling.hpp"

#include "fibo/boards.hpp"
#include "fibo/fibtiles.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace fibo {

std::string family_name(Family f) {
  switch (f) {
    case Family::SF: return "SF";
    case Family::SFbar: return "SFbar";
    case Family::cF: return "cF";
    case Family::cFbar: return "cFbar";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "SF") return Family::SF;
  if (name == "SFbar") return Family::SFbar;
  if (name == "cF") return Family::cF;
  if (name == "cFbar") return Family::cFbar;
  return std::nullopt;
}

namespace {

const QPoly kZero;

// Shared recursion driver: cell(n+1,k) = q^shift(n,k) * cell(n,k-1)
// + [F_mult(n,k)]_q * cell(n,k).
std::vector<std::vector<QPoly>> build_cells(int max_n,
                                            long long (*shift)(int, int),
                                            long long (*mult)(int, int)) {
  std::vector<std::vector<QPoly>> cells(static_cast<std::size_t>(max_n) + 1);
  cells[0] = {QPoly(1)};
  for (int n = 0; n < max_n; ++n) {
    cells[static_cast<std::size_t>(n) + 1].resize(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) {
      QPoly v;
      if (k >= 1 && k - 1 <= n)
        v += cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)]
                 .shifted(static_cast<std::size_t>(shift(n, k)));
      if (k <= n)
        v += qbracket(fib(static_cast<int>(mult(n, k)))) *
             cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      cells[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(k)] = v;
    }
  }
  return cells;
}

} // namespace

Triangle::Triangle(Family family, int max_n) : family_(family), max_n_(max_n) {
  switch (family) {
    case Family::SF:
      cells_ = build_cells(
          max_n, [](int, int k) { return fib(k - 1); },
          [](int, int k) { return static_cast<long long>(k); });
      break;
    case Family::SFbar:
      cells_ = build_cells(
          max_n, [](int, int) { return 0LL; },
          [](int, int k) { return static_cast<long long>(k); });
      break;
    case Family::cF:
      cells_ = build_cells(
          max_n, [](int n, int) { return fib(n); },
          [](int n, int) { return static_cast<long long>(n); });
      break;
    case Family::cFbar:
      cells_ = build_cells(
          max_n, [](int, int) { return 0LL; },
          [](int n, int) { return static_cast<long long>(n); });
      break;
  }
}

Triangle misprinted_cF_triangle(int max_n) {
  Triangle t;
  t.family_ = Family::cF;
  t.max_n_ = max_n;
  t.cells_ = build_cells(
      max_n, [](int n, int) { return n >= 1 ? fib(n - 1) : 0LL; },
      [](int n, int) { return static_cast<long long>(n); });
  return t;
}

const QPoly& Triangle::at(int n, int k) const {
  if (n < 0 || n > max_n_ || k < 0 || k > n) return kZero;
  return cells_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool QMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? QPoly(1) : QPoly())) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      QPoly acc;
      for (int l = 0; l < a.dim(); ++l) acc += a.at(i, l) * b.at(l, j);
      r.at(i, j) = acc;
    }
  return r;
}

bool report_clean(const Report& report) {
  for (const ReportItem& item : report)
    if (item.status == CheckStatus::Fail) return false;
  return true;
}

bool interp_check(const Triangle& triangle, int n) {
  FerrersBoard bn = staircase(n);
  for (int k = 0; k <= n; ++k) {
    QPoly expected;
    switch (triangle.family()) {
      case Family::cF: expected = file_poly(bn, n - k, false); break;
      case Family::cFbar: expected = file_poly(bn, n - k, true); break;
      case Family::SF: expected = rook_poly(bn, n - k, false); break;
      case Family::SFbar: expected = rook_poly(bn, n - k, true); break;
    }
    if (triangle.at(n, k) != expected) return false;
  }
  return true;
}

namespace {

QPoly xq_power(int x, int k) { return pow(qbracket(x), static_cast<unsigned>(k)); }

} // namespace

ConnectionResult connection_check(const Triangle& cf, const Triangle& cfbar,
                                  const Triangle& sf, const Triangle& sfbar,
                                  int n, int x) {
  ConnectionResult result;

  // [x]_{up,q,F,n} = sum_k cF_{n,k} [x]_q^k
  QPoly rising = qbracket(x);
  for (int i = 1; i < n; ++i) rising *= qbracket(x + fib(i));
  QPoly rhs;
  for (int k = 1; k <= n; ++k) rhs += cf.at(n, k) * xq_power(x, k);
  result.pass = result.pass && rising == rhs;

  // barred rising
  QPoly rising_bar = qbracket(x);
  for (int i = 1; i < n; ++i) rising_bar *= qbracket(x) + qbracket(fib(i));
  rhs = QPoly();
  for (int k = 1; k <= n; ++k) rhs += cfbar.at(n, k) * xq_power(x, k);
  result.pass = result.pass && rising_bar == rhs;

  QPoly xn = xq_power(x, n);

  // barred falling
  rhs = QPoly();
  for (int k = 1; k <= n; ++k) {
    QPoly falling = qbracket(x);
    for (int i = 1; i < k; ++i) falling *= qbracket(x) - qbracket(fib(i));
    rhs += sfbar.at(n, k) * falling;
  }
  result.pass = result.pass && xn == rhs;

  // unbarred falling needs x >= F_{n-1}
  result.sf_applicable = n < 1 || x >= fib(n - 1);
  if (result.sf_applicable) {
    rhs = QPoly();
    for (int k = 1; k <= n; ++k) {
      QPoly falling = qbracket(x);
      for (int i = 1; i < k; ++i) falling *= qbracket(x - fib(i));
      rhs += sf.at(n, k) * falling;
    }
    result.pass = result.pass && xn == rhs;
  }
  return result;
}

bool i1_check(const Triangle& sf, const Triangle& sfbar, int n) {
  long long shift = 0;
  for (int k = 1; k <= n; ++k) {
    if (sf.at(n, k) != sfbar.at(n, k).shifted(static_cast<std::size_t>(shift)))
      return false;
    shift += fib(k);
  }
  return true;
}

namespace {

ReportItem make_item(const std::string& name, int n, int k, int s, const QPoly& expected,
                     const QPoly& actual) {
  ReportItem item{name, n, k, s};
  item.expected = expected.to_string();
  item.actual = actual.to_string();
  item.status = expected == actual ? CheckStatus::Pass : CheckStatus::Fail;
  return item;
}

ReportItem inapplicable(const std::string& name, int n, int k, int s = 0) {
  ReportItem item{name, n, k, s};
  item.status = CheckStatus::Inapplicable;
  return item;
}

} // namespace

Report closed_forms_check(const Triangle& sf, const Triangle& sfbar, int n) {
  Report report;
  long long fs = 0; // sum_{i=1}^{n-1} F_i
  for (int i = 1; i < n; ++i) fs += fib(i);

  // (1) ovSF_{n,n} = 1, SF_{n,n} = q^{sum F_i}
  report.push_back(make_item("id1(1)bar", n, n, 0, QPoly(1), sfbar.at(n, n)));
  report.push_back(make_item("id1(1)", n, n, 0,
                             QPoly::monomial(1, static_cast<std::size_t>(fs)),
                             sf.at(n, n)));

  if (n >= 3) {
    QPoly sum_f;
    for (int i = 1; i <= n - 1; ++i) sum_f += qbracket(fib(i));
    report.push_back(make_item("id1(2)bar", n, n - 1, 0, sum_f, sfbar.at(n, n - 1)));
    long long fs2 = fs - fib(n - 1);
    report.push_back(make_item("id1(2)", n, n - 1, 0,
                               sum_f.shifted(static_cast<std::size_t>(fs2)),
                               sf.at(n, n - 1)));

    QPoly nested;
    for (int i = 1; i <= n - 2; ++i) {
      QPoly inner;
      for (int j = i; j <= n - 2; ++j) inner += qbracket(fib(j));
      nested += qbracket(fib(i)) * inner;
    }
    report.push_back(make_item("id1(3)bar", n, n - 2, 0, nested, sfbar.at(n, n - 2)));
    long long fs3 = fs2 - fib(n - 2);
    report.push_back(make_item("id1(3)", n, n - 2, 0,
                               nested.shifted(static_cast<std::size_t>(fs3)),
                               sf.at(n, n - 2)));
  } else {
    report.push_back(inapplicable("id1(2)", n, n - 1));
    report.push_back(inapplicable("id1(3)", n, n - 2));
  }

  // (4) ovSF_{n,1} = SF_{n,1} = 1
  report.push_back(make_item("id1(4)bar", n, 1, 0, QPoly(1), sfbar.at(n, 1)));
  report.push_back(make_item("id1(4)", n, 1, 0, QPoly(1), sf.at(n, 1)));

  if (n >= 2) {
    report.push_back(make_item("id1(5)bar", n, 2, 0, QPoly(n - 1), sfbar.at(n, 2)));
    report.push_back(
        make_item("id1(5)", n, 2, 0, QPoly(n - 1).shifted(1), sf.at(n, 2)));
  } else {
    report.push_back(inapplicable("id1(5)", n, 2));
  }

  if (n >= 3) {
    QPoly rhs = pow(QPoly(std::vector<Int>{1, 1}), static_cast<unsigned>(n - 1)) -
                QPoly(std::vector<Int>{1, n - 1});
    report.push_back(make_item("id1(6)", n, 3, 0, rhs, sf.at(n, 3)));
    // barred form divides by q^2; compare after shifting back up
    report.push_back(make_item("id1(6)bar", n, 3, 0, rhs, sfbar.at(n, 3).shifted(2)));
  } else {
    report.push_back(inapplicable("id1(6)", n, 3));
  }
  return report;
}

bool gf_check(const Triangle& sf, const Triangle& sfbar, int k, int N) {
  if (k < 1 || N < k) throw std::invalid_argument("gf_check: need 1 <= k <= N");
  TSeries product(static_cast<std::size_t>(N), QPoly(1));
  for (int i = 1; i <= k; ++i)
    product = series_mul(product, geometric(qbracket(fib(i)), static_cast<std::size_t>(N)));
  long long shift = 0; // sum_{i=1}^{k-1} F_i for the SF variant
  for (int i = 1; i < k; ++i) shift += fib(i);
  for (int n = k; n <= N; ++n) {
    const QPoly& c = product.coeff(static_cast<std::size_t>(n - k));
    if (sfbar.at(n, k) != c) return false;
    if (sf.at(n, k) != c.shifted(static_cast<std::size_t>(shift))) return false;
  }
  return true;
}

namespace {

Int binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

ReportItem coeff_item(const std::string& name, const Triangle& sfbar, int n, int k,
                      int s, const Int& expected) {
  ReportItem item{name, n, k, s};
  Int actual = sfbar.at(n, k).coeff(static_cast<std::size_t>(s));
  item.expected = expected.str();
  item.actual = actual.str();
  item.status = expected == actual ? CheckStatus::Pass : CheckStatus::Fail;
  return item;
}

} // namespace

Report coeff_formulas_check(const Triangle& sfbar, int n, int k) {
  Report report;

  if (n >= k && k >= 1)
    report.push_back(coeff_item("id5(1)", sfbar, n, k, 0, binom(n - 1, k - 1)));
  else
    report.push_back(inapplicable("id5(1)", n, k, 0));

  if (n > k && k >= 2)
    report.push_back(coeff_item("id5(2)", sfbar, n, k, 1, (k - 2) * binom(n - 1, k)));
  else
    report.push_back(inapplicable("id5(2)", n, k, 1));

  if (k == 3 && n >= 3)
    for (int s = 0; s <= 4; ++s)
      report.push_back(coeff_item("id5(3)", sfbar, n, k, s, binom(n - 1, s + 2)));
  else
    report.push_back(inapplicable("id5(3)", n, k));

  if (n >= k && k >= 3)
    report.push_back(coeff_item(
        "id5(4)", sfbar, n, k, 2,
        (k - 3) * binom(n - 1, k) + binom(k - 1, 2) * binom(n - 1, k + 1)));
  else
    report.push_back(inapplicable("id5(4)", n, k, 2));

  if (n >= k && k >= 4) {
    report.push_back(coeff_item(
        "id5(5)", sfbar, n, k, 3,
        (k - 4) * binom(n - 1, k) +
            (binom(k - 1, 2) + binom(k - 2, 2) - 1) * binom(n - 1, k + 1) +
            binom(k, 3) * binom(n - 1, k + 2)));
    report.push_back(coeff_item(
        "id5(6)", sfbar, n, k, 4,
        (k - 4) * binom(n - 1, k) +
            (binom(k - 1, 2) + binom(k - 2, 2) + binom(k - 3, 2) - 3) *
                binom(n - 1, k + 1) +
            (2 * binom(k, 3) + binom(k - 1, 3) - k + 1) * binom(n - 1, k + 2) +
            binom(k + 1, 4) * binom(n - 1, k + 3)));
  } else {
    report.push_back(inapplicable("id5(5)", n, k, 3));
    report.push_back(inapplicable("id5(6)", n, k, 4));
  }
  return report;
}

bool matrix_inverse_check(const Triangle& cfbar, const Triangle& sfbar, int N) {
  QMatrix a(N), b(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int n = i + 1, k = j + 1;
      QPoly cell = cfbar.at(n, k);
      a.at(i, j) = (n - k) % 2 == 0 ? cell : -cell;
      b.at(i, j) = sfbar.at(n, k);
    }
  return (a * b).is_identity();
}

Verdict unimodality(const QPoly& p) {
  const auto& c = p.coeffs();
  bool descended = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[i - 1]) descended = true;
    if (descended && c[i] > c[i - 1])
      return Verdict{false, static_cast<int>(i)};
  }
  return Verdict{};
}

Verdict log_concavity(const QPoly& p) {
  const auto& c = p.coeffs();
  auto at = [&](long i) { return i >= 0 && i < static_cast<long>(c.size()) ? c[static_cast<std::size_t>(i)] : Int(0); };
  for (long i = 0; i < static_cast<long>(c.size()); ++i)
    if (at(i) * at(i) - at(i - 1) * at(i + 1) < 0)
      return Verdict{false, static_cast<int>(i)};
  return Verdict{};
}

QPoly chain_product(int n) {
  QPoly p(1);
  for (int i = 1; i < n; ++i) p *= qbracket(fib(i));
  return p;
}

bool is_palindromic(const QPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size() / 2; ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

namespace {

long long to_int64(const Int& value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min())
    throw std::overflow_error("coefficient exceeds 64-bit export range");
  return value.convert_to<long long>();
}

} // namespace

nlohmann::json triangle_to_json(const Triangle& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (int n = 0; n <= t.max_n(); ++n)
    for (int k = 0; k <= n; ++k) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Int& c : t.at(n, k).coeffs()) coeffs.push_back(to_int64(c));
      cells.push_back({{"n", n}, {"k", k}, {"coeffs", coeffs}});
    }
  return {{"format", 1},
          {"family", family_name(t.family())},
          {"max_n", t.max_n()},
          {"cells", cells}};
}

std::string triangle_to_csv(const Triangle& t) {
  std::ostringstream out;
  out << "# format=1 family=" << family_name(t.family()) << " max_n=" << t.max_n()
      << '\n';
  for (int n = 0; n <= t.max_n(); ++n)
    for (int k = 0; k <= n; ++k) {
      out << n << ',' << k << ',';
      const auto& coeffs = t.at(n, k).coeffs();
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ' ';
        out << coeffs[i].str();
      }
      out << '\n';
    }
  return out.str();
}

} // namespace fibo
