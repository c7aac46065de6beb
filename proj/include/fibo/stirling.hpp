#pragma once

#include "fibo/qpoly.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fibo {

enum class Family { SF, SFbar, cF, cFbar };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// One of the four Fibonacci-Stirling triangles, built by its recursion.
/// Cells outside 0 <= k <= n <= max_n are zero.
class Triangle {
public:
  Triangle(Family family, int max_n);

  Family family() const { return family_; }
  int max_n() const { return max_n_; }
  const QPoly& at(int n, int k) const;

private:
  friend Triangle misprinted_cF_triangle(int max_n);
  Triangle() = default;

  Family family_ = Family::SF;
  int max_n_ = 0;
  std::vector<std::vector<QPoly>> cells_;
};

/// The cF triangle built with the column-shift exponent F_{n-1} instead of
/// F_n; exists only to demonstrate that this variant breaks the defining
/// connection identity at n = 2.
Triangle misprinted_cF_triangle(int max_n);

/// Square matrix of QPoly entries with exact multiplication.
class QMatrix {
public:
  explicit QMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  QPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const QPoly& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }
  bool is_identity() const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

private:
  int dim_;
  std::vector<QPoly> entries_;
};

enum class CheckStatus { Pass, Fail, Inapplicable };

struct ReportItem {
  std::string item;
  int n = 0, k = 0, s = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string expected, actual;
};

using Report = std::vector<ReportItem>;

bool report_clean(const Report& report);

/// Triangle row n against the boards-module polynomials on B_n.
bool interp_check(const Triangle& triangle, int n);

struct ConnectionResult {
  bool pass = true;
  bool sf_applicable = true; // SFdef needs x >= F_{n-1}
};

/// The four defining connection identities at integer x.
ConnectionResult connection_check(const Triangle& cf, const Triangle& cfbar,
                                  const Triangle& sf, const Triangle& sfbar,
                                  int n, int x);

/// SF_{n,k} = q^{sum F_i, i<k} * ovSF_{n,k} for all k <= n.
bool i1_check(const Triangle& sf, const Triangle& sfbar, int n);

/// The six closed forms for SF/ovSF at k in {n, n-1, n-2, 1, 2, 3}.
Report closed_forms_check(const Triangle& sf, const Triangle& sfbar, int n);

/// Truncated generating-function products for column k against the
/// triangles, through t^N.
bool gf_check(const Triangle& sf, const Triangle& sfbar, int k, int N);

/// Coefficient formulas for ovSF_{n,k}(q)|_{q^s}, s = 0..4, each applied
/// only inside its stated (n,k) range.
Report coeff_formulas_check(const Triangle& sfbar, int n, int k);

/// ||(-1)^{n-k} ovcF|| * ||ovSF|| = I on indices 1..N.
bool matrix_inverse_check(const Triangle& cfbar, const Triangle& sfbar, int N);

struct Verdict {
  bool holds = true;
  int violation_index = -1; // first violating coefficient index, if any
};

Verdict unimodality(const QPoly& p);
Verdict log_concavity(const QPoly& p);

/// Product of [F_i]_q for i = 1..n-1; equals ovcF_{n,1}.
QPoly chain_product(int n);

bool is_palindromic(const QPoly& p);

/// { "format": 1, "family": ..., "max_n": ..., "cells": [...] }
nlohmann::json triangle_to_json(const Triangle& t);
/// "format,family,max_n" header line then "n,k,c0 c1 ..." rows.
std::string triangle_to_csv(const Triangle& t);

} // namespace fibo
