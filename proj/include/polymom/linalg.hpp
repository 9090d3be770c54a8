#ifndef POLYMOM_LINALG_HPP
#define POLYMOM_LINALG_HPP

#include <utility>
#include <vector>

#include "polymom/polynomial.hpp"
#include "polymom/scalars.hpp"

namespace polymom {

// Gaussian elimination kernels over either scalar field.
// Pivot policy: exact mode picks the first nonzero entry; float mode picks the
// largest magnitude and treats |pivot| < 1e-12 * scale as singular, scale being
// the largest magnitude of the input matrix.

namespace detail {

constexpr double kPivotRel = 1e-12;

template <class S>
double float_scale(const Mat<S>& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) s = std::max(s, ScalarOps<S>::abs_approx(a(i, j)));
  return s > 0.0 ? s : 1.0;
}

template <class S>
int pick_pivot(const Mat<S>& a, Eigen::Index col, Eigen::Index from, double scale) {
  if constexpr (ScalarOps<S>::exact) {
    (void)scale;
    for (Eigen::Index r = from; r < a.rows(); ++r)
      if (!ScalarOps<S>::is_zero(a(r, col))) return static_cast<int>(r);
    return -1;
  } else {
    double best = 0.0;
    Eigen::Index best_r = -1;
    for (Eigen::Index r = from; r < a.rows(); ++r) {
      double m = ScalarOps<S>::abs_approx(a(r, col));
      if (m > best) {
        best = m;
        best_r = r;
      }
    }
    if (best_r < 0 || best < kPivotRel * scale) return -1;
    return static_cast<int>(best_r);
  }
}

}  // namespace detail

template <class S>
S det(Mat<S> a) {
  if (a.rows() != a.cols()) raise(errc::invalid_input, "determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  const double scale = ScalarOps<S>::exact ? 1.0 : detail::float_scale(a);
  S result = ScalarOps<S>::from_int(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    int piv = detail::pick_pivot(a, k, k, scale);
    if (piv < 0) return ScalarOps<S>::from_int(0);
    if (piv != k) {
      a.row(piv).swap(a.row(k));
      result = -result;
    }
    result = result * a(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (ScalarOps<S>::is_zero(a(r, k))) continue;
      S f = a(r, k) / a(k, k);
      for (Eigen::Index c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return result;
}

template <class S>
int rank(Mat<S> a) {
  const double scale = ScalarOps<S>::exact ? 1.0 : detail::float_scale(a);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = detail::pick_pivot(a, col, row, scale);
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    for (Eigen::Index r = row + 1; r < a.rows(); ++r) {
      if (ScalarOps<S>::is_zero(a(r, col))) continue;
      S f = a(r, col) / a(row, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    ++row;
  }
  return static_cast<int>(row);
}

template <class S>
Vec<S> solve(Mat<S> a, Vec<S> b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    raise(errc::invalid_input, "solve needs square A and matching b");
  const Eigen::Index n = a.rows();
  const double scale = ScalarOps<S>::exact ? 1.0 : detail::float_scale(a);
  for (Eigen::Index k = 0; k < n; ++k) {
    int piv = detail::pick_pivot(a, k, k, scale);
    if (piv < 0) raise(errc::singular_matrix, "singular system");
    if (piv != k) {
      a.row(piv).swap(a.row(k));
      std::swap(b(piv), b(k));
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (ScalarOps<S>::is_zero(a(r, k))) continue;
      S f = a(r, k) / a(k, k);
      for (Eigen::Index c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      b(r) -= f * b(k);
    }
  }
  Vec<S> x(n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    S acc = b(k);
    for (Eigen::Index c = k + 1; c < n; ++c) acc -= a(k, c) * x(c);
    x(k) = acc / a(k, k);
  }
  return x;
}

// det of the (deg p + deg q)-square Sylvester matrix, p-rows first, so
// Res(p,q) = lc(p)^deg(q) * prod q(alpha) over roots alpha of p.
template <class S>
S sylvester_resultant(const UniPoly<S>& p, const UniPoly<S>& q) {
  const int dp = p.degree(), dq = q.degree();
  if (dp < 1 || dq < 1) raise(errc::degenerate_input, "resultant needs both degrees >= 1");
  const int n = dp + dq;
  Mat<S> syl(n, n);
  syl.setConstant(ScalarOps<S>::from_int(0));
  for (int r = 0; r < dq; ++r)
    for (int i = 0; i <= dp; ++i) syl(r, r + i) = p.coeff(dp - i);
  for (int r = 0; r < dp; ++r)
    for (int i = 0; i <= dq; ++i) syl(dq + r, r + i) = q.coeff(dq - i);
  return det<S>(std::move(syl));
}

// Incremental row-space basis over an exact field; rank grows as rows arrive.
// Stored rows are reduced against earlier pivots and scaled to pivot 1. Each
// stored row also carries its expression over the accepted original rows, so
// dependent rows can be written exactly as combinations of accepted ones.
template <class S>
class RowBasis {
 public:
  explicit RowBasis(int cols) : cols_(cols) {}

  // Returns true when the row enlarged the span (the row is then "accepted").
  // When non-null and the row was dependent, *combo receives coefficients over
  // the accepted rows (in acceptance order) expressing the row exactly.
  bool insert(std::vector<S> row, std::vector<S>* combo = nullptr) {
    std::vector<S> alpha(rows_.size(), ScalarOps<S>::from_int(0));
    for (size_t b = 0; b < rows_.size(); ++b) {
      S f = row[static_cast<size_t>(pivot_[b])];
      if (ScalarOps<S>::is_zero(f)) continue;
      for (int c = pivot_[b]; c < cols_; ++c)
        row[static_cast<size_t>(c)] -= f * rows_[b][static_cast<size_t>(c)];
      for (size_t t = 0; t <= b; ++t) alpha[t] += f * expr_[b][t];
    }
    int piv = -1;
    for (int c = 0; c < cols_; ++c)
      if (!ScalarOps<S>::is_zero(row[static_cast<size_t>(c)])) {
        piv = c;
        break;
      }
    if (piv < 0) {
      if (combo) *combo = std::move(alpha);
      return false;
    }
    S lead = row[static_cast<size_t>(piv)];
    for (int c = piv; c < cols_; ++c)
      row[static_cast<size_t>(c)] = row[static_cast<size_t>(c)] / lead;
    std::vector<S> expr(rows_.size() + 1, ScalarOps<S>::from_int(0));
    for (size_t t = 0; t < alpha.size(); ++t) expr[t] = -(alpha[t] / lead);
    expr.back() = ScalarOps<S>::from_int(1) / lead;
    rows_.push_back(std::move(row));
    pivot_.push_back(piv);
    expr_.push_back(std::move(expr));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int cols_;
  std::vector<std::vector<S>> rows_;   // reduced, pivot-normalized
  std::vector<int> pivot_;
  std::vector<std::vector<S>> expr_;   // reduced row = sum expr[t] * accepted original rows
};

}  // namespace polymom

#endif
