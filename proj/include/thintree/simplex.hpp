#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

namespace thintree {

namespace detail {

template <typename T>
struct Tolerance {
  static bool negative(const T& v) { return v < 0; }
  static bool positive(const T& v) { return v > 0; }
};

template <>
struct Tolerance<double> {
  static constexpr double kEps = 1e-9;
  static bool negative(double v) { return v < -kEps; }
  static bool positive(double v) { return v > kEps; }
};

}  // namespace detail

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

/// Dense tableau simplex for min c.x subject to equality rows and x >= 0.
/// Bland's rule throughout, so exact arithmetic cannot cycle. Inequality rows
/// of the form a.x >= b can be appended after an optimal solve; they are
/// absorbed with a surplus column and a dual simplex pass.
template <typename T>
class Simplex {
  using Tol = detail::Tolerance<T>;

 public:
  explicit Simplex(std::vector<T> cost, std::int64_t pivot_limit = 200000)
      : cost_(std::move(cost)), structural_(static_cast<int>(cost_.size())), pivot_limit_(pivot_limit) {}

  void add_equality(std::vector<T> row, T rhs) {
    row.resize(structural_, T(0));
    pending_.push_back({std::move(row), std::move(rhs)});
  }

  LpStatus solve() {
    const int m = static_cast<int>(pending_.size());
    columns_ = structural_ + m;
    rows_.assign(m, std::vector<T>(columns_, T(0)));
    rhs_.assign(m, T(0));
    basis_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      T sign = Tol::negative(pending_[i].second) ? T(-1) : T(1);
      for (int j = 0; j < structural_; ++j) rows_[i][j] = sign * pending_[i].first[j];
      rhs_[i] = sign * pending_[i].second;
      rows_[i][structural_ + i] = T(1);
      basis_[i] = structural_ + i;
    }
    pending_.clear();
    // Phase one: minimise the sum of artificials.
    std::vector<T> phase_one(columns_, T(0));
    for (int j = structural_; j < columns_; ++j) phase_one[j] = T(1);
    price(phase_one);
    LpStatus status = primal(structural_);
    if (status != LpStatus::kOptimal) return status;
    T infeasibility(0);
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] >= structural_) infeasibility += rhs_[i];
    }
    if (Tol::positive(infeasibility)) return LpStatus::kInfeasible;
    drive_out_artificials();
    for (auto& row : rows_) row.resize(structural_);
    columns_ = structural_;
    std::vector<T> full_cost = cost_;
    price(full_cost);
    return primal(columns_);
  }

  /// Appends a.x >= rhs and re-optimises. Call only after an optimal solve.
  LpStatus add_cut(const std::vector<T>& a, const T& rhs) {
    const int s = columns_++;
    for (auto& row : rows_) row.push_back(T(0));
    reduced_.push_back(T(0));
    cost_.push_back(T(0));
    // -a.x + s = -rhs, with s basic, then eliminate the other basics.
    std::vector<T> row(columns_, T(0));
    for (int j = 0; j < structural_; ++j) row[j] = -a[j];
    row[s] = T(1);
    T b = -rhs;
    for (int i = 0; i < rows(); ++i) {
      T factor = row[basis_[i]];
      if (factor == T(0)) continue;
      for (int j = 0; j < columns_; ++j) row[j] -= factor * rows_[i][j];
      b -= factor * rhs_[i];
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(b));
    basis_.push_back(s);
    LpStatus status = dual();
    if (status != LpStatus::kOptimal) return status;
    return primal(columns_);
  }

  std::vector<T> primal_values() const {
    std::vector<T> x(structural_, T(0));
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  T objective() const {
    T z(0);
    for (int i = 0; i < rows(); ++i) z += cost_[basis_[i]] * rhs_[i];
    return z;
  }

  std::int64_t pivots() const { return pivots_; }
  int rows() const { return static_cast<int>(rows_.size()); }

 private:
  void price(const std::vector<T>& c) {
    reduced_.assign(columns_, T(0));
    for (int j = 0; j < columns_; ++j) {
      T d = c[j];
      for (int i = 0; i < rows(); ++i) d -= c[basis_[i]] * rows_[i][j];
      reduced_[j] = d;
    }
  }

  void pivot(int r, int col) {
    T p = rows_[r][col];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      T f = rows_[i][col];
      if (f == T(0)) continue;
      for (int j = 0; j < columns_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
      if constexpr (std::is_floating_point_v<T>) rows_[i][col] = T(0);
    }
    T f = reduced_[col];
    if (f != T(0)) {
      for (int j = 0; j < columns_; ++j) reduced_[j] -= f * rows_[r][j];
    }
    if constexpr (std::is_floating_point_v<T>) reduced_[col] = T(0);
    basis_[r] = col;
    ++pivots_;
  }

  // Primal simplex over columns [0, allowed).
  LpStatus primal(int allowed) {
    while (true) {
      if (pivots_ > pivot_limit_) return LpStatus::kIterationLimit;
      int col = -1;
      for (int j = 0; j < allowed; ++j) {
        if (Tol::negative(reduced_[j])) {
          col = j;
          break;
        }
      }
      if (col < 0) return LpStatus::kOptimal;
      int r = -1;
      T best(0);
      for (int i = 0; i < rows(); ++i) {
        if (!Tol::positive(rows_[i][col])) continue;
        T ratio = rhs_[i] / rows_[i][col];
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) return LpStatus::kUnbounded;
      pivot(r, col);
    }
  }

  LpStatus dual() {
    while (true) {
      if (pivots_ > pivot_limit_) return LpStatus::kIterationLimit;
      int r = -1;
      for (int i = 0; i < rows(); ++i) {
        if (Tol::negative(rhs_[i]) && (r < 0 || basis_[i] < basis_[r])) r = i;
      }
      if (r < 0) return LpStatus::kOptimal;
      int col = -1;
      T best(0);
      for (int j = 0; j < columns_; ++j) {
        if (!Tol::negative(rows_[r][j])) continue;
        T ratio = reduced_[j] / -rows_[r][j];
        if (col < 0 || ratio < best) {
          col = j;
          best = ratio;
        }
      }
      if (col < 0) return LpStatus::kInfeasible;
      pivot(r, col);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < rows();) {
      if (basis_[i] < structural_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < structural_; ++j) {
        if (Tol::positive(rows_[i][j]) || Tol::negative(rows_[i][j])) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        // Redundant equality.
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  std::vector<T> cost_;
  int structural_;
  int columns_ = 0;
  std::int64_t pivot_limit_;
  std::int64_t pivots_ = 0;
  std::vector<std::pair<std::vector<T>, T>> pending_;
  std::vector<std::vector<T>> rows_;
  std::vector<T> rhs_;
  std::vector<int> basis_;
  std::vector<T> reduced_;
};

}  // namespace thintree
