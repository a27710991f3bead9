#include "tfmmp/lp.hpp"

#include <algorithm>

#include "tfmmp/errors.hpp"

namespace tfmmp {

LpProblem::LpProblem(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw TfError(ErrorCode::Internal, "negative variable count");
}

void LpProblem::add_constraint(const std::vector<Rat>& coeffs, Rel rel, const Rat& rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars_)
    throw TfError(ErrorCode::Internal, "constraint length mismatch");
  rows_.push_back(Row{coeffs, rel, rhs});
}

namespace {

// Dense simplex tableau over mpq. Standard form: min c x, A x = b, x >= 0,
// b >= 0. Artificial columns are kept in the tableau so that a Farkas
// certificate can be read off after an infeasible phase I.
struct Tableau {
  int m = 0;       // rows
  int n = 0;       // structural + slack columns (artificials follow)
  int total = 0;   // n + m artificial columns
  std::vector<std::vector<Rat>> a;  // m x total
  std::vector<Rat> b;               // m
  std::vector<int> basis;           // m, column index of each basic variable

  Rat value_of(int col) const {
    for (int r = 0; r < m; ++r)
      if (basis[static_cast<size_t>(r)] == col) return b[static_cast<size_t>(r)];
    return Rat(0);
  }

  void pivot(int row, int col) {
    auto& pivot_row = a[static_cast<size_t>(row)];
    const Rat p = pivot_row[static_cast<size_t>(col)];
    for (auto& v : pivot_row) v /= p;
    b[static_cast<size_t>(row)] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      Rat factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (factor == 0) continue;
      auto& target = a[static_cast<size_t>(r)];
      for (int c = 0; c < total; ++c) target[static_cast<size_t>(c)] -= factor * pivot_row[static_cast<size_t>(c)];
      b[static_cast<size_t>(r)] -= factor * b[static_cast<size_t>(row)];
    }
    basis[static_cast<size_t>(row)] = col;
  }

  // Bland's rule simplex on columns [0, limit). Returns false when unbounded.
  bool run(std::vector<Rat>& cost, Rat& objective, int limit) {
    while (true) {
      // Reduced costs: cost is kept updated (we maintain the full cost row).
      int enter = -1;
      for (int c = 0; c < limit; ++c) {
        if (cost[static_cast<size_t>(c)] < 0) { enter = c; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best_ratio;
      for (int r = 0; r < m; ++r) {
        const Rat& coef = a[static_cast<size_t>(r)][static_cast<size_t>(enter)];
        if (coef <= 0) continue;
        Rat ratio = b[static_cast<size_t>(r)] / coef;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leave)])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      // Update the cost row alongside the pivot.
      Rat factor = cost[static_cast<size_t>(enter)] / a[static_cast<size_t>(leave)][static_cast<size_t>(enter)];
      pivot(leave, enter);
      const auto& prow = a[static_cast<size_t>(leave)];
      for (int c = 0; c < total; ++c) cost[static_cast<size_t>(c)] -= factor * prow[static_cast<size_t>(c)];
      objective -= factor * b[static_cast<size_t>(leave)];
    }
  }
};

}  // namespace

LpResult LpProblem::minimize(const std::vector<Rat>& objective) const {
  if (static_cast<int>(objective.size()) != num_vars_)
    throw TfError(ErrorCode::Internal, "objective length mismatch");

  const int m = static_cast<int>(rows_.size());
  // Column layout: 2 * num_vars_ split columns (x = p - q), then one slack per
  // inequality row, then m artificial columns.
  int num_slacks = 0;
  for (const auto& row : rows_)
    if (row.rel != Rel::Eq) ++num_slacks;
  const int n = 2 * num_vars_ + num_slacks;

  Tableau t;
  t.m = m;
  t.n = n;
  t.total = n + m;
  t.a.assign(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(t.total)));
  t.b.assign(static_cast<size_t>(m), Rat(0));
  t.basis.assign(static_cast<size_t>(m), -1);

  int slack = 2 * num_vars_;
  for (int r = 0; r < m; ++r) {
    const Row& row = rows_[static_cast<size_t>(r)];
    bool flip = row.rhs < 0;
    Rat sign = flip ? Rat(-1) : Rat(1);
    for (int j = 0; j < num_vars_; ++j) {
      Rat c = sign * row.coeffs[static_cast<size_t>(j)];
      t.a[static_cast<size_t>(r)][static_cast<size_t>(2 * j)] = c;
      t.a[static_cast<size_t>(r)][static_cast<size_t>(2 * j + 1)] = -c;
    }
    if (row.rel != Rel::Eq) {
      // Le: +slack, Ge: -slack; a flipped row swaps the direction.
      bool le = (row.rel == Rel::Le) != flip;
      t.a[static_cast<size_t>(r)][static_cast<size_t>(slack)] = le ? Rat(1) : Rat(-1);
      ++slack;
    }
    t.b[static_cast<size_t>(r)] = sign * row.rhs;
    t.a[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = 1;  // artificial
    t.basis[static_cast<size_t>(r)] = n + r;
  }

  // Phase I: minimize the sum of artificials.
  std::vector<Rat> cost1(static_cast<size_t>(t.total), Rat(0));
  Rat obj1 = 0;
  for (int r = 0; r < m; ++r) {
    // cost row = c - c_B B^-1 A with c = indicator of artificials and the
    // artificial basis: subtract each constraint row.
    for (int c = 0; c < t.total; ++c) cost1[static_cast<size_t>(c)] -= t.a[static_cast<size_t>(r)][static_cast<size_t>(c)];
    obj1 -= t.b[static_cast<size_t>(r)];
  }
  for (int r = 0; r < m; ++r) cost1[static_cast<size_t>(n + r)] += 1;
  t.run(cost1, obj1, t.total);

  LpResult result;
  if (obj1 != 0) {
    result.status = LpStatus::Infeasible;
    // Farkas: y = c_B B^-1 read from the artificial columns (B^-1 lives there).
    result.farkas.assign(static_cast<size_t>(m), Rat(0));
    for (int i = 0; i < m; ++i) {
      Rat y = 0;
      for (int r = 0; r < m; ++r) {
        int bc = t.basis[static_cast<size_t>(r)];
        if (bc >= n) y += t.a[static_cast<size_t>(r)][static_cast<size_t>(n + i)];
      }
      // Flip back the sign used to make b nonnegative.
      if (rows_[static_cast<size_t>(i)].rhs < 0) y = -y;
      result.farkas[static_cast<size_t>(i)] = y;
    }
    return result;
  }

  // Drive any artificial still in the basis out (degenerate rows).
  for (int r = 0; r < m; ++r) {
    if (t.basis[static_cast<size_t>(r)] < n) continue;
    int col = -1;
    for (int c = 0; c < n; ++c) {
      if (t.a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { col = c; break; }
    }
    if (col >= 0) t.pivot(r, col);
    // A fully zero row is redundant; its artificial stays basic at value 0.
  }

  // Phase II on structural columns.
  std::vector<Rat> cost2(static_cast<size_t>(t.total), Rat(0));
  for (int j = 0; j < num_vars_; ++j) {
    cost2[static_cast<size_t>(2 * j)] = objective[static_cast<size_t>(j)];
    cost2[static_cast<size_t>(2 * j + 1)] = -objective[static_cast<size_t>(j)];
  }
  Rat obj2 = 0;
  // Reduce the cost row against the current basis.
  for (int r = 0; r < m; ++r) {
    int bc = t.basis[static_cast<size_t>(r)];
    Rat factor = cost2[static_cast<size_t>(bc)];
    if (factor == 0) continue;
    const auto& prow = t.a[static_cast<size_t>(r)];
    for (int c = 0; c < t.total; ++c) cost2[static_cast<size_t>(c)] -= factor * prow[static_cast<size_t>(c)];
    obj2 -= factor * t.b[static_cast<size_t>(r)];
  }
  // Forbid re-entering artificial columns by pricing them out of range.
  bool ok = t.run(cost2, obj2, n);
  if (!ok) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.objective = -obj2;
  result.x.assign(static_cast<size_t>(num_vars_), Rat(0));
  for (int j = 0; j < num_vars_; ++j)
    result.x[static_cast<size_t>(j)] = t.value_of(2 * j) - t.value_of(2 * j + 1);
  return result;
}

LpResult LpProblem::maximize(const std::vector<Rat>& objective) const {
  std::vector<Rat> neg(objective);
  for (auto& c : neg) c = -c;
  LpResult r = minimize(neg);
  if (r.status == LpStatus::Optimal) r.objective = -r.objective;
  return r;
}

LpResult LpProblem::check_feasible() const {
  return minimize(std::vector<Rat>(static_cast<size_t>(num_vars_), Rat(0)));
}

}  // namespace tfmmp
