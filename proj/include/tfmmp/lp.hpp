#pragma once

#include <optional>
#include <vector>

#include "tfmmp/rational.hpp"

namespace tfmmp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  std::vector<Rat> x;
  // Farkas certificate for infeasible problems: a vector y over the
  // constraint rows with y^T A <= 0 componentwise (in standard form) and
  // y^T b > 0. Empty when not applicable.
  std::vector<Rat> farkas;
};

enum class Rel { Le, Eq, Ge };

// Exact-rational linear programs at desk scale. Variables are free
// (unbounded both ways) unless constrained explicitly. Bland's rule, so no
// cycling; all arithmetic in mpq.
class LpProblem {
 public:
  explicit LpProblem(int num_vars);

  int num_vars() const { return num_vars_; }
  void add_constraint(const std::vector<Rat>& coeffs, Rel rel, const Rat& rhs);

  LpResult minimize(const std::vector<Rat>& objective) const;
  LpResult maximize(const std::vector<Rat>& objective) const;
  // Phase-I only.
  LpResult check_feasible() const;

 private:
  int num_vars_;
  struct Row {
    std::vector<Rat> coeffs;
    Rel rel;
    Rat rhs;
  };
  std::vector<Row> rows_;
};

}  // namespace tfmmp
