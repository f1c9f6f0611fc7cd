#ifndef UNCLOGIC_LP_HPP
#define UNCLOGIC_LP_HPP

#include <vector>

#include "unclogic/rat.hpp"

namespace unclogic {

enum class Rel { LE, GE, EQ };

struct LpConstraint {
    std::vector<Rat> coeff;
    Rel rel = Rel::LE;
    Rat rhs;
};

struct LpResult {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> point;

    bool optimal() const { return status == Status::Optimal; }
};

// Exact-rational two-phase simplex over nonnegative variables with Bland's
// anti-cycling pivot rule; fully deterministic. Throws DomainError if the
// objective is unbounded (cannot happen on probability polytopes).
LpResult solve_lp(const std::vector<Rat>& objective, const std::vector<LpConstraint>& constraints,
                  bool maximize = true);

}  // namespace unclogic

#endif
