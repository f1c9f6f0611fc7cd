#include "unclogic/lp.hpp"

#include <cstddef>

namespace unclogic {

namespace {

class Tableau {
public:
    // columns: n original vars, then slacks/surpluses, then artificials; last is rhs
    std::vector<std::vector<Rat>> row;
    std::vector<Rat> obj;  // reduced-cost row, entering while obj[j] < 0
    Rat obj_rhs;
    std::vector<int> basis;     // basic variable per row
    std::vector<bool> banned;   // columns excluded from entering (artificials in phase 2)
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / row[r][c];
        for (auto& v : row[r]) v *= inv;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i == r || row[i][c] == 0) continue;
            Rat f = row[i][c];
            for (std::size_t j = 0; j <= cols; ++j) row[i][j] -= f * row[r][j];
        }
        if (obj[c] != 0) {
            Rat f = obj[c];
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * row[r][j];
            obj_rhs -= f * row[r][cols];
        }
        basis[r] = static_cast<int>(c);
    }

    // Bland's rule: entering = lowest-index improving column; leaving = min
    // ratio, ties broken by lowest basic variable index.
    // Returns false when optimal; throws on unbounded.
    bool step() {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!banned[j] && obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) return false;
        std::size_t leave = row.size();
        Rat best;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i][enter] <= 0) continue;
            Rat ratio = row[i][cols] / row[i][enter];
            if (leave == row.size() || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == row.size()) throw DomainError("linear program is unbounded");
        pivot(leave, enter);
        return true;
    }

    void run() {
        while (step()) {}
    }
};

}  // namespace

LpResult solve_lp(const std::vector<Rat>& objective, const std::vector<LpConstraint>& constraints,
                  bool maximize) {
    const std::size_t n = objective.size();
    for (const auto& c : constraints)
        if (c.coeff.size() != n)
            throw DomainError("LP constraint arity does not match objective arity");

    // normalize to rhs >= 0
    std::vector<LpConstraint> cons = constraints;
    for (auto& c : cons) {
        if (c.rhs < 0) {
            for (auto& a : c.coeff) a = -a;
            c.rhs = -c.rhs;
            if (c.rel == Rel::LE)
                c.rel = Rel::GE;
            else if (c.rel == Rel::GE)
                c.rel = Rel::LE;
        }
    }

    const std::size_t m = cons.size();
    std::size_t n_slack = 0, n_art = 0;
    for (const auto& c : cons) {
        if (c.rel != Rel::EQ) ++n_slack;
        if (c.rel != Rel::LE) ++n_art;
    }

    Tableau t;
    t.cols = n + n_slack + n_art;
    t.row.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
    t.obj.assign(t.cols, Rat(0));
    t.obj_rhs = 0;
    t.basis.assign(m, -1);
    t.banned.assign(t.cols, false);

    std::size_t slack_at = n, art_at = n + n_slack;
    std::vector<std::size_t> art_cols;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.row[i][j] = cons[i].coeff[j];
        t.row[i][t.cols] = cons[i].rhs;
        switch (cons[i].rel) {
            case Rel::LE:
                t.row[i][slack_at] = 1;
                t.basis[i] = static_cast<int>(slack_at++);
                break;
            case Rel::GE:
                t.row[i][slack_at++] = -1;
                t.row[i][art_at] = 1;
                t.basis[i] = static_cast<int>(art_at);
                art_cols.push_back(art_at++);
                break;
            case Rel::EQ:
                t.row[i][art_at] = 1;
                t.basis[i] = static_cast<int>(art_at);
                art_cols.push_back(art_at++);
                break;
        }
    }

    if (n_art > 0) {
        // phase 1: maximize -(sum of artificials)
        for (std::size_t c : art_cols) t.obj[c] = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.obj[t.basis[i]] != 0) {
                Rat f = t.obj[t.basis[i]];
                for (std::size_t j = 0; j < t.cols; ++j) t.obj[j] -= f * t.row[i][j];
                t.obj_rhs -= f * t.row[i][t.cols];
            }
        }
        t.run();
        if (t.obj_rhs != 0) return {LpResult::Status::Infeasible, Rat(0), {}};
        // drive leftover artificials out of the basis (their rhs is zero)
        for (std::size_t i = 0; i < m; ++i) {
            if (static_cast<std::size_t>(t.basis[i]) < n + n_slack) continue;
            std::size_t c = t.cols;
            for (std::size_t j = 0; j < n + n_slack; ++j) {
                if (t.row[i][j] != 0) {
                    c = j;
                    break;
                }
            }
            if (c < t.cols) t.pivot(i, c);
            // otherwise the row is redundant; it stays with an artificial at
            // value zero, which is harmless with artificial columns banned
        }
        for (std::size_t c : art_cols) t.banned[c] = true;
    }

    // phase 2
    for (std::size_t j = 0; j < t.cols; ++j) t.obj[j] = 0;
    t.obj_rhs = 0;
    for (std::size_t j = 0; j < n; ++j) t.obj[j] = maximize ? -objective[j] : objective[j];
    for (std::size_t i = 0; i < m; ++i) {
        int b = t.basis[i];
        if (t.obj[b] != 0) {
            Rat f = t.obj[b];
            for (std::size_t j = 0; j < t.cols; ++j) t.obj[j] -= f * t.row[i][j];
            t.obj_rhs -= f * t.row[i][t.cols];
        }
    }
    t.run();

    LpResult res;
    res.status = LpResult::Status::Optimal;
    res.objective = maximize ? t.obj_rhs : -t.obj_rhs;
    res.point.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= 0 && static_cast<std::size_t>(t.basis[i]) < n)
            res.point[t.basis[i]] = t.row[i][t.cols];
    return res;
}

}  // namespace unclogic
