#pragma once

#include <cstddef>
#include <vector>

#include "nbly/rational.hpp"

namespace nbly {

// Exact two-phase tableau simplex with Bland's rule over the rationals.
// Solves  min c.x  s.t.  A x = b, x >= 0.  Tiny dense instances only.
struct LpSolution {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rational objective{};
    std::vector<Rational> x;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()), t_(std::move(a)), basis_(m_) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (b[i] < 0) {
                for (auto& v : t_[i]) v = -v;
                b[i] = -b[i];
            }
            t_[i].resize(n_ + m_ + 1);
            t_[i][n_ + i] = 1; // artificial
            t_[i][n_ + m_] = b[i];
            basis_[i] = n_ + i;
        }
    }

    // Minimizes cost (indexed over the first n_ structural variables,
    // artificials cost 1 in phase one, 0 in phase two).
    bool phase_one() {
        std::vector<Rational> cost(n_ + m_, 0);
        for (std::size_t j = n_; j < n_ + m_; ++j) cost[j] = 1;
        Rational z = optimize(cost, /*allow_artificials=*/true);
        if (z != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Returns false on unboundedness.
    bool phase_two(const std::vector<Rational>& structural_cost, Rational& objective) {
        std::vector<Rational> cost(n_ + m_, 0);
        for (std::size_t j = 0; j < n_; ++j) cost[j] = structural_cost[j];
        unbounded_ = false;
        objective = optimize(cost, /*allow_artificials=*/false);
        return !unbounded_;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][n_ + m_];
        return x;
    }

private:
    Rational optimize(const std::vector<Rational>& cost, bool allow_artificials) {
        const std::size_t rhs = n_ + m_;
        const std::size_t limit = allow_artificials ? n_ + m_ : n_;
        for (;;) {
            // reduced cost r_j = c_j - c_B . B^{-1} A_j, entering = lowest j with r_j < 0
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                bool basic = false;
                for (std::size_t i = 0; i < m_; ++i)
                    if (basis_[i] == j) basic = true;
                if (basic) continue;
                Rational r = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (cost[basis_[i]] != 0) r -= cost[basis_[i]] * t_[i][j];
                if (r < 0) { enter = j; break; }
            }
            if (enter == limit) break;
            // ratio test, Bland ties on lowest basis index
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][rhs] / t_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) {
                unbounded_ = true;
                break;
            }
            pivot(leave, enter);
        }
        Rational z = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (cost[basis_[i]] != 0) z += cost[basis_[i]] * t_[i][rhs];
        return z;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational p = t_[row][col];
        for (auto& v : t_[row]) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            Rational f = t_[i][col];
            for (std::size_t j = 0; j <= n_ + m_; ++j) t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (t_[i][j] != 0) { col = j; break; }
            if (col < n_) pivot(i, col);
            // else: redundant row, the artificial stays basic at value zero
        }
    }

    std::size_t m_, n_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
    bool unbounded_ = false;
};

} // namespace detail

inline LpSolution solve_standard_lp(std::vector<std::vector<Rational>> a,
                                    std::vector<Rational> b,
                                    const std::vector<Rational>& c) {
    detail::SimplexTableau tab(std::move(a), std::move(b));
    LpSolution out;
    if (!tab.phase_one()) {
        out.status = LpSolution::Status::infeasible;
        return out;
    }
    if (!tab.phase_two(c, out.objective)) {
        out.status = LpSolution::Status::unbounded;
        return out;
    }
    out.status = LpSolution::Status::optimal;
    out.x = tab.solution();
    return out;
}

} // namespace nbly
