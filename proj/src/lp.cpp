#include "groupcast/lp.hpp"

#include <stdexcept>

namespace groupcast {

namespace {

class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
            const std::vector<Rational>& c)
        : rows_((int)A.size()), nvars_((int)c.size()) {
        nslack_ = rows_;
        // artificials only for rows that start infeasible (b_i < 0)
        for (int i = 0; i < rows_; ++i)
            if (b[i] < Rational(0)) art_row_.push_back(i);
        nart_ = (int)art_row_.size();
        ncols_ = nvars_ + nslack_ + nart_;

        t_.assign(rows_, std::vector<Rational>(ncols_ + 1));
        basis_.assign(rows_, -1);
        in_basis_.assign(ncols_, 0);
        int art = 0;
        for (int i = 0; i < rows_; ++i) {
            bool flip = b[i] < Rational(0);
            for (int j = 0; j < nvars_; ++j) t_[i][j] = flip ? -A[i][j] : A[i][j];
            t_[i][nvars_ + i] = flip ? Rational(-1) : Rational(1);  // slack
            t_[i][ncols_] = flip ? -b[i] : b[i];
            if (flip) {
                int acol = nvars_ + nslack_ + art;
                t_[i][acol] = Rational(1);
                basis_[i] = acol;
                ++art;
            } else {
                basis_[i] = nvars_ + i;
            }
            in_basis_[basis_[i]] = 1;
        }
        cost_.assign(ncols_, Rational(0));
        for (int j = 0; j < nvars_; ++j) cost_[j] = c[j];
    }

    void run_two_phase() {
        if (nart_ > 0) {
            std::vector<Rational> phase1(ncols_, Rational(0));
            for (int a = 0; a < nart_; ++a) phase1[nvars_ + nslack_ + a] = Rational(1);
            simplex(phase1, /*block_artificials=*/false);
            if (objective(phase1) != Rational(0)) throw std::runtime_error("lp: infeasible");
            remove_artificials();
        }
        simplex(cost_, /*block_artificials=*/true);
    }

    LpSolution solution() const {
        LpSolution s;
        s.x.assign(nvars_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            if (basis_[i] < nvars_) s.x[basis_[i]] = t_[i][ncols_];
        s.value = Rational(0);
        for (int j = 0; j < nvars_; ++j) s.value += cost_[j] * s.x[j];
        return s;
    }

private:
    Rational objective(const std::vector<Rational>& c) const {
        Rational v(0);
        for (int i = 0; i < rows_; ++i) v += c[basis_[i]] * t_[i][ncols_];
        return v;
    }

    // reduced cost of column j for cost vector c: c_j - c_B . B^-1 A_j
    Rational reduced_cost(const std::vector<Rational>& c, int j) const {
        Rational z(0);
        for (int i = 0; i < rows_; ++i) {
            if (!t_[i][j].is_zero()) z += c[basis_[i]] * t_[i][j];
        }
        return c[j] - z;
    }

    void pivot(int pr, int pc) {
        Rational piv = t_[pr][pc];
        for (auto& x : t_[pr]) x /= piv;
        for (int i = 0; i < rows_; ++i) {
            if (i == pr || t_[i][pc].is_zero()) continue;
            Rational f = t_[i][pc];
            for (int j = 0; j <= ncols_; ++j) {
                if (!t_[pr][j].is_zero()) t_[i][j] -= f * t_[pr][j];
            }
        }
        in_basis_[basis_[pr]] = 0;
        in_basis_[pc] = 1;
        basis_[pr] = pc;
    }

    void simplex(const std::vector<Rational>& c, bool block_artificials) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (block_artificials && j >= nvars_ + nslack_) break;
                if (in_basis_[j]) continue;
                if (reduced_cost(c, j) < Rational(0)) {  // Bland: first improving column
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return;  // optimal
            int leave = -1;
            Rational best_ratio(0);
            for (int i = 0; i < rows_; ++i) {
                if (!(t_[i][enter] > Rational(0))) continue;
                Rational ratio = t_[i][ncols_] / t_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {  // Bland tie-break
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw std::runtime_error("lp: unbounded");
            pivot(leave, enter);
        }
    }

    // after a feasible phase 1: pivot basic artificials out, drop redundant rows
    void remove_artificials() {
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < nvars_ + nslack_) continue;
            int pc = -1;
            for (int j = 0; j < nvars_ + nslack_; ++j) {
                if (!t_[i][j].is_zero()) {
                    pc = j;
                    break;
                }
            }
            if (pc >= 0) {
                pivot(i, pc);
            } else {
                in_basis_[basis_[i]] = 0;
                t_.erase(t_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --rows_;
                --i;
            }
        }
    }

    int rows_, nvars_, nslack_ = 0, nart_ = 0, ncols_ = 0;
    std::vector<int> art_row_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
    std::vector<char> in_basis_;
    std::vector<Rational> cost_;
};

}  // namespace

LpSolution solve_lp_min(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
    if (A.size() != b.size()) throw std::invalid_argument("lp: A and b size mismatch");
    for (const auto& row : A)
        if (row.size() != c.size()) throw std::invalid_argument("lp: row width mismatch");
    Tableau t(A, b, c);
    t.run_two_phase();
    return t.solution();
}

}  // namespace groupcast
