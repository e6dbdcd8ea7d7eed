#include <enabling/lp.hh>
#include <enabling/graph.hh>

#include <optional>

using std::optional;
using std::size_t;
using std::vector;

namespace enabling
{
    namespace
    {
        class Tableau
        {
            private:
                size_t _rows, _cols;
                vector<vector<Rational>> _a;
                vector<Rational> _rhs;
                vector<Rational> _profit;
                vector<size_t> _basis;
                vector<bool> _may_enter;
                size_t _pivots = 0;

            public:
                Tableau(vector<vector<Rational>> a, vector<Rational> rhs, vector<size_t> basis) :
                    _rows(a.size()),
                    _cols(a.empty() ? 0 : a.front().size()),
                    _a(std::move(a)),
                    _rhs(std::move(rhs)),
                    _basis(std::move(basis)),
                    _may_enter(_cols, true)
                {
                }

                auto cols() const -> size_t { return _cols; }
                auto pivots() const -> size_t { return _pivots; }
                auto basis() const -> const vector<size_t> & { return _basis; }
                auto rhs() const -> const vector<Rational> & { return _rhs; }
                auto entry(size_t r, size_t c) const -> const Rational & { return _a[r][c]; }
                auto profit(size_t c) const -> const Rational & { return _profit[c]; }

                auto forbid(size_t c) -> void { _may_enter[c] = false; }

                /// Reduced profits c_j - c_B B^-1 A_j for the given costs.
                auto set_objective(const vector<Rational> & cost) -> void
                {
                    _profit = cost;
                    for (size_t r = 0; r < _rows; ++r) {
                        const auto & cb = cost[_basis[r]];
                        if (cb == 0)
                            continue;
                        for (size_t c = 0; c < _cols; ++c)
                            if (_a[r][c] != 0)
                                _profit[c] -= cb * _a[r][c];
                    }
                }

                auto pivot(size_t pr, size_t pc) -> void
                {
                    ++_pivots;
                    Rational inv = 1 / _a[pr][pc];
                    vector<size_t> nonzero;
                    for (size_t c = 0; c < _cols; ++c)
                        if (_a[pr][c] != 0) {
                            _a[pr][c] *= inv;
                            nonzero.push_back(c);
                        }
                    _rhs[pr] *= inv;

                    Rational factor;
                    for (size_t r = 0; r < _rows; ++r) {
                        if (r == pr || _a[r][pc] == 0)
                            continue;
                        factor = _a[r][pc];
                        for (auto c : nonzero)
                            _a[r][c] -= factor * _a[pr][c];
                        _rhs[r] -= factor * _rhs[pr];
                    }
                    if (_profit[pc] != 0) {
                        factor = _profit[pc];
                        for (auto c : nonzero)
                            _profit[c] -= factor * _a[pr][c];
                    }
                    _basis[pr] = pc;
                }

                /// Runs Bland's rule to optimality. Returns false if unbounded.
                auto optimise() -> bool
                {
                    while (true) {
                        optional<size_t> entering;
                        for (size_t c = 0; c < _cols; ++c)
                            if (_may_enter[c] && _profit[c] > 0) {
                                entering = c;
                                break;
                            }
                        if (! entering)
                            return true;

                        optional<size_t> leaving;
                        Rational best, ratio;
                        for (size_t r = 0; r < _rows; ++r) {
                            if (_a[r][*entering] <= 0)
                                continue;
                            ratio = _rhs[r] / _a[r][*entering];
                            if (! leaving || ratio < best || (ratio == best && _basis[r] < _basis[*leaving])) {
                                leaving = r;
                                best = ratio;
                            }
                        }
                        if (! leaving)
                            return false;
                        pivot(*leaving, *entering);
                    }
                }
        };

        auto flip(Relation r) -> Relation
        {
            switch (r) {
                case Relation::less_equal: return Relation::greater_equal;
                case Relation::greater_equal: return Relation::less_equal;
                case Relation::equal: return Relation::equal;
            }
            return r;
        }

        auto dot(const vector<Rational> & a, const vector<Rational> & b) -> Rational
        {
            Rational s = 0;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != 0 && b[i] != 0)
                    s += a[i] * b[i];
            return s;
        }

        auto check_shape(const LinearProgram & lp) -> void
        {
            for (const auto & row : lp.constraints)
                if (row.coefficients.size() != lp.objective.size())
                    throw InvalidArgument{ "constraint width does not match the number of variables" };
        }
    }

    auto solve_lp_exact(const LinearProgram & lp) -> LpSolution
    {
        check_shape(lp);
        auto vars = lp.objective.size();
        auto rows = lp.constraints.size();
        bool minimise = lp.sense == Sense::minimise;

        // Normalise to non-negative right-hand sides, remembering the sign.
        vector<int> sign(rows, 1);
        vector<Relation> relation(rows);
        for (size_t i = 0; i < rows; ++i) {
            relation[i] = lp.constraints[i].relation;
            if (lp.constraints[i].rhs < 0) {
                sign[i] = -1;
                relation[i] = flip(relation[i]);
            }
        }

        size_t slacks = 0, artificials = 0;
        for (auto r : relation) {
            if (r != Relation::equal)
                ++slacks;
            if (r != Relation::less_equal)
                ++artificials;
        }
        auto cols = vars + slacks + artificials;

        vector<vector<Rational>> a(rows, vector<Rational>(cols));
        vector<Rational> rhs(rows);
        vector<size_t> basis(rows), identity(rows);
        vector<bool> is_artificial(cols, false);
        size_t next_slack = vars, next_artificial = vars + slacks;
        for (size_t i = 0; i < rows; ++i) {
            const auto & con = lp.constraints[i];
            for (size_t j = 0; j < vars; ++j)
                if (con.coefficients[j] != 0)
                    a[i][j] = sign[i] * con.coefficients[j];
            rhs[i] = sign[i] * con.rhs;
            if (relation[i] == Relation::less_equal) {
                a[i][next_slack] = 1;
                identity[i] = next_slack++;
            }
            else {
                if (relation[i] == Relation::greater_equal)
                    a[i][next_slack++] = -1;
                a[i][next_artificial] = 1;
                is_artificial[next_artificial] = true;
                identity[i] = next_artificial++;
            }
            basis[i] = identity[i];
        }

        Tableau t{ std::move(a), std::move(rhs), basis };

        if (artificials > 0) {
            vector<Rational> phase_one(cols);
            for (size_t c = 0; c < cols; ++c)
                if (is_artificial[c])
                    phase_one[c] = -1;
            t.set_objective(phase_one);
            t.optimise();
            Rational infeasibility = 0;
            for (size_t r = 0; r < rows; ++r)
                if (is_artificial[t.basis()[r]])
                    infeasibility += t.rhs()[r];
            if (infeasibility > 0)
                throw LpInfeasible{ "linear program is infeasible (phase one residual " + to_string(infeasibility) + ")" };

            // Drive zero-level artificials out where a real column allows it;
            // rows where none does are redundant and stay put.
            for (size_t r = 0; r < rows; ++r) {
                if (! is_artificial[t.basis()[r]])
                    continue;
                for (size_t c = 0; c < cols; ++c)
                    if (! is_artificial[c] && t.entry(r, c) != 0) {
                        t.pivot(r, c);
                        break;
                    }
            }
            for (size_t c = 0; c < cols; ++c)
                if (is_artificial[c])
                    t.forbid(c);
        }

        vector<Rational> cost(cols);
        for (size_t j = 0; j < vars; ++j)
            cost[j] = minimise ? Rational{ -lp.objective[j] } : lp.objective[j];
        t.set_objective(cost);
        if (! t.optimise())
            throw LpUnbounded{ "linear program is unbounded" };

        LpSolution solution;
        solution.pivots = t.pivots();
        solution.primal.assign(vars, Rational{ 0 });
        for (size_t r = 0; r < rows; ++r)
            if (t.basis()[r] < vars)
                solution.primal[t.basis()[r]] = t.rhs()[r];

        solution.dual.resize(rows);
        for (size_t i = 0; i < rows; ++i) {
            Rational y = -t.profit(identity[i]);
            solution.dual[i] = (sign[i] * (minimise ? -1 : 1)) * y;
        }

        solution.optimum = dot(lp.objective, solution.primal);
        solution.dual_objective = 0;
        for (size_t i = 0; i < rows; ++i)
            solution.dual_objective += solution.dual[i] * lp.constraints[i].rhs;

        if (! certifies_optimality(lp, solution))
            throw LemmaViolation{ "simplex returned a primal/dual pair that fails the strong duality check: primal "
                + to_string(solution.optimum) + ", dual " + to_string(solution.dual_objective) };
        return solution;
    }

    auto certifies_optimality(const LinearProgram & lp, const LpSolution & s) -> bool
    {
        check_shape(lp);
        auto vars = lp.objective.size();
        auto rows = lp.constraints.size();
        if (s.primal.size() != vars || s.dual.size() != rows)
            return false;

        for (const auto & x : s.primal)
            if (x < 0)
                return false;
        for (const auto & con : lp.constraints) {
            Rational lhs = dot(con.coefficients, s.primal);
            switch (con.relation) {
                case Relation::less_equal: if (lhs > con.rhs) return false; break;
                case Relation::greater_equal: if (lhs < con.rhs) return false; break;
                case Relation::equal: if (lhs != con.rhs) return false; break;
            }
        }

        // Dual of max c.x: multipliers on <= rows non-negative, on >= rows
        // non-positive, and A^T y >= c. Minimisation mirrors every sign.
        int orient = lp.sense == Sense::maximise ? 1 : -1;
        for (size_t i = 0; i < rows; ++i) {
            auto y = orient * sgn(s.dual[i]);
            if (lp.constraints[i].relation == Relation::less_equal && y < 0)
                return false;
            if (lp.constraints[i].relation == Relation::greater_equal && y > 0)
                return false;
        }
        for (size_t j = 0; j < vars; ++j) {
            Rational column = 0;
            for (size_t i = 0; i < rows; ++i)
                if (lp.constraints[i].coefficients[j] != 0)
                    column += lp.constraints[i].coefficients[j] * s.dual[i];
            if (orient * sgn(column - lp.objective[j]) < 0)
                return false;
        }

        Rational primal = dot(lp.objective, s.primal);
        Rational dual = 0;
        for (size_t i = 0; i < rows; ++i)
            dual += s.dual[i] * lp.constraints[i].rhs;
        return primal == dual && primal == s.optimum && dual == s.dual_objective;
    }
}
