#ifndef ENABLING_LP_HH
#define ENABLING_LP_HH

#include <enabling/rational.hh>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace enabling
{
    enum class Relation
    {
        less_equal,
        greater_equal,
        equal
    };

    enum class Sense
    {
        maximise,
        minimise
    };

    struct LinearConstraint
    {
        std::vector<Rational> coefficients;
        Relation relation;
        Rational rhs;
    };

    /// optimise objective . x subject to the constraints and x >= 0.
    struct LinearProgram
    {
        Sense sense = Sense::maximise;
        std::vector<Rational> objective;
        std::vector<LinearConstraint> constraints;
    };

    struct LpSolution
    {
        Rational optimum;
        std::vector<Rational> primal;
        /// One multiplier per constraint. For a maximisation, <= rows carry
        /// y >= 0, >= rows y <= 0 and equality rows are free.
        std::vector<Rational> dual;
        Rational dual_objective;
        std::size_t pivots = 0;
    };

    class LpInfeasible : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class LpUnbounded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * Two-phase dense tableau simplex over the rationals with Bland's rule.
     * The returned primal solution is a basic optimum; the dual is read off
     * the final basis. Both are checked for feasibility and equal objective
     * values before returning, and a failure there throws LemmaViolation.
     */
    auto solve_lp_exact(const LinearProgram & lp) -> LpSolution;

    /// Independent recheck: primal and dual feasibility plus equal objectives.
    auto certifies_optimality(const LinearProgram & lp, const LpSolution & solution) -> bool;
}

#endif
