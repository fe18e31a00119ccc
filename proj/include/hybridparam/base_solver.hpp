#ifndef HYBRIDPARAM_BASE_SOLVER_HPP
#define HYBRIDPARAM_BASE_SOLVER_HPP

#include <cmath>
#include <functional>
#include <memory>

#include "hybridparam/brute.hpp"
#include "hybridparam/problem.hpp"
#include "hybridparam/td_dp.hpp"

namespace hybridparam {

// Solver for instances whose graph lies in the base family. A solve call
// promises |result| <= (1+eps)*OPT for minimization, >= (1-eps)*OPT for
// maximization, or factor alpha when the guarantee is a constant.
struct BaseSolver {
    enum class Guarantee { EpsMin, EpsMax, ConstantAlpha };

    Guarantee guarantee = Guarantee::EpsMin;
    double alpha = 1.0;
    std::function<Solution(const ProblemInstance&, double)> solve;
    std::shared_ptr<long long> call_count = std::make_shared<long long>(0);

    Solution run(const ProblemInstance& inst, double eps) const {
        ++*call_count;
        return solve(inst, eps);
    }
};

namespace detail {

inline TreeDecomposition decomposition_for(const Graph& g) {
    if (g.num_vertices() <= 14) return treewidth_exact(g).second;
    return treewidth_greedy(g);
}

inline OptResult exact_opt(const ProblemInstance& inst) {
    switch (inst.kind) {
        case ProblemKind::VertexCover:
        case ProblemKind::IndependentSet:
        case ProblemKind::DominatingSet:
            return td_dp_opt(inst, decomposition_for(inst.graph));
        default:
            return brute_opt(inst);
    }
}

}  // namespace detail

// Exact solver wrapped as a base solver; trivially meets any factor.
inline BaseSolver exact_base_solver(bool maximization) {
    BaseSolver b;
    b.guarantee = maximization ? BaseSolver::Guarantee::EpsMax : BaseSolver::Guarantee::EpsMin;
    b.solve = [](const ProblemInstance& inst, double) {
        OptResult r = detail::exact_opt(inst);
        if (!r.feasible) throw input_error("base solver: infeasible family instance");
        return r.solution;
    };
    return b;
}

// Exact solve, then deliberately spend part of the allowed slack: pad a
// minimization witness (or trim a maximization one) by lambda of the granted
// epsilon. Exercises the case thresholds without breaking the guarantee.
inline BaseSolver lossy_base_solver(double lambda, bool maximization) {
    if (lambda < 0.0 || lambda > 1.0) throw input_error("lossy factor must be in [0,1]");
    BaseSolver b;
    b.guarantee = maximization ? BaseSolver::Guarantee::EpsMax : BaseSolver::Guarantee::EpsMin;
    b.solve = [lambda, maximization](const ProblemInstance& inst, double eps) {
        OptResult r = detail::exact_opt(inst);
        if (!r.feasible) throw input_error("base solver: infeasible family instance");
        if (maximization) {
            long long target = static_cast<long long>(
                std::ceil((1.0 - lambda * eps) * static_cast<double>(r.value)));
            if (r.solution.packing) {
                while (r.solution.pack.size() > target && r.solution.pack.size() > 0)
                    r.solution.pack.tuples.pop_back();
            } else {
                while (static_cast<long long>(r.solution.vertices.size()) > target &&
                       !r.solution.vertices.empty())
                    r.solution.vertices.pop_back();
            }
            return r.solution;
        }
        long long target = static_cast<long long>(
            std::floor((1.0 + lambda * eps) * static_cast<double>(r.value)));
        VertexSet s = r.solution.vertices;
        const Graph& g = inst.graph;
        bool sivc = inst.kind == ProblemKind::SetIntersectingVertexCover;
        for (Vertex v = 1; v <= g.num_vertices() &&
                           static_cast<long long>(s.size()) < target; ++v) {
            if (set_contains(s, v)) continue;
            if (sivc && set_intersect(g.neighbors(v), s).empty() &&
                !set_contains(inst.must_intersect, v))
                continue;  // padding must not spawn a component missing X
            s = set_union(s, {v});
        }
        return Solution::of(std::move(s));
    };
    return b;
}

// Maximal-matching vertex cover: both endpoints of a greedily built maximal
// matching, the textbook factor-2 algorithm.
inline BaseSolver matching_vc_base_solver() {
    BaseSolver b;
    b.guarantee = BaseSolver::Guarantee::ConstantAlpha;
    b.alpha = 2.0;
    b.solve = [](const ProblemInstance& inst, double) {
        if (inst.kind != ProblemKind::VertexCover)
            throw input_error("matching base solver handles vertex cover only");
        VertexSet s;
        for (auto [u, v] : inst.graph.edges())
            if (!set_contains(s, u) && !set_contains(s, v)) s = set_union(s, {u, v});
        return Solution::of(std::move(s));
    };
    return b;
}

}  // namespace hybridparam

#endif
