#pragma once

#include <memory>
#include <optional>

#include "vmfb/objectives.hpp"
#include "vmfb/prox.hpp"

namespace vmfb {

/// Composite convex problem  min_{x in Y}  F(x) = f(x) + g(x), with f smooth
/// (gradient-split available) and g prox-friendly.
struct CompositeProblem {
    std::shared_ptr<const SmoothObjective> smooth;
    NonsmoothTerm nonsmooth = NonsmoothTerm::zero();
    FeasibleSet domain = FeasibleSet::all_space();
    /// Gradient Lipschitz constant, when known. Diagnostics only: the solvers
    /// discover step sizes by backtracking.
    std::optional<double> lipschitz;

    std::size_t dim() const { return smooth->dim(); }

    double objective(const Vec& x) const {
        return smooth->value(x) + nonsmooth.value(x);
    }
};

} // namespace vmfb
