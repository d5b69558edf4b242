#include "nn/grad_check.hpp"

#include <cmath>
#include <cstddef>

#include "core/error.hpp"

namespace adlab::nn {

double grad_check(const std::function<double()>& loss, const std::vector<ParamRef>& refs,
                  const std::vector<double>& analytic, double h) {
    double max_rel = 0.0;
    std::size_t flat = 0;
    for (const auto& ref : refs) {
        for (std::size_t i = 0; i < ref.n; ++i, ++flat) {
            const double saved = ref.value[i];
            ref.value[i] = saved + h;
            const double f_plus = loss();
            ref.value[i] = saved - h;
            const double f_minus = loss();
            ref.value[i] = saved;
            if (!std::isfinite(f_plus) || !std::isfinite(f_minus))
                throw NumericError("grad_check: non-finite loss during perturbation");
            const double fd = (f_plus - f_minus) / (2.0 * h);
            const double rel = std::abs(analytic[flat] - fd) / std::max(1.0, std::abs(fd));
            if (rel > max_rel) max_rel = rel;
        }
    }
    return max_rel;
}

double grad_check_refs(const std::function<double()>& loss, const std::function<void()>& backward,
                       std::vector<ParamRef> refs, double h) {
    backward();
    return grad_check(loss, refs, flatten_grads(refs), h);
}

std::vector<double> flatten_grads(const std::vector<ParamRef>& refs) {
    std::vector<double> out;
    std::size_t total = 0;
    for (const auto& r : refs) total += r.n;
    out.reserve(total);
    for (const auto& r : refs)
        for (std::size_t i = 0; i < r.n; ++i) out.push_back(r.grad[i]);
    return out;
}

} // namespace adlab::nn
