#include "gmpb/dynamics.hpp"

#include "gmpb/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmpb {

double reflect(double value, double delta, double lo, double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("reflect: lo must be < hi");
    double x = value + delta;
    for (int i = 0; i < 1024 && (x < lo || x > hi); ++i) {
        if (x < lo)
            x = 2.0 * lo - x;
        else
            x = 2.0 * hi - x;
    }
    return std::clamp(x, lo, hi);
}

std::vector<double> shift_center(const Component& comp, double shift_severity, Interval bounds,
                                 RandomSource& rng) {
    if (shift_severity < 0.0)
        throw std::invalid_argument("shift_center: negative severity");
    std::vector<double> out = comp.center;
    if (shift_severity == 0.0)
        return out;
    const int d = comp.dimension();
    std::vector<double> dir(d);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (int j = 0; j < d; ++j) {
            dir[j] = rng.next_gaussian();
            norm += dir[j] * dir[j];
        }
        norm = std::sqrt(norm);
    } while (norm == 0.0);
    for (int j = 0; j < d; ++j)
        out[j] = reflect(comp.center[j], shift_severity * dir[j] / norm, bounds.lo, bounds.hi);
    return out;
}

Component advance_component(const Component& comp, const SeverityBundle& sev,
                            const ParameterBounds& bounds, RandomSource& rng, bool rotate) {
    Component next = comp;
    next.center = shift_center(comp, sev.shift, bounds.search, rng);
    if (sev.height != 0.0)
        next.height =
            reflect(comp.height, sev.height * rng.next_gaussian(), bounds.height.lo, bounds.height.hi);
    if (sev.width != 0.0)
        for (std::size_t j = 0; j < next.widths.size(); ++j)
            next.widths[j] =
                reflect(comp.widths[j], sev.width * rng.next_gaussian(), bounds.width.lo, bounds.width.hi);
    if (sev.angle != 0.0)
        next.angle =
            reflect(comp.angle, sev.angle * rng.next_gaussian(), bounds.angle.lo, bounds.angle.hi);
    if (sev.eta != 0.0)
        for (int l = 0; l < 4; ++l)
            next.eta[l] =
                reflect(comp.eta[l], sev.eta * rng.next_gaussian(), bounds.eta.lo, bounds.eta.hi);
    if (sev.tau != 0.0)
        next.tau = reflect(comp.tau, sev.tau * rng.next_gaussian(), bounds.tau.lo, bounds.tau.hi);
    if (rotate && comp.dimension() > 1)
        next.rotation = rotate_update(comp.rotation, next.angle, rng);
    return next;
}

ProblemInstance advance_environment(const ProblemInstance& prob, RandomSource& rng) {
    ProblemInstance next = prob;
    for (SubFunction& sf : next.sub_functions)
        for (Component& comp : sf.components)
            comp = advance_component(comp, sf.severities, next.bounds, rng, next.rotation_enabled);
    ++next.environment_index;
    return next;
}

} // namespace gmpb
