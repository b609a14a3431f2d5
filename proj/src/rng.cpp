#include "gmpb/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gmpb {

double RandomSource::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::next_uniform(double lo, double hi) {
    if (lo > hi)
        throw std::invalid_argument("next_uniform: lo > hi");
    double r = lo + (hi - lo) * next_unit();
    if (r >= hi && lo < hi)
        r = std::nextafter(hi, lo);
    return r;
}

std::uint64_t RandomSource::next_below(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("next_below: empty range");
    return next_u64() % n;
}

long long RandomSource::next_int(long long lo, long long hi) {
    if (lo > hi)
        throw std::invalid_argument("next_int: lo > hi");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_below(span));
}

double RandomSource::next_gaussian() {
    if (cached_gaussian_) {
        const double g = *cached_gaussian_;
        cached_gaussian_.reset();
        return g;
    }
    double u, v, s;
    do {
        u = 2.0 * next_unit() - 1.0;
        v = 2.0 * next_unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_gaussian_ = v * f;
    return u * f;
}

std::vector<std::size_t> RandomSource::next_permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i-- > 1;)
        std::swap(p[i], p[next_below(i + 1)]);
    return p;
}

} // namespace gmpb
