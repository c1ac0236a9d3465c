#include "dos/dp.hpp"

#include <stdexcept>

#include "dos/combinatorics.hpp"

namespace dos {

double accept_value(const Instance& instance, int i, int ell) {
    const int n = instance.size();
    if (!(1 <= ell && ell <= i && i <= n)) throw std::invalid_argument("accept_value: bad state");
    double sum = 0.0;
    // local_rank_prob vanishes outside j in [ell, ell + n - i]
    for (int j = ell; j <= ell + n - i; ++j)
        sum += instance.value(j) * local_rank_prob(n, i, j, ell);
    return sum * static_cast<double>(i) / static_cast<double>(n);
}

double dp_optimal(const Instance& instance, int h) {
    const int n = instance.size();
    if (h < 0 || h > n) throw std::invalid_argument("dp_optimal: need 0 <= h <= N");
    double value_next = instance.default_tail();  // V_{N+1}
    for (int i = n; i >= h + 1; --i) {
        double acc = 0.0;
        for (int ell = 1; ell <= i; ++ell)
            acc += std::max(accept_value(instance, i, ell), value_next);
        value_next = acc / static_cast<double>(i);
    }
    return value_next;
}

}  // namespace dos
