#include "epik/stats.hpp"

#include "epik/error.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace epik {

namespace {

inline double xlogx(std::uint64_t c) {
    return c == 0 ? 0.0 : static_cast<double>(c) * std::log(static_cast<double>(c));
}

} // namespace

double entropy(std::span<const std::uint32_t> counts, std::uint64_t total) {
    std::uint64_t sum = 0;
    for (const std::uint32_t c : counts) {
        sum += c;
    }
    if (sum != total || total == 0) {
        throw InconsistentCountsError("entropy: counts sum to " + std::to_string(sum) +
                                      ", expected total " + std::to_string(total));
    }
    const double t = static_cast<double>(total);
    double h = 0.0;
    for (const std::uint32_t c : counts) {
        if (c > 0) {
            const double p = static_cast<double>(c) / t;
            h -= p * std::log(p);
        }
    }
    return h < 0.0 ? 0.0 : h;
}

double mutual_information(const ContingencyTable& ct) {
    // H(X) + H(Y) - H(X,Y) rewritten over raw counts:
    //   MI = ln m - (Sx + Sy - Sxy) / m,  with S* = sum of c*ln(c).
    // All accumulated terms are non-negative, so the only cancellation is the
    // final subtraction. Per-row case/control terms are added as one
    // expression to keep the result invariant under swapping the two classes.
    assert(ct.case_counts.size() == ct.control_counts.size());
    std::uint64_t cases_total = 0;
    std::uint64_t controls_total = 0;
    double sx = 0.0;
    double sxy = 0.0;
    for (std::size_t r = 0; r < ct.rows(); ++r) {
        const std::uint32_t a = ct.case_counts[r];
        const std::uint32_t b = ct.control_counts[r];
        cases_total += a;
        controls_total += b;
        sx += xlogx(static_cast<std::uint64_t>(a) + b);
        sxy += xlogx(a) + xlogx(b);
    }
    const std::uint64_t m = cases_total + controls_total;
    if (m == 0) {
        throw EmptyTableError("mutual information of an empty contingency table");
    }
    const double sy = xlogx(cases_total) + xlogx(controls_total);
    const double mi =
        std::log(static_cast<double>(m)) - (sx + sy - sxy) / static_cast<double>(m);
    return mi < 0.0 ? 0.0 : mi;
}

} // namespace epik
