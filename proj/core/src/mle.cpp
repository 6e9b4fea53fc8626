#include "multirisk/mle.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace multirisk {

CellEstimate mle_full(const Counts& x) {
    const std::uint64_t n = x.total();
    if (n == 0) {
        throw ValidationError(Errc::EmptySample, "cannot estimate from an empty sample");
    }
    CellEstimate est;
    est.cells.reserve(x.cells.size());
    for (auto c : x.cells) {
        est.cells.push_back(static_cast<double>(c) / static_cast<double>(n));
    }
    return est;
}

CellEstimate mle_submodel(const Counts& x, const Grouping& grouping,
                          std::span<const double> known_sums) {
    if (known_sums.size() != grouping.size()) {
        throw ValidationError(Errc::ShapeMismatch,
                              "known sums do not match the number of groups");
    }
    double total = 0.0;
    for (double c : known_sums) {
        if (c <= 0.0) {
            throw ValidationError(Errc::NonPositiveCell,
                                  "known group sums must be strictly positive");
        }
        total += c;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ValidationError(Errc::SumNotOne, "known group sums must sum to 1");
    }

    CellEstimate est;
    est.cells.assign(x.cells.size(), 0.0);
    for (std::size_t i = 0; i < grouping.size(); ++i) {
        std::uint64_t xi = 0;
        for (std::size_t idx : grouping[i]) {
            if (idx >= x.cells.size()) {
                throw ValidationError(Errc::BadGrouping, "grouping does not match counts");
            }
            xi += x.cells[idx];
        }
        if (xi == 0) {
            throw ValidationError(Errc::ZeroGroupCount,
                                  "group " + std::to_string(i + 1) +
                                      " has no observations; sample must be discarded");
        }
        for (std::size_t idx : grouping[i]) {
            est.cells[idx] = known_sums[i] * static_cast<double>(x.cells[idx]) /
                             static_cast<double>(xi);
        }
    }
    return est;
}

double log_likelihood(const Counts& x, const CellEstimate& m) {
    if (x.cells.size() != m.size()) {
        throw ValidationError(Errc::ShapeMismatch, "counts and estimate shapes differ");
    }
    double ll = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (x.cells[i] == 0) continue;
        if (m.cells[i] <= 0.0) return -std::numeric_limits<double>::infinity();
        ll += static_cast<double>(x.cells[i]) * std::log(m.cells[i]);
    }
    return ll;
}

}  // namespace multirisk
