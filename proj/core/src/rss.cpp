#include "multirisk/rss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace multirisk {

namespace {

// Upper limit of the bracketing search relative to n0.
constexpr std::uint64_t kMaxExpansionFactor = 64;

}  // namespace

RssResult required_sample_size(const RiskExpansion& reference, const RiskExpansion& search,
                               std::uint64_t n0) {
    if (n0 == 0) throw std::invalid_argument("n0 must be positive");
    // A zero first-order coefficient means a zero-dimensional (fully known)
    // model; its risk expansion cannot match a positive target.
    if (search.first_order <= 0.0) {
        throw ValidationError(Errc::DegenerateSubmodel,
                              "the searched model has zero leading risk term");
    }
    const double target = eval_risk(reference, n0);
    if (!(target > 0.0)) {
        throw ValidationError(Errc::DegenerateSubmodel,
                              "reference risk at n0 is not positive");
    }

    // Solve b x^2 + a x - target = 0 for x = 1/n*.
    const double a = search.first_order;
    const double b = search.second_order;
    double x;
    if (b == 0.0) {
        x = target / a;
    } else {
        const double disc = a * a + 4.0 * b * target;
        if (disc < 0.0) {
            throw ValidationError(Errc::DegenerateSubmodel,
                                  "searched expansion never reaches the target risk");
        }
        x = 2.0 * target / (a + std::sqrt(disc));
    }
    if (!(x > 0.0)) {
        throw ValidationError(Errc::DegenerateSubmodel,
                              "no positive root for the required sample size");
    }

    RssResult out;
    out.root = 1.0 / x;
    out.n_star = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(out.root)));
    out.bracket_lo = out.bracket_hi = out.root;
    return out;
}

RssResult rss_approx(const ProbTable& m, std::uint64_t n0) {
    return required_sample_size(full_expansion(m), submodel_expansion(m), n0);
}

RssResult rss_sim(const ProbTable& m, std::uint64_t n0, const SimConfig& cfg) {
    return rss_sim_between(m, ModelKind::Full, ModelKind::Submodel, n0, cfg);
}

RssResult rss_sim_between(const ProbTable& m, ModelKind reference, ModelKind search,
                          std::uint64_t n0, const SimConfig& cfg) {
    if (n0 == 0) throw std::invalid_argument("n0 must be positive");
    const double target = simulate_risk(m, reference, n0, cfg).mean;

    RssResult out;
    auto evaluate = [&](std::uint64_t n) {
        ++out.iterations;
        return simulate_risk(m, search, n, cfg);
    };

    const RiskEstimate at_n0 = evaluate(n0);
    if (at_n0.mean == target) {
        // Identical streams (e.g. the model compared with itself).
        out.n_star = n0;
        out.root = static_cast<double>(n0);
        out.bracket_lo = out.bracket_hi = out.root;
        return out;
    }

    // Simulated risk is treated as decreasing in n. Expand away from n0
    // until the target is bracketed.
    std::uint64_t lo, hi;
    RiskEstimate glo, ghi;
    std::uint64_t step = std::max<std::uint64_t>(1, n0 / 8);
    if (at_n0.mean > target) {
        lo = n0;
        glo = at_n0;
        hi = n0 + step;
        ghi = evaluate(hi);
        while (ghi.mean > target) {
            if (hi >= n0 * kMaxExpansionFactor) {
                throw SimulationError(Errc::NonMonotoneEstimate,
                                      "no downward crossing of the target risk by n = " +
                                          std::to_string(hi) +
                                          "; increase replicates or check the query");
            }
            lo = hi;
            glo = ghi;
            step *= 2;
            hi = lo + step;
            ghi = evaluate(hi);
        }
    } else {
        hi = n0;
        ghi = at_n0;
        if (n0 == 1) {
            out.n_star = 1;
            out.root = 1.0;
            out.bracket_lo = out.bracket_hi = 1.0;
            return out;
        }
        lo = n0 > step ? n0 - step : 1;
        glo = evaluate(lo);
        while (glo.mean < target) {
            if (lo == 1) {
                // The searched model beats the target even at n = 1.
                out.n_star = 1;
                out.root = 1.0;
                out.bracket_lo = 1.0;
                out.bracket_hi = static_cast<double>(hi);
                return out;
            }
            hi = lo;
            ghi = glo;
            step *= 2;
            lo = lo > step ? lo - step : 1;
            glo = evaluate(lo);
        }
    }

    // Bisect down to a grid fine enough that the risk slope dominates the
    // Monte Carlo noise, then interpolate.
    const std::uint64_t stop_width = std::max<std::uint64_t>(2, n0 / 64);
    while (hi - lo > stop_width) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        const RiskEstimate gmid = evaluate(mid);
        const double slack =
            6.0 * std::sqrt(gmid.std_error * gmid.std_error +
                            std::max(glo.std_error, ghi.std_error) *
                                std::max(glo.std_error, ghi.std_error));
        if (gmid.mean > glo.mean + slack || gmid.mean < ghi.mean - slack) {
            throw SimulationError(Errc::NonMonotoneEstimate,
                                  "simulated risk is not monotone over the bracket; "
                                  "increase replicates");
        }
        if (gmid.mean >= target) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
            ghi = gmid;
        }
    }

    if (!(glo.mean > ghi.mean)) {
        throw SimulationError(Errc::NonMonotoneEstimate,
                              "bracket endpoints are not ordered; increase replicates");
    }
    const double frac = (glo.mean - target) / (glo.mean - ghi.mean);
    out.root = static_cast<double>(lo) + frac * static_cast<double>(hi - lo);
    out.n_star = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(out.root)));
    out.bracket_lo = static_cast<double>(lo);
    out.bracket_hi = static_cast<double>(hi);
    return out;
}

}  // namespace multirisk
