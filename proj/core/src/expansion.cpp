#include "multirisk/expansion.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace multirisk {

namespace {

void require_two_stage(const ProbTable& m) {
    if (m.group_count() < 2) {
        throw std::invalid_argument("two-stage expansions require at least 2 groups");
    }
}

struct StageInputs {
    std::vector<std::size_t> dims;
    std::vector<double> coeffs;
};

StageInputs full_second_stages(const ProbTable& m) {
    StageInputs s;
    s.dims.reserve(m.group_count());
    s.coeffs.reserve(m.group_count());
    for (std::size_t i = 0; i < m.group_count(); ++i) {
        s.dims.push_back(m.group_size(i) - 1);
        s.coeffs.push_back(second_stage_coefficient(m, i));
    }
    return s;
}

}  // namespace

double eval_risk(const RiskExpansion& e, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    const double nn = static_cast<double>(n);
    return e.first_order / nn + e.second_order / (nn * nn);
}

RiskExpansion full_expansion(const ProbTable& m) {
    RiskExpansion e;
    e.first_order = static_cast<double>(m.cell_count() - 1) / 2.0;
    e.second_order = (m.sum_inverse() - 1.0) / 12.0;
    return e;
}

double second_stage_coefficient(const ProbTable& m, std::size_t group) {
    double inv = 0.0;
    for (std::size_t idx : m.grouping()[group]) inv += 1.0 / m.cell(idx);
    return 2.0 * (m.group_sum(group) * inv - 1.0);
}

RiskExpansion two_stage_expansion(const ProbTable& m,
                                  std::span<const std::size_t> stage_dims,
                                  std::span<const double> stage_coeffs) {
    require_two_stage(m);
    if (stage_dims.size() != m.group_count() || stage_coeffs.size() != m.group_count()) {
        throw std::invalid_argument("one dimension and one coefficient required per group");
    }
    std::size_t dim = m.group_count() - 1;
    double b = -2.0;
    for (std::size_t i = 0; i < m.group_count(); ++i) {
        dim += stage_dims[i];
        b += (stage_coeffs[i] + 2.0) / m.group_sum(i);
    }
    return {static_cast<double>(dim) / 2.0, b / 24.0};
}

RiskExpansion two_stage_expansion(const ProbTable& m) {
    const auto s = full_second_stages(m);
    return two_stage_expansion(m, s.dims, s.coeffs);
}

RiskExpansion submodel_expansion(const ProbTable& m,
                                 std::span<const std::size_t> stage_dims,
                                 std::span<const double> stage_coeffs) {
    require_two_stage(m);
    if (stage_dims.size() != m.group_count() || stage_coeffs.size() != m.group_count()) {
        throw std::invalid_argument("one dimension and one coefficient required per group");
    }
    std::size_t dim = 0;
    double b = 0.0;
    for (std::size_t i = 0; i < m.group_count(); ++i) {
        dim += stage_dims[i];
        const double mi = m.group_sum(i);
        b += (stage_coeffs[i] + 12.0 * (1.0 - mi) * static_cast<double>(stage_dims[i])) / mi;
    }
    return {static_cast<double>(dim) / 2.0, b / 24.0};
}

RiskExpansion submodel_expansion(const ProbTable& m) {
    require_two_stage(m);
    // Specialized closed form for full second stages.
    const std::size_t groups = m.group_count();
    const std::size_t dim = m.cell_count() - 1;  // p' of the two-stage model
    double b = m.sum_inverse();
    for (std::size_t i = 0; i < groups; ++i) {
        b += (6.0 * static_cast<double>(m.group_size(i)) - 7.0) / m.group_sum(i);
    }
    b -= 6.0 * static_cast<double>(dim + 1 - groups);
    return {static_cast<double>(dim - (groups - 1)) / 2.0, b / 12.0};
}

RiskExpansion risk_difference(const ProbTable& m) {
    require_two_stage(m);
    const std::size_t groups = m.group_count();
    const std::size_t dim = m.cell_count() - 1;
    double b = 5.0 + 6.0 * (static_cast<double>(dim) - static_cast<double>(groups));
    for (std::size_t i = 0; i < groups; ++i) {
        b -= (6.0 * static_cast<double>(m.group_size(i)) - 7.0) / m.group_sum(i);
    }
    return {static_cast<double>(groups - 1) / 2.0, b / 12.0};
}

std::uint64_t negativity_threshold(const ProbTable& m) {
    const RiskExpansion diff = risk_difference(m);
    if (diff.second_order >= 0.0 || diff.first_order <= 0.0) return 0;
    // diff(n) < 0 iff n < -b/a; the threshold is the largest such integer,
    // excluding an exact integer root where the difference is zero.
    auto t = static_cast<std::uint64_t>(std::floor(-diff.second_order / diff.first_order));
    while (t > 0 && eval_risk(diff, t) >= 0.0) --t;
    while (eval_risk(diff, t + 1) < 0.0) ++t;
    return t;
}

}  // namespace multirisk
