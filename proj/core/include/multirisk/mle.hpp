#pragma once

#include <span>

#include "multirisk/prob_table.hpp"

namespace multirisk {

// Full-model MLE: relative frequencies x_ij / n.
CellEstimate mle_full(const Counts& x);

// MLE under known group sums: m_hat_ij = c_i * x_ij / x_i. where c are the
// known sums. Every group must have a positive count; per the discard rule
// the caller drops samples for which that fails.
CellEstimate mle_submodel(const Counts& x, const Grouping& grouping,
                          std::span<const double> known_sums);

// Multinomial log-likelihood up to the constant term, sum x_ij log m_ij.
// Returns -inf if the estimate puts zero mass on an observed cell.
double log_likelihood(const Counts& x, const CellEstimate& m);

}  // namespace multirisk
