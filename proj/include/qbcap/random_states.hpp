#pragma once

#include <random>

#include "qbcap/capacity.hpp"

namespace qbcap {

/// Flat-simplex populations; corner and center drawn uniformly from their
/// positivity discs with uniform phases.
XState sample_x_state(std::mt19937_64& rng);

/// Ginibre construction: G G^dag normalized to unit trace.
DensityOperator sample_density(std::mt19937_64& rng, int dim);

/// (G + G^dag)/2 with standard-normal entries.
ComplexMatrix sample_hermitian(std::mt19937_64& rng, int dim);

} // namespace qbcap
