// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact arithmetic for the alternating series expansion of reals in (0,1)
// with strictly increasing denominators: codec and cylinder geometry,
// digit statistics along the shift, Lebesgue-measure and covering-volume
// computations for digit-restricted sets, and random series with
// independent digits.

#include "pierce/bigint.hpp"
#include "pierce/constraint.hpp"
#include "pierce/cylinder.hpp"
#include "pierce/digit_stats.hpp"
#include "pierce/errors.hpp"
#include "pierce/expansion.hpp"
#include "pierce/frequency.hpp"
#include "pierce/hausdorff.hpp"
#include "pierce/measure.hpp"
#include "pierce/parallel.hpp"
#include "pierce/random_series.hpp"
#include "pierce/rational.hpp"
#include "pierce/rng.hpp"
#include "pierce/sampler.hpp"
#include "pierce/sequence.hpp"
#include "pierce/singularity.hpp"
