// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

// Umbrella header for the whole library.

#ifndef FFC_FFC_HPP
#define FFC_FFC_HPP

#include "ffc/convolution.hpp"
#include "ffc/errors.hpp"
#include "ffc/generators.hpp"
#include "ffc/graph.hpp"
#include "ffc/io.hpp"
#include "ffc/linalg_float.hpp"
#include "ffc/matrix.hpp"
#include "ffc/parallel.hpp"
#include "ffc/permutation.hpp"
#include "ffc/poly.hpp"
#include "ffc/quad_scalar.hpp"
#include "ffc/quadrature.hpp"
#include "ffc/rational.hpp"
#include "ffc/rng.hpp"
#include "ffc/search.hpp"
#include "ffc/sturm.hpp"
#include "ffc/transforms.hpp"

namespace ffc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ffc

#endif  // FFC_FFC_HPP
