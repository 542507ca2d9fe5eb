#pragma once

/// @file
/// Umbrella header for the permpat library.

#include "permpat/classes.hpp"
#include "permpat/containment.hpp"
#include "permpat/gfun.hpp"
#include "permpat/patterns.hpp"
#include "permpat/permutation.hpp"
#include "permpat/plot.hpp"
#include "permpat/statistics.hpp"
#include "permpat/structure.hpp"
#include "permpat/symmetry.hpp"
