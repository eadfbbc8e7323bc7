#pragma once

// Umbrella header for the rwa library.

#include "rwa/combinatorics.hpp"
#include "rwa/csv.hpp"
#include "rwa/densities.hpp"
#include "rwa/moments.hpp"
#include "rwa/rational.hpp"
#include "rwa/rng.hpp"
#include "rwa/sampling.hpp"
#include "rwa/stats.hpp"
