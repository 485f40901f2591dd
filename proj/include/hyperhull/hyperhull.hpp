#pragma once

#include "hyperhull/bounds.hpp"
#include "hyperhull/checked_int.hpp"
#include "hyperhull/counters.hpp"
#include "hyperhull/errors.hpp"
#include "hyperhull/exactmath.hpp"
#include "hyperhull/factor.hpp"
#include "hyperhull/fallback.hpp"
#include "hyperhull/hull.hpp"
#include "hyperhull/lattice.hpp"
#include "hyperhull/rational.hpp"
#include "hyperhull/raycast.hpp"
#include "hyperhull/transform.hpp"
