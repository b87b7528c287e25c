#pragma once

// Umbrella header: exact-arithmetic invariants of circle actions on
// 4-manifolds presented through their weighted orbit spaces.

#include "sworbit/abelian_group.hpp"
#include "sworbit/errors.hpp"
#include "sworbit/int_matrix.hpp"
#include "sworbit/integers.hpp"
#include "sworbit/orbit_space.hpp"
#include "sworbit/presentation_io.hpp"
#include "sworbit/reduce.hpp"
#include "sworbit/report.hpp"
#include "sworbit/seiberg_witten.hpp"
#include "sworbit/smith.hpp"
