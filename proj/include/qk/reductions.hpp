#pragma once

#include "qk/reductions/b2sat.hpp"
#include "qk/reductions/coloring_three_disjoint.hpp"
#include "qk/reductions/gutin.hpp"
#include "qk/reductions/sat_two_disjoint.hpp"
#include "qk/reductions/set_cover.hpp"
#include "qk/reductions/vertex_cover.hpp"
