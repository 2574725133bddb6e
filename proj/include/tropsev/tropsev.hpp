#pragma once

#include "tropsev/errors.hpp"
#include "tropsev/arith.hpp"
#include "tropsev/lattice.hpp"
#include "tropsev/matrix.hpp"
#include "tropsev/lp.hpp"
#include "tropsev/subdivision.hpp"
#include "tropsev/initial_forms.hpp"
#include "tropsev/dual_curve.hpp"
#include "tropsev/torus_group.hpp"
#include "tropsev/severi.hpp"
#include "tropsev/intersection.hpp"
#include "tropsev/enumeration.hpp"
#include "tropsev/sampling.hpp"
#include "tropsev/json_io.hpp"
#include "tropsev/svg.hpp"
