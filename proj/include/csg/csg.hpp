#pragma once

#include "csg/cone.hpp"
#include "csg/enumerate.hpp"
#include "csg/gap_check.hpp"
#include "csg/gapset.hpp"
#include "csg/order.hpp"
#include "csg/point.hpp"
#include "csg/semigroup.hpp"
#include "csg/tree.hpp"
