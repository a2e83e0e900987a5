#pragma once

#include "k3dw/arithmetic.hpp"
#include "k3dw/boundary.hpp"
#include "k3dw/closed_gw.hpp"
#include "k3dw/error.hpp"
#include "k3dw/integer_matrix.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/period_point.hpp"
#include "k3dw/periods.hpp"
#include "k3dw/relative.hpp"
#include "k3dw/series.hpp"
#include "k3dw/wall_engine.hpp"
