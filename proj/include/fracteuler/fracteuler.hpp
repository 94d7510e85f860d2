#pragma once

#include "fracteuler/core.hpp"
#include "fracteuler/special_functions.hpp"
#include "fracteuler/mixture_densities.hpp"
#include "fracteuler/samplers.hpp"
#include "fracteuler/euler_schemes.hpp"
#include "fracteuler/graph_laplacian.hpp"
#include "fracteuler/master_equation.hpp"
#include "fracteuler/ctrw_ssa.hpp"
#include "fracteuler/csv.hpp"
