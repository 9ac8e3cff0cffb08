#pragma once

#include "bregman/kinds.hpp"
#include "bregman/lambert_w.hpp"
#include "bregman/legendre.hpp"
#include "bregman/matrix.hpp"
#include "bregman/multiblock.hpp"
#include "bregman/oracle.hpp"
#include "bregman/phi.hpp"
#include "bregman/problem.hpp"
#include "bregman/problem_file.hpp"
#include "bregman/prox.hpp"
#include "bregman/root_find.hpp"
#include "bregman/schedule.hpp"
#include "bregman/solver.hpp"
#include "bregman/trace_io.hpp"
