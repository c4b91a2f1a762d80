#pragma once

#include "fracsl/assembly.hpp"
#include "fracsl/convergence.hpp"
#include "fracsl/errors.hpp"
#include "fracsl/grid.hpp"
#include "fracsl/lup.hpp"
#include "fracsl/matrix.hpp"
#include "fracsl/oracle.hpp"
#include "fracsl/potential.hpp"
#include "fracsl/problem.hpp"
#include "fracsl/quadrature.hpp"
#include "fracsl/solver.hpp"
#include "fracsl/threads.hpp"
