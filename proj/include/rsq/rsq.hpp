#pragma once

#include "rsq/errors.hpp"
#include "rsq/integer.hpp"
#include "rsq/oracle.hpp"
#include "rsq/quaternion.hpp"
#include "rsq/restricted_solver.hpp"
#include "rsq/three_squares.hpp"
#include "rsq/verify.hpp"
