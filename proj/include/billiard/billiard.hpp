#pragma once

#include "billiard/counting.hpp"
#include "billiard/grid.hpp"
#include "billiard/oracle.hpp"
#include "billiard/render.hpp"
#include "billiard/sweep.hpp"
#include "billiard/trajectory.hpp"
