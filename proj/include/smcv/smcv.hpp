#pragma once

#include "coloring.hpp"
#include "digraph.hpp"
#include "families.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "partitions.hpp"
#include "random.hpp"
#include "solvers.hpp"
#include "validate.hpp"
