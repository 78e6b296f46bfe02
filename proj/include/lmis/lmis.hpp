#pragma once

#include "lmis/rational.hpp"
#include "lmis/geometry.hpp"
#include "lmis/perm_mis.hpp"
#include "lmis/partitioner.hpp"
#include "lmis/solver.hpp"
#include "lmis/oracle.hpp"
#include "lmis/generator.hpp"
#include "lmis/io.hpp"
#include "lmis/svg.hpp"
