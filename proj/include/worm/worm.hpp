#pragma once

#include "worm/base.hpp"
#include "worm/coloring.hpp"
#include "worm/constructions.hpp"
#include "worm/copies.hpp"
#include "worm/graph.hpp"
#include "worm/graph6.hpp"
#include "worm/io.hpp"
#include "worm/partitions.hpp"
#include "worm/solver.hpp"
