#pragma once

// Umbrella header.

#include "segstab/candidates.hpp"
#include "segstab/core.hpp"
#include "segstab/delaunay.hpp"
#include "segstab/graph.hpp"
#include "segstab/hardness.hpp"
#include "segstab/io.hpp"
#include "segstab/minimax.hpp"
#include "segstab/predicates.hpp"
#include "segstab/proximity.hpp"
#include "segstab/setcover.hpp"
#include "segstab/solvers.hpp"
#include "segstab/stadium.hpp"
