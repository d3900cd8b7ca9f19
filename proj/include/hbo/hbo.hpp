#pragma once

// Everything except the command-line layer.

#include "hbo/algorithm2.hpp"
#include "hbo/combinatorics.hpp"
#include "hbo/elements.hpp"
#include "hbo/errors.hpp"
#include "hbo/export.hpp"
#include "hbo/ground_set.hpp"
#include "hbo/orders.hpp"
#include "hbo/poset.hpp"
#include "hbo/relation_graph.hpp"
#include "hbo/suites.hpp"
#include "hbo/verify.hpp"
#include "hbo/weyl.hpp"
