#pragma once

// Everything except the HTTP layer (conngraph/server.hpp).

#include "conngraph/canonical.hpp"
#include "conngraph/capacity.hpp"
#include "conngraph/catalog.hpp"
#include "conngraph/cliques.hpp"
#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/functors.hpp"
#include "conngraph/graph.hpp"
#include "conngraph/homotopy.hpp"
#include "conngraph/invariants.hpp"
#include "conngraph/io.hpp"
#include "conngraph/reconstruct.hpp"
#include "conngraph/session.hpp"
#include "conngraph/vertex_set.hpp"
