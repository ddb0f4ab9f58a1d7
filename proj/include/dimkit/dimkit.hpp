#pragma once

#include "dimkit/errors.hpp"
#include "dimkit/graph.hpp"
#include "dimkit/io.hpp"
#include "dimkit/poset.hpp"
#include "dimkit/recognize.hpp"
#include "dimkit/reductions.hpp"
#include "dimkit/search.hpp"
#include "dimkit/solvers.hpp"
#include "dimkit/verify.hpp"
