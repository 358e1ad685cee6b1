#pragma once

#include "ggm/automorphism.hpp"
#include "ggm/bounds.hpp"
#include "ggm/cliques.hpp"
#include "ggm/errors.hpp"
#include "ggm/estimator.hpp"
#include "ggm/graph.hpp"
#include "ggm/group.hpp"
#include "ggm/invariant.hpp"
#include "ggm/io.hpp"
#include "ggm/linalg.hpp"
#include "ggm/orbit.hpp"
#include "ggm/preorder.hpp"
#include "ggm/report.hpp"
