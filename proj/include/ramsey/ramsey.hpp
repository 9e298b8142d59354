#pragma once

#include "ramsey/arrowing.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/classifier.hpp"
#include "ramsey/density.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/enumerator.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/graph_spec.hpp"
#include "ramsey/random_ramsey.hpp"
