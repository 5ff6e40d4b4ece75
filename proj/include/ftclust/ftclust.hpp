#pragma once

#include "cost.hpp"
#include "fault_tolerant.hpp"
#include "gonzalez.hpp"
#include "io.hpp"
#include "local_search.hpp"
#include "metric.hpp"
#include "neighbors.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "types.hpp"
