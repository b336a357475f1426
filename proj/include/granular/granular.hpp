#pragma once

#include "granular/core.hpp"
#include "granular/graph.hpp"
#include "granular/table.hpp"
#include "granular/rough.hpp"
#include "granular/resolving.hpp"
#include "granular/discern.hpp"
#include "granular/zerodiv.hpp"
#include "granular/io.hpp"
