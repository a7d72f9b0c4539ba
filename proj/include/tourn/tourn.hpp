#pragma once

#include "classify.hpp"
#include "config.hpp"
#include "construct.hpp"
#include "digraph.hpp"
#include "embed.hpp"
#include "io.hpp"
#include "problab.hpp"
#include "reduce.hpp"
#include "rng.hpp"
#include "search.hpp"
