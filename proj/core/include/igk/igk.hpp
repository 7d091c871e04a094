#pragma once

#include "igk/builtins.hpp"
#include "igk/dsl.hpp"
#include "igk/error.hpp"
#include "igk/infoloss.hpp"
#include "igk/json_io.hpp"
#include "igk/markov.hpp"
#include "igk/measures.hpp"
#include "igk/models.hpp"
#include "igk/parallel.hpp"
#include "igk/power_measure.hpp"
#include "igk/sample_space.hpp"
#include "igk/version.hpp"
