#pragma once

#include "core.hpp"
#include "decorated.hpp"
#include "exact.hpp"
#include "io.hpp"
#include "moves.hpp"
#include "order.hpp"
#include "twoflags.hpp"
#include "witness.hpp"
