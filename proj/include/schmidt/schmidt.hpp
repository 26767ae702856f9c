#pragma once

#include "schmidt/error.hpp"
#include "schmidt/integer.hpp"
#include "schmidt/quadint.hpp"
#include "schmidt/intmat.hpp"
#include "schmidt/moebius.hpp"
#include "schmidt/surd.hpp"
#include "schmidt/circle.hpp"
#include "schmidt/lattice.hpp"
#include "schmidt/arrangement.hpp"
#include "schmidt/io.hpp"
#include "schmidt/svg.hpp"
