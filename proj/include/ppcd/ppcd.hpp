#pragma once

// Everything except the command-line front end.

#include "ppcd/arith.hpp"
#include "ppcd/ctbl.hpp"
#include "ppcd/degrees.hpp"
#include "ppcd/error.hpp"
#include "ppcd/hooks_enum.hpp"
#include "ppcd/lie_degrees.hpp"
#include "ppcd/partition.hpp"
