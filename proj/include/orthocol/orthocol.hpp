#pragma once

#include "orthocol/colouring.hpp"
#include "orthocol/constructions.hpp"
#include "orthocol/designs.hpp"
#include "orthocol/errors.hpp"
#include "orthocol/graph.hpp"
#include "orthocol/json_io.hpp"
#include "orthocol/solver.hpp"
