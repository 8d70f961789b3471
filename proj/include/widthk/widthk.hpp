#pragma once

// Umbrella header.

#include <widthk/chern.hpp>
#include <widthk/json_io.hpp>
#include <widthk/linalg.hpp>
#include <widthk/poly.hpp>
#include <widthk/rational.hpp>
#include <widthk/ring.hpp>
#include <widthk/rng.hpp>
#include <widthk/systems.hpp>
#include <widthk/width.hpp>
