#pragma once

/**
 * @file lefschetz.hpp
 * @brief Umbrella header: pulls in the whole library.
 */

#include "lefschetz/core.hpp"
#include "lefschetz/chain.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/subdivision.hpp"
#include "lefschetz/engine.hpp"
#include "lefschetz/unbounded.hpp"
#include "lefschetz/torus.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/spaces.hpp"
#include "lefschetz/suite.hpp"
