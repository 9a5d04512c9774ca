#pragma once

// Umbrella header for the library. The command-line front end lives in
// cli.hpp and is not pulled in here because of its argument-parsing
// dependency.

#include "exact.hpp"
#include "ext_calculus.hpp"
#include "json_io.hpp"
#include "margaux.hpp"
#include "orbit_space.hpp"
#include "rep_theory.hpp"
#include "root_system.hpp"
#include "twist_blocks.hpp"
