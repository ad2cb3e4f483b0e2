#pragma once

// Umbrella header: the whole library.

#include "chaoshash/bitstring.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/error.hpp"
#include "chaoshash/hasher.hpp"
#include "chaoshash/keystream.hpp"
#include "chaoshash/preprocess.hpp"
#include "chaoshash/reports.hpp"
#include "chaoshash/rng.hpp"
#include "chaoshash/statlab.hpp"
#include "chaoshash/topology.hpp"
