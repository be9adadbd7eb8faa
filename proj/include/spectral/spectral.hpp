#pragma once

#include "spectral/canonical.hpp"
#include "spectral/clique.hpp"
#include "spectral/decision.hpp"
#include "spectral/digits.hpp"
#include "spectral/error.hpp"
#include "spectral/linear.hpp"
#include "spectral/mask.hpp"
#include "spectral/measure.hpp"
#include "spectral/numbers.hpp"
#include "spectral/residues.hpp"
#include "spectral/rng.hpp"
#include "spectral/spectra.hpp"
