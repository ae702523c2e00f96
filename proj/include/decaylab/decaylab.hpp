// decaylab.hpp — umbrella header.

#pragma once

#include "decaylab/constants.hpp"
#include "decaylab/model.hpp"
#include "decaylab/self_energy.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/quadrature.hpp"
#include "decaylab/root_finding.hpp"
#include "decaylab/amplitude.hpp"
#include "decaylab/analysis.hpp"
#include "decaylab/format.hpp"
#include "decaylab/validation.hpp"
#include "decaylab/reports.hpp"
