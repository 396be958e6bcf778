#pragma once

#include "eomt/analysis.hpp"
#include "eomt/capacity.hpp"
#include "eomt/config.hpp"
#include "eomt/errors.hpp"
#include "eomt/format.hpp"
#include "eomt/gaussian.hpp"
#include "eomt/linalg.hpp"
#include "eomt/optimize.hpp"
#include "eomt/params.hpp"
#include "eomt/scattering.hpp"
