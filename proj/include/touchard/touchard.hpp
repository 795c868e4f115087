#pragma once

#include "touchard/assemble.hpp"
#include "touchard/complex.hpp"
#include "touchard/errors.hpp"
#include "touchard/exact.hpp"
#include "touchard/format.hpp"
#include "touchard/lambert.hpp"
#include "touchard/log_complex.hpp"
#include "touchard/numeric.hpp"
#include "touchard/phase.hpp"
#include "touchard/saddle.hpp"
#include "touchard/series.hpp"
#include "touchard/stirling.hpp"
#include "touchard/stokes.hpp"
