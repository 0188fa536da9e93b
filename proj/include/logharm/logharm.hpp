// Umbrella header.
#pragma once

#include "logharm/bohr.hpp"
#include "logharm/bounds.hpp"
#include "logharm/catalog.hpp"
#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/map.hpp"
#include "logharm/measure.hpp"
#include "logharm/render.hpp"
#include "logharm/representation.hpp"
#include "logharm/schwarzian.hpp"
#include "logharm/slit.hpp"
#include "logharm/verification.hpp"
