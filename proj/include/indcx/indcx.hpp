#pragma once

#include "indcx/canonical.hpp"
#include "indcx/classifier.hpp"
#include "indcx/complex.hpp"
#include "indcx/cycles.hpp"
#include "indcx/enumerate.hpp"
#include "indcx/graph.hpp"
#include "indcx/graph6.hpp"
#include "indcx/harness.hpp"
#include "indcx/homology.hpp"
#include "indcx/report.hpp"
#include "indcx/smith.hpp"
