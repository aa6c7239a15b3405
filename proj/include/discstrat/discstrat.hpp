#pragma once

#include "discstrat/rational.hpp"
#include "discstrat/monomial.hpp"
#include "discstrat/multipoly.hpp"
#include "discstrat/dense_poly.hpp"
#include "discstrat/matrix.hpp"
#include "discstrat/resultants.hpp"
#include "discstrat/strata.hpp"
#include "discstrat/verify.hpp"
#include "discstrat/ideal.hpp"
#include "discstrat/parser.hpp"
#include "discstrat/surface.hpp"
#include "discstrat/json.hpp"
