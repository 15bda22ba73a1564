#pragma once

#include "subfox/algebra.hpp"
#include "subfox/error.hpp"
#include "subfox/gamma.hpp"
#include "subfox/hfunction.hpp"
#include "subfox/inverse_stable.hpp"
#include "subfox/quadrature.hpp"
#include "subfox/rational.hpp"
#include "subfox/report.hpp"
#include "subfox/stable.hpp"
#include "subfox/tempered.hpp"
#include "subfox/verify.hpp"
#include "subfox/wright.hpp"
