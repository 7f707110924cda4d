#pragma once

#include "wprm/error.hpp"
#include "wprm/field.hpp"
#include "wprm/space.hpp"
#include "wprm/poly.hpp"
#include "wprm/ideal.hpp"
#include "wprm/footprint.hpp"
#include "wprm/bounds.hpp"
#include "wprm/extremal.hpp"
#include "wprm/reduce.hpp"
#include "wprm/codes.hpp"
