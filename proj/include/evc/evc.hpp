#pragma once

#include "evc/duality.hpp"
#include "evc/evalcode.hpp"
#include "evc/families.hpp"
#include "evc/field.hpp"
#include "evc/groebner.hpp"
#include "evc/invariants.hpp"
#include "evc/linalg.hpp"
#include "evc/points.hpp"
#include "evc/poly.hpp"
#include "evc/text.hpp"
