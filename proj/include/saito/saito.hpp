#pragma once

// Umbrella header: exact division of exterior forms by families of 1-forms
// over rational polynomial rings and their quotients, with Gröbner-basis
// machinery, depth computation, and exactness certification.

#include "saito/depth.hpp"
#include "saito/division.hpp"
#include "saito/exterior.hpp"
#include "saito/groebner.hpp"
#include "saito/module_gb.hpp"
#include "saito/parser.hpp"
#include "saito/polynomial.hpp"
#include "saito/problem.hpp"
#include "saito/ring.hpp"
