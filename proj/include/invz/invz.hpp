#pragma once

// Umbrella header.

#include "invz/analysis.hpp"
#include "invz/arith.hpp"
#include "invz/catalog.hpp"
#include "invz/closed_forms.hpp"
#include "invz/errors.hpp"
#include "invz/flats.hpp"
#include "invz/kls.hpp"
#include "invz/matroid.hpp"
#include "invz/polynomial.hpp"
#include "invz/stressed.hpp"
