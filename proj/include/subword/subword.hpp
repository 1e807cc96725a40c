#pragma once

// Umbrella header: exact subword (scattered subsequence) occurrence
// counting, maximal occurrence counts and subword entropy, exhaustive and
// heuristic searches for minimal-entropy words, and bivariate generating
// functions for periodic word pairs.

#include "subword/bigint.hpp"
#include "subword/binomial.hpp"
#include "subword/entropy.hpp"
#include "subword/genfunc.hpp"
#include "subword/occurrence.hpp"
#include "subword/polynomial.hpp"
#include "subword/search.hpp"
#include "subword/word.hpp"
