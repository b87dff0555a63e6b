#pragma once

#include "schurlab/bigint.hpp"
#include "schurlab/colouring.hpp"
#include "schurlab/divisors.hpp"
#include "schurlab/greedy.hpp"
#include "schurlab/integer_set.hpp"
#include "schurlab/intervals.hpp"
#include "schurlab/lab.hpp"
#include "schurlab/patterns.hpp"
#include "schurlab/product_schur.hpp"
#include "schurlab/sampler.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/triples.hpp"
#include "schurlab/tuple_count.hpp"
