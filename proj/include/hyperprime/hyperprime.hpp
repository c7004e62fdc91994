#pragma once

/// Everything: structures and their file format, axiom checks, sub-objects,
/// classification, constructions, the corpus and the theorem harness.

#include "hyperprime/axioms.hpp"
#include "hyperprime/builders.hpp"
#include "hyperprime/classify.hpp"
#include "hyperprime/construct.hpp"
#include "hyperprime/corpus.hpp"
#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/format.hpp"
#include "hyperprime/harness.hpp"
#include "hyperprime/report.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/subobjects.hpp"
#include "hyperprime/table.hpp"
#include "hyperprime/tuples.hpp"
