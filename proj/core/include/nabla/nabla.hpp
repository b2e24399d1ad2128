#pragma once

#include "nabla/bigint.hpp"
#include "nabla/composition_graph.hpp"
#include "nabla/composition_word.hpp"
#include "nabla/counting.hpp"
#include "nabla/errors.hpp"
#include "nabla/exterior_calculus.hpp"
#include "nabla/nontrivial.hpp"
#include "nabla/polynomial.hpp"
#include "nabla/recurrence.hpp"
