#pragma once

// Umbrella header: structured linearizations of rational matrices via
// generalized Fiedler pencils with repetition.

#include "gfpr/block_matrices.hpp"
#include "gfpr/complex_matrix.hpp"
#include "gfpr/demos.hpp"
#include "gfpr/generators.hpp"
#include "gfpr/index_tuples.hpp"
#include "gfpr/pencil.hpp"
#include "gfpr/pencil_builder.hpp"
#include "gfpr/problem_io.hpp"
#include "gfpr/realization.hpp"
#include "gfpr/verification.hpp"
