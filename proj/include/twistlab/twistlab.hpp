#pragma once

// Convenience header pulling in the whole library.

#include "twistlab/algebra.hpp"
#include "twistlab/check.hpp"
#include "twistlab/classes.hpp"
#include "twistlab/definability.hpp"
#include "twistlab/error.hpp"
#include "twistlab/factors.hpp"
#include "twistlab/formula.hpp"
#include "twistlab/io.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/morphism.hpp"
#include "twistlab/representation.hpp"
#include "twistlab/term.hpp"
#include "twistlab/twist.hpp"
