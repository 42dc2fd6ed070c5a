#pragma once

#include "hgreedy/closure.hpp"
#include "hgreedy/experiments.hpp"
#include "hgreedy/generators.hpp"
#include "hgreedy/girth.hpp"
#include "hgreedy/greedy.hpp"
#include "hgreedy/hypergraph.hpp"
#include "hgreedy/hypertree.hpp"
#include "hgreedy/io.hpp"
#include "hgreedy/oracle.hpp"
#include "hgreedy/rational.hpp"
#include "hgreedy/rng.hpp"
#include "hgreedy/theory.hpp"
#include "hgreedy/weights.hpp"
