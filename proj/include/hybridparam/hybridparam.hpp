#ifndef HYBRIDPARAM_HYBRIDPARAM_HPP
#define HYBRIDPARAM_HYBRIDPARAM_HPP

#include "hybridparam/bench.hpp"
#include "hybridparam/branching.hpp"
#include "hybridparam/brute.hpp"
#include "hybridparam/decomposition.hpp"
#include "hybridparam/domset.hpp"
#include "hybridparam/ds_annotated.hpp"
#include "hybridparam/family.hpp"
#include "hybridparam/gen.hpp"
#include "hybridparam/graph.hpp"
#include "hybridparam/graph_io.hpp"
#include "hybridparam/minor.hpp"
#include "hybridparam/mod_schemes.hpp"
#include "hybridparam/problem.hpp"
#include "hybridparam/rng.hpp"
#include "hybridparam/selfreduce.hpp"
#include "hybridparam/td_dp.hpp"
#include "hybridparam/treewidth.hpp"
#include "hybridparam/twh_schemes.hpp"

#endif
