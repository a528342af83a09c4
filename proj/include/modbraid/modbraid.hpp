#ifndef MODBRAID_MODBRAID_HPP_
#define MODBRAID_MODBRAID_HPP_

#include "arith.hpp"
#include "braid.hpp"
#include "burau.hpp"
#include "chain.hpp"
#include "error.hpp"
#include "ext_group.hpp"
#include "figures.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"
#include "presentation.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "strand.hpp"
#include "todd_coxeter.hpp"

#endif  // MODBRAID_MODBRAID_HPP_
