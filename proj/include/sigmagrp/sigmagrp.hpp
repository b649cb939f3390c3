#ifndef SIGMAGRP_SIGMAGRP_HPP
#define SIGMAGRP_SIGMAGRP_HPP

#include "permutation.hpp"
#include "group.hpp"
#include "subgroup.hpp"
#include "lattice.hpp"
#include "sigma.hpp"
#include "sylowizer.hpp"
#include "classify.hpp"
#include "catalog.hpp"
#include "report.hpp"
#include "harness.hpp"

#endif // SIGMAGRP_SIGMAGRP_HPP
