#pragma once

#include "reslab/errors.hpp"
#include "reslab/monomial.hpp"
#include "reslab/ideal.hpp"
#include "reslab/fraction.hpp"
#include "reslab/arrangement.hpp"
#include "reslab/lp.hpp"
#include "reslab/invariants.hpp"
#include "reslab/calculus.hpp"
#include "reslab/asymptotics.hpp"
#include "reslab/serialize.hpp"
#include "reslab/cache.hpp"
