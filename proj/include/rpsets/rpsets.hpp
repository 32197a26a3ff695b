#ifndef RPSETS_RPSETS_HPP
#define RPSETS_RPSETS_HPP

#include "rpsets/bounds.hpp"
#include "rpsets/counting.hpp"
#include "rpsets/errors.hpp"
#include "rpsets/exact_math.hpp"
#include "rpsets/oracle.hpp"
#include "rpsets/sieve.hpp"

#endif  // RPSETS_RPSETS_HPP
