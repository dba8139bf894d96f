#ifndef EDENSE_EDENSE_HPP_
#define EDENSE_EDENSE_HPP_

#include "acts.hpp"
#include "closures.hpp"
#include "construction.hpp"
#include "core.hpp"
#include "cosets.hpp"
#include "crypto.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "verify.hpp"

#endif  // EDENSE_EDENSE_HPP_
