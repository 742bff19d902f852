#ifndef ARRFREE_ARRFREE_HPP
#define ARRFREE_ARRFREE_HPP

#include "arrfree/arrangement.hpp"
#include "arrfree/errors.hpp"
#include "arrfree/field.hpp"
#include "arrfree/gin.hpp"
#include "arrfree/groebner.hpp"
#include "arrfree/input.hpp"
#include "arrfree/linear_change.hpp"
#include "arrfree/monomial.hpp"
#include "arrfree/monomial_ideal.hpp"
#include "arrfree/polynomial.hpp"
#include "arrfree/power_product.hpp"
#include "arrfree/report_io.hpp"
#include "arrfree/strongly_stable.hpp"

#endif  // ARRFREE_ARRFREE_HPP
