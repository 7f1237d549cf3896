// uqp.hpp — umbrella header.

#pragma once

#include "uqp/algebra.hpp"
#include "uqp/hopf.hpp"
#include "uqp/io.hpp"
#include "uqp/laurent.hpp"
#include "uqp/letters.hpp"
#include "uqp/oracle.hpp"
#include "uqp/parse.hpp"
#include "uqp/qbinom.hpp"
#include "uqp/tensor.hpp"
#include "uqp/verify.hpp"
