#pragma once

#include "errors.hpp"
#include "euler.hpp"
#include "io.hpp"
#include "kl.hpp"
#include "kw.hpp"
#include "laurent.hpp"
#include "order.hpp"
#include "weights.hpp"
