#pragma once

#include "qperiod/bracket.hpp"
#include "qperiod/catalog.hpp"
#include "qperiod/chebyshev.hpp"
#include "qperiod/colored.hpp"
#include "qperiod/cyclotomic.hpp"
#include "qperiod/diagram_ops.hpp"
#include "qperiod/errors.hpp"
#include "qperiod/jones.hpp"
#include "qperiod/laurent.hpp"
#include "qperiod/linkfile.hpp"
#include "qperiod/numeric.hpp"
#include "qperiod/pd_code.hpp"
#include "qperiod/periodicity.hpp"
#include "qperiod/signature.hpp"
#include "qperiod/so3.hpp"
