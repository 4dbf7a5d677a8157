#pragma once

#include "cliffkin/errors.hpp"
#include "cliffkin/rational.hpp"
#include "cliffkin/signature.hpp"
#include "cliffkin/blade.hpp"
#include "cliffkin/linalg.hpp"
#include "cliffkin/polynomial.hpp"
#include "cliffkin/quadric.hpp"
#include "cliffkin/multivector.hpp"
#include "cliffkin/groups.hpp"
#include "cliffkin/dualities.hpp"
#include "cliffkin/kinmap.hpp"
#include "cliffkin/catalog.hpp"
#include "cliffkin/json_io.hpp"
