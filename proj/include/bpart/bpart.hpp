#pragma once

#include "bpart/core.hpp"
#include "bpart/counting.hpp"
#include "bpart/enumerate.hpp"
#include "bpart/peelpatch.hpp"
#include "bpart/textio.hpp"
#include "bpart/verify.hpp"
