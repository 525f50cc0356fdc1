#pragma once

#include "combinat.hpp"
#include "error.hpp"
#include "qseries.hpp"
#include "character_table.hpp"
#include "symfunc.hpp"
#include "frobchar.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "verify.hpp"
#include "format.hpp"
#include "cache.hpp"
