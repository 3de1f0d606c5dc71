#pragma once

#include "mdioph/bigint.hpp"
#include "mdioph/catalog.hpp"
#include "mdioph/crosscheck.hpp"
#include "mdioph/ntcore.hpp"
#include "mdioph/oracle.hpp"
#include "mdioph/report.hpp"
#include "mdioph/solver.hpp"
