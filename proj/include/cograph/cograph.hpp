#pragma once

#include "cograph/adjacency.hpp"
#include "cograph/constructions.hpp"
#include "cograph/cotree.hpp"
#include "cograph/enumerator.hpp"
#include "cograph/errors.hpp"
#include "cograph/ext_int.hpp"
#include "cograph/io.hpp"
#include "cograph/oracle.hpp"
#include "cograph/profile.hpp"
#include "cograph/report.hpp"
#include "cograph/sequence.hpp"
#include "cograph/checks.hpp"
